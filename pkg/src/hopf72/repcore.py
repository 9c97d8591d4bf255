"""Finite-dimensional modules over A_[a]: Verma modules, simples, radicals and submodule lattices.

Every module is stored on a weight basis: basis vector i has weight
``weights[i]`` (an index into ``group_data(3).elems``) and ``xs[t]`` is the
matrix of x_t.  Delta-functions act diagonally.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .presentation import (BASIS_WORDS, M4, X12, X13, X23, build_algebra, group_data,
                           parse_word, relations, word_str)
from .symgroup import (E, T12, T13, T23, ParamVector, Perm, classify_regime, conj_elem,
                       f_eval, isotropy_group, normalize, transpositions)

GD = group_data(3)
TRANS = transpositions(3)


class RelationError(ValueError):
    """A proposed action violates a defining relation."""


@lru_cache(maxsize=None)
def algebra(a, variant="A"):
    return build_algebra(a, variant)


@lru_cache(maxsize=None)
def jacobson_radical(a, variant="A"):
    """Basis of J(A) (as coordinate vectors on the 72 basis words)."""
    table = algebra(a, variant)
    return linalg.trace_form_radical(table.products, table.dim)


def _matmul(A, B):
    return linalg.matmul(A, B) if A and B else [[] for _ in A]


class Representation:
    def __init__(self, a, weights, xs, label="", variant="A", check=True, names=None):
        self.a = a
        self.variant = variant
        self.weights = list(weights)
        self.dim = len(self.weights)
        self.xs = [[[Fraction(c) for c in row] for row in m] for m in xs]
        self.label = label
        self.names = names or [f"v{i}" for i in range(self.dim)]
        if check:
            self.check()

    # -- structure
    def weight_spaces(self):
        ws = {h: [] for h in range(6)}
        for i, h in enumerate(self.weights):
            ws[h].append(i)
        return ws

    def weight_dims(self):
        ws = self.weight_spaces()
        return [len(ws[h]) for h in range(6)]

    def projector(self, h):
        P = linalg.zeros(self.dim, self.dim)
        for i, w in enumerate(self.weights):
            if w == h:
                P[i][i] = Fraction(1)
        return P

    def word_matrix(self, word):
        M = linalg.identity(self.dim)
        for t in reversed(word):
            M = linalg.matmul(self.xs[t], M)
        return M

    def act(self, elem):
        """Matrix of an algebra element given as {basis index of the table: coefficient}."""
        table = algebra(self.a, self.variant)
        out = linalg.zeros(self.dim, self.dim)
        cache = {}
        for k, c in elem.items():
            w, h = table.basis[k]
            if w not in cache:
                cache[w] = self.word_matrix(w)
            W = cache[w]
            for j, wt in enumerate(self.weights):
                if wt != h:
                    continue
                for i in range(self.dim):
                    if W[i][j]:
                        out[i][j] += c * W[i][j]
        return out

    def apply(self, t, v):
        return linalg.matvec(self.xs[t], v)

    # -- checks
    def weight_shift_ok(self):
        for t in range(3):
            for i in range(self.dim):
                for j in range(self.dim):
                    if self.xs[t][i][j] and self.weights[i] != GD.mul[GD.tperm[t]][self.weights[j]]:
                        return False
        return True

    def relation_failures(self):
        fails = []
        rels = relations(self.a, 3, self.variant)
        cache = {}
        for rel in rels:
            for h in range(6):
                cols = [j for j, w in enumerate(self.weights) if w == h]
                if not cols:
                    continue
                acc = [[Fraction(0)] * len(cols) for _ in range(self.dim)]
                for w, coef in rel.terms.items():
                    c = coef[h]
                    if not c:
                        continue
                    if w not in cache:
                        cache[w] = self.word_matrix(w)
                    W = cache[w]
                    for i in range(self.dim):
                        for n, j in enumerate(cols):
                            acc[i][n] += c * W[i][j]
                if any(x for row in acc for x in row):
                    fails.append((rel.name, str(GD.elems[h])))
        return fails

    def check(self):
        if not self.weight_shift_ok():
            raise RelationError(f"{self.label}: x_t does not shift weights by t")
        fails = self.relation_failures()
        if fails:
            raise RelationError(f"{self.label}: relations fail {fails}")

    def linkage_bijections_ok(self):
        """x_t : M[h] -> M[th] is bijective whenever f_t(th) != 0."""
        ws = self.weight_spaces()
        for t, tt in enumerate(TRANS):
            for h in range(6):
                th = GD.mul[GD.tperm[t]][h]
                if f_eval(self.a, tt, GD.elems[th]) == 0 and f_eval(self.a, tt, GD.elems[h]) == 0:
                    continue
                if len(ws[h]) != len(ws[th]):
                    return False
                if not ws[h]:
                    continue
                block = [[self.xs[t][i][j] for j in ws[h]] for i in ws[th]]
                if linalg.rank(block, len(ws[h])) != len(ws[h]):
                    return False
        return True

    def to_json(self):
        return {
            "label": self.label,
            "dim": self.dim,
            "weights": [str(GD.elems[h]) for h in self.weights],
            "basis": self.names,
            "action": {"x" + TRANS[t].label: [[str(c) for c in row] for row in self.xs[t]]
                       for t in range(3)},
        }


# ---------------------------------------------------------------- constructors

def _gidx(g):
    if isinstance(g, int):
        return g
    if isinstance(g, str):
        g = Perm.parse(g)
    return GD.index[g]


def verma(a, g, variant="A"):
    """M_g realised as the left ideal A delta_g, on the basis m_x = x delta_g (x in the monomial basis)."""
    table = algebra(a, variant)
    gi = _gidx(g)
    cols = [table.index[(w, gi)] for w in BASIS_WORDS]
    pos = {c: n for n, c in enumerate(cols)}
    xs = []
    for t in range(3):
        m = linalg.zeros(12, 12)
        xt = table.x(t).coeffs
        for n, c in enumerate(cols):
            for k, v in table.multiply(xt, {c: Fraction(1)}).items():
                m[pos[k]][n] = v
        xs.append(m)
    weights = [GD.mul[GD.prod(w)][gi] for w in BASIS_WORDS]
    names = ["m" + (word_str(w)[1:].replace(".x", ".") if w else "1") for w in BASIS_WORDS]
    return Representation(a, weights, xs, f"M_{GD.elems[gi]}", variant, names=names)


def verma_vector(M, text):
    """Basis vector m_word of a Verma module, e.g. ``verma_vector(M, "x13.x12")``."""
    w = parse_word(text)
    v = [Fraction(0)] * M.dim
    v[BASIS_WORDS.index(w)] = Fraction(1)
    return v


def onedim(a, h):
    hi = _gidx(h)
    if GD.elems[hi] not in isotropy_group(a):
        raise ValueError(f"{GD.elems[hi]} is not in the isotropy group of {a}")
    return Representation(a, [hi], [[[0]] for _ in range(3)], f"k_{GD.elems[hi]}")


def transport(M, theta, a):
    """Pull back a module over theta . a to a module over a."""
    th = theta if isinstance(theta, Perm) else Perm.parse(theta)
    weights = [GD.index[th.inverse() * GD.elems[h] * th] for h in M.weights]
    xs = [M.xs[GD.tindex[TRANS[t].__class__(*_pair(conj_elem(th, TRANS[t].perm())))]] for t in range(3)]
    return Representation(a, weights, xs, M.label, M.variant, names=M.names)


def _pair(p):
    moved = [i for i in range(1, 4) if p(i) != i]
    return moved[0], moved[1]


def simple_L(a):
    reg = classify_regime(a)
    if reg.tag == "generic":
        support = [g for g in range(6) if g != GD.e]
        pos = {g: n for n, g in enumerate(support)}
        xs = [linalg.zeros(5, 5) for _ in range(3)]
        for t, tt in enumerate(TRANS):
            for g in support:
                tg = GD.mul[GD.tperm[t]][g]
                if tg == GD.e:
                    continue
                c = 1 if GD.sign[g] == 1 else f_eval(a, tt, GD.elems[g])
                xs[t][pos[tg]][pos[g]] = Fraction(c)
        names = [f"v{GD.elems[g]}" for g in support]
        return Representation(a, support, xs, "L", names=names)
    if reg.tag == "sub-generic":
        b, theta = normalize(a)
        if theta.is_identity():
            return _simple_L_canonical(a)
        return transport(_simple_L_canonical(b), theta, a)
    raise ValueError("L exists only for generic and sub-generic parameters")


def _simple_L_canonical(a):
    support = [GD.index[Perm.parse(s)] for s in ("(13)", "(23)", "(13)(23)", "(23)(13)")]
    pos = {g: n for n, g in enumerate(support)}
    xs = [linalg.zeros(4, 4) for _ in range(3)]
    for t, tt in enumerate(TRANS):
        for g in support:
            if g == GD.tperm[t]:
                continue
            tg = GD.mul[GD.tperm[t]][g]
            c = 1 if GD.sign[g] == -1 else f_eval(a, tt, GD.elems[g])
            if c:
                xs[t][pos[tg]][pos[g]] = Fraction(c)
    names = [f"v{GD.elems[g]}" for g in support]
    return Representation(a, support, xs, "L", names=names)


def W_module(a, tvec, orientation="L_by_ke"):
    """The six-dimensional modules W_t(L, k_e) (``L_by_ke``) and W_t(k_e, L) (``ke_by_L``)."""
    if classify_regime(a).tag != "generic":
        raise ValueError("W_t is defined for generic parameters")
    tvec = tvec if isinstance(tvec, ParamVector) else ParamVector(tvec)
    xs = [linalg.zeros(6, 6) for _ in range(3)]
    e = GD.e
    for t, tt in enumerate(TRANS):
        tp = GD.tperm[t]
        for g in range(6):
            tg = GD.mul[tp][g]
            if orientation == "L_by_ke":
                if g == e:
                    c = 0
                elif g == tp:
                    c = tvec[tt]
                elif GD.sign[g] == 1:
                    c = 1
                else:
                    c = f_eval(a, tt, GD.elems[g])
            elif orientation == "ke_by_L":
                if g == e:
                    c = tvec[tt]
                elif g == tp:
                    c = 0
                elif GD.sign[g] == 1:
                    c = f_eval(a, tt, GD.elems[g])
                else:
                    c = 1
            else:
                raise ValueError(f"unknown orientation {orientation!r}")
            if c:
                xs[t][tg][g] = Fraction(c)
    names = [f"w{GD.elems[g]}" for g in range(6)]
    label = f"W_{tvec.strings()}({'L,k_e' if orientation == 'L_by_ke' else 'k_e,L'})"
    return Representation(a, list(range(6)), xs, label, names=names)


def M3_module(a):
    """The six-dimensional module of the variant-K algebra on basis m_g."""
    xs = [linalg.zeros(6, 6) for _ in range(3)]
    for t, tt in enumerate(TRANS):
        for g in range(6):
            tg = GD.mul[GD.tperm[t]][g]
            c = 1 if GD.sign[g] == -1 else -a[tt.conj(GD.elems[g])]
            if c:
                xs[t][tg][g] = Fraction(c)
    names = [f"m{GD.elems[g]}" for g in range(6)]
    return Representation(a, list(range(6)), xs, "M3", variant="K", names=names)


# ---------------------------------------------------------------- submodules

def _local(M, v, h, ws=None):
    ws = ws or M.weight_spaces()
    return [v[i] for i in ws[h]]


def _globalize(M, vec, h, ws=None):
    ws = ws or M.weight_spaces()
    out = [Fraction(0)] * M.dim
    for c, i in zip(vec, ws[h]):
        out[i] = c
    return out


class Submodule:
    """A weight-graded subspace, stored as an echelon basis in each weight space (local coordinates)."""

    def __init__(self, M, parts):
        self.M = M
        self.ws = M.weight_spaces()
        self.parts = {}
        for h in range(6):
            d = len(self.ws[h])
            rows = parts.get(h, [])
            self.parts[h] = linalg.row_space(rows, d) if rows and d else []

    @classmethod
    def from_vectors(cls, M, vecs):
        ws = M.weight_spaces()
        parts = {h: [] for h in range(6)}
        for v in vecs:
            for h in range(6):
                loc = _local(M, v, h, ws)
                if any(loc):
                    parts[h].append(loc)
        return cls(M, parts)

    @property
    def dim(self):
        return sum(len(p) for p in self.parts.values())

    def dims_by_weight(self):
        return [len(self.parts[h]) for h in range(6)]

    def vectors(self):
        return [_globalize(self.M, r, h, self.ws) for h in range(6) for r in self.parts[h]]

    def contains_vector(self, v):
        for h in range(6):
            loc = _local(self.M, v, h, self.ws)
            if any(loc) and not linalg.in_span(self.parts[h], loc, len(self.ws[h])):
                return False
        return True

    def __le__(self, other):
        return all(linalg.in_span(other.parts[h], r, len(self.ws[h]))
                   for h in range(6) for r in self.parts[h])

    def __eq__(self, other):
        return self.dims_by_weight() == other.dims_by_weight() and self <= other

    def __hash__(self):
        return hash(tuple(self.dims_by_weight()))

    def __add__(self, other):
        return Submodule(self.M, {h: self.parts[h] + other.parts[h] for h in range(6)})

    def is_closed(self):
        for t in range(3):
            for v in self.vectors():
                if not self.contains_vector(self.M.apply(t, v)):
                    return False
        return True

    def rank_profile(self):
        """dim x_t(N[h]) for every generator and weight."""
        out = []
        for t in range(3):
            for h in range(6):
                imgs = [self.M.apply(t, _globalize(self.M, r, h, self.ws)) for r in self.parts[h]]
                out.append(linalg.rank(imgs, self.M.dim) if imgs else 0)
        return tuple(out)

    def as_module(self):
        """The submodule as a Representation on its echelon basis."""
        basis = [(h, r) for h in range(6) for r in self.parts[h]]
        coords = {}
        xs = [linalg.zeros(len(basis), len(basis)) for _ in range(3)]
        for t in range(3):
            for n, (h, r) in enumerate(basis):
                img = self.M.apply(t, _globalize(self.M, r, h, self.ws))
                th = GD.mul[GD.tperm[t]][h]
                loc = _local(self.M, img, th, self.ws)
                if not any(loc):
                    continue
                c = linalg.coordinates(self.parts[th], loc)
                off = sum(len(self.parts[k]) for k in range(th))
                for m, cc in enumerate(c):
                    xs[t][off + m][n] = cc
        return Representation(self.M.a, [h for h, _ in basis], xs, f"sub({self.M.label})",
                              self.M.variant)

    def quotient(self, sub=None):
        """self / sub as a Representation (sub defaults to 0)."""
        sub = sub or Submodule(self.M, {})
        if not sub <= self:
            raise ValueError("not a submodule")
        # complement of sub inside self, weight by weight
        comp = {}
        for h in range(6):
            d = len(self.ws[h])
            base = list(sub.parts[h])
            comp[h] = []
            for r in self.parts[h]:
                if not linalg.in_span(base, r, d):
                    base.append(r)
                    comp[h].append(r)
        basis = [(h, r) for h in range(6) for r in comp[h]]
        offs = {}
        n = 0
        for h in range(6):
            offs[h] = n
            n += len(comp[h])
        xs = [linalg.zeros(n, n) for _ in range(3)]
        for t in range(3):
            for j, (h, r) in enumerate(basis):
                th = GD.mul[GD.tperm[t]][h]
                img = _local(self.M, self.M.apply(t, _globalize(self.M, r, h, self.ws)), th, self.ws)
                if not any(img):
                    continue
                full = comp[th] + sub.parts[th]
                c = linalg.coordinates(full, img)
                for m in range(len(comp[th])):
                    if c[m]:
                        xs[t][offs[th] + m][j] = c[m]
        return Representation(self.M.a, [h for h, _ in basis], xs, f"quot({self.M.label})",
                              self.M.variant)


def whole(M):
    ws = M.weight_spaces()
    return Submodule(M, {h: linalg.identity(len(ws[h])) for h in range(6) if ws[h]})


def zero(M):
    return Submodule(M, {})


def weight_spaces(M):
    ws = M.weight_spaces()
    return {str(GD.elems[h]): [M.names[i] for i in ws[h]] for h in range(6)}


def spin(M, vecs):
    """Smallest submodule containing the given vectors."""
    if vecs and not isinstance(vecs[0], (list, tuple)):
        vecs = [vecs]
    N = Submodule.from_vectors(M, list(vecs))
    while True:
        new = N.vectors()
        for t in range(3):
            new += [M.apply(t, v) for v in N.vectors()]
        N2 = Submodule.from_vectors(M, new)
        if N2.dim == N.dim:
            return N
        N = N2


def radical(M):
    """rad M = J(A) M."""
    table = algebra(M.a, M.variant)
    vecs = []
    for j in jacobson_radical(M.a, M.variant):
        A = M.act({k: c for k, c in enumerate(j) if c})
        for col in range(M.dim):
            v = [A[i][col] for i in range(M.dim)]
            if any(v):
                vecs.append(v)
    return Submodule.from_vectors(M, vecs) if vecs else zero(M)


def socle(M):
    """soc M = {m : J(A) m = 0}."""
    rows = []
    for j in jacobson_radical(M.a, M.variant):
        rows.extend(M.act({k: c for k, c in enumerate(j) if c}))
    ker = linalg.nullspace(rows, M.dim) if rows else linalg.identity(M.dim)
    return Submodule.from_vectors(M, ker)


def top(M):
    return whole(M).quotient(radical(M))


# ---------------------------------------------------------------- Hom, End, isomorphism

def hom_space(M, N):
    """Basis of Hom_A(M, N) as N.dim x M.dim matrices."""
    wm, wn = M.weight_spaces(), N.weight_spaces()
    var = {}
    for h in range(6):
        for i in wn[h]:
            for j in wm[h]:
                var[(i, j)] = len(var)
    nv = len(var)
    if nv == 0:
        return []
    rows = []
    for t in range(3):
        # (X^N phi - phi X^M)[i][j] = 0
        for j in range(M.dim):
            for i in range(N.dim):
                row = {}
                for k in range(N.dim):
                    c = N.xs[t][i][k]
                    if c and (k, j) in var:
                        row[var[(k, j)]] = row.get(var[(k, j)], 0) + c
                for k in range(M.dim):
                    c = M.xs[t][k][j]
                    if c and (i, k) in var:
                        row[var[(i, k)]] = row.get(var[(i, k)], 0) - c
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    basis = linalg.sparse_nullspace(rows, nv)
    out = []
    for b in basis:
        phi = linalg.zeros(N.dim, M.dim)
        for (i, j), k in var.items():
            phi[i][j] = b[k]
        out.append(phi)
    return out


def _flat(m):
    return [c for row in m for c in row]


def end_is_local(M):
    """End_A(M) is local, i.e. M is indecomposable (over the algebraic closure as well)."""
    E = hom_space(M, M)
    n = len(E)
    if n == 0:
        return False
    flat = [_flat(b) for b in E]
    ncols = M.dim * M.dim
    prods = {}
    for i in range(n):
        for j in range(n):
            c = linalg.coordinates(flat, _flat(linalg.matmul(E[i], E[j])))
            p = {k: v for k, v in enumerate(c) if v}
            if p:
                prods[(i, j)] = p
    return n - len(linalg.trace_form_radical(prods, n)) == 1


def is_indecomposable(M):
    return M.dim > 0 and end_is_local(M)


def is_simple(M):
    """Absolutely simple: semisimple with End = k."""
    return M.dim > 0 and radical(M).dim == 0 and len(hom_space(M, M)) == 1


def is_isomorphic(M, N, tries=12, seed=0):
    """Return an explicit isomorphism M -> N, or None."""
    if M.dim != N.dim or sorted(M.weights) != sorted(N.weights):
        return None
    H = hom_space(M, N)
    if len(H) != len(hom_space(M, M)) or not H:
        return None
    rng = random.Random(seed)
    for k in range(tries):
        coeffs = [Fraction(1)] * len(H) if k == 0 else [Fraction(rng.randint(-50, 50)) for _ in H]
        phi = linalg.zeros(N.dim, M.dim)
        for c, B in zip(coeffs, H):
            for i in range(N.dim):
                for j in range(M.dim):
                    phi[i][j] += c * B[i][j]
        if linalg.rank(phi, M.dim) == M.dim:
            return phi
    return None


# ---------------------------------------------------------------- simples

@dataclass
class SimpleList:
    regime: str
    simples: list
    jacobson_dim: int
    wedderburn_ok: bool
    verma_tops: dict
    tops_in_list: bool

    def names(self):
        return [S.label for S in self.simples]

    def to_json(self):
        return {
            "regime": self.regime,
            "simples": [S.to_json() for S in self.simples],
            "dims": [S.dim for S in self.simples],
            "jacobson_dim": self.jacobson_dim,
            "wedderburn": f"{' + '.join(f'{S.dim}^2' for S in self.simples)} + {self.jacobson_dim} = "
                          f"{sum(S.dim ** 2 for S in self.simples) + self.jacobson_dim}",
            "wedderburn_ok": self.wedderburn_ok,
            "verma_tops": self.verma_tops,
            "tops_in_list": self.tops_in_list,
        }


def named_simples(a):
    reg = classify_regime(a).tag
    out = [onedim(a, h) for h in isotropy_group(a)]
    out.sort(key=lambda S: S.weights[0])
    if reg in ("generic", "sub-generic"):
        out.append(simple_L(a))
    return out


def identify(S, simples):
    for T in simples:
        if is_isomorphic(S, T) is not None:
            return T.label
    return None


def classify_simples(a):
    simples = named_simples(a)
    for S in simples:
        if not is_simple(S):
            raise RuntimeError(f"{S.label} is not simple")
    jd = len(jacobson_radical(a))
    tops = {}
    for g in range(6):
        T = top(verma(a, g))
        tops[str(GD.elems[g])] = identify(T, simples) if is_simple(T) else None
    return SimpleList(
        regime=classify_regime(a).tag,
        simples=simples,
        jacobson_dim=jd,
        wedderburn_ok=sum(S.dim ** 2 for S in simples) + jd == 72,
        verma_tops=tops,
        tops_in_list=all(v is not None for v in tops.values()),
    )


def simple_name(S, simples):
    """Label of a simple module: k_h for one-dimensional ones, otherwise its match in ``simples``."""
    if S.dim == 1:
        return f"k_{GD.elems[S.weights[0]]}"
    return identify(S, simples) or "?"


def projective_cover_report(a):
    """Top and socle of every Verma module, and primitivity of delta_g."""
    simples = named_simples(a)
    out = {}
    for g in range(6):
        M = verma(a, g)
        T, S = top(M), socle(M).as_module()
        out[str(GD.elems[g])] = {
            "indecomposable": is_indecomposable(M),
            "top": simple_name(T, simples) if is_simple(T) else None,
            "socle": simple_name(S, simples) if is_simple(S) else None,
        }
    return out


# ---------------------------------------------------------------- submodule lattices
#
# A submodule of a module whose weight spaces have dimension <= 2 picks, in each
# weight, either 0, a line or the whole space.  For a fixed choice ("pattern") the
# closure conditions x_t(N[h]) in N[th] become conditions on the lines: forced
# lines, equalities l_y = A l_x through invertible blocks, and for rank-one blocks
# the alternative l_x = ker A or l_y = im A.  Branching on the alternatives leaves
# only forced lines and invertible equalities, which are solved exactly per
# connected component; a component with no forced line is a P^1 family.

ZERO, LINE, FULL = 0, 1, 2


def _norm_line(v):
    for c in v:
        if c:
            return tuple(x / c for x in v)
    raise ValueError("zero vector")


def _mat2_inv(A):
    return linalg.inverse(A)


def _apply2(A, v):
    return [A[0][0] * v[0] + A[0][1] * v[1], A[1][0] * v[0] + A[1][1] * v[1]]


def _eigenlines(C):
    """Rational eigenlines of a 2x2 matrix; None when C is scalar (every line is one)."""
    (p, q), (r, s) = C
    if q == 0 and r == 0 and p == s:
        return None
    tr, det = p + s, p * s - q * r
    disc = tr * tr - 4 * det
    root = _rational_sqrt(disc)
    if root is None:
        raise ArithmeticError("cycle matrix has irrational eigenvalues")
    out = []
    for lam in {(tr + root) / 2, (tr - root) / 2}:
        ker = linalg.nullspace([[p - lam, q], [r, s - lam]], 2)
        for k in ker:
            out.append(_norm_line(k))
    return sorted(set(out))


def _rational_sqrt(x):
    x = Fraction(x)
    if x < 0:
        return None
    import math
    n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


@dataclass
class LineFamily:
    """A set of submodules with the same weight pattern.

    ``fixed`` maps weights to fixed lines (local coordinates), ``free`` is a list
    of components {weight: T} with line(weight) = T . p for a free parameter p.
    """
    M: Representation
    pattern: tuple
    fixed: dict
    free: list

    @property
    def nparams(self):
        return len(self.free)

    def member(self, params=()):
        ws = self.M.weight_spaces()
        parts = {}
        for h in range(6):
            if self.pattern[h] == FULL:
                parts[h] = linalg.identity(len(ws[h]))
            elif self.pattern[h] == LINE and h in self.fixed:
                parts[h] = [list(self.fixed[h])]
        for comp, p in zip(self.free, params):
            for h, T in comp.items():
                parts[h] = [_apply2(T, list(p))]
        return Submodule(self.M, parts)

    def params_of(self, N):
        """Parameters at which the family passes through N, or None."""
        if tuple(_pattern_of(N)) != self.pattern:
            return None
        for h, l in self.fixed.items():
            if _norm_line(N.parts[h][0]) != l:
                return None
        params = []
        for comp in self.free:
            p = None
            for h, T in comp.items():
                q = _norm_line(_apply2(_mat2_inv(T), N.parts[h][0]))
                if p is None:
                    p = q
                elif p != q:
                    return None
            params.append(p)
        return tuple(params)

    def samples(self, count=3, rng=None):
        pts = [(1, 0), (0, 1), (1, 1), (1, 2), (2, -3), (3, 5)]
        if rng is not None:
            pts = pts[:3] + [(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3)]
        pts = [tuple(Fraction(c) for c in p) for p in pts][:max(count, 3)]
        return list(itertools.product(pts, repeat=self.nparams))

    def identically_closed(self):
        """Closure holds as a polynomial identity in the parameters (degree <= 2 in each)."""
        ws = self.M.weight_spaces()
        where = {}
        for ci, comp in enumerate(self.free):
            for h, T in comp.items():
                where[h] = (ci, T)
        J = [[0, 1], [-1, 0]]
        for t in range(3):
            for h in range(6):
                if self.pattern[h] == ZERO:
                    continue
                th = GD.mul[GD.tperm[t]][h]
                if self.pattern[th] == FULL:
                    continue
                A = [[self.M.xs[t][i][j] for j in ws[h]] for i in ws[th]]
                if self.pattern[h] == LINE and h in where and self.pattern[th] == LINE and th in where:
                    (c1, T1), (c2, T2) = where[h], where[th]
                    if c1 != c2:
                        # bilinear form in independent parameters must vanish
                        Q = linalg.matmul(linalg.transpose(linalg.matmul(A, T1)), linalg.matmul(J, T2))
                        if any(x for row in Q for x in row):
                            return False
                        continue
                    Q = linalg.matmul(linalg.transpose(linalg.matmul(A, T1)), linalg.matmul(J, T2))
                    if Q[0][0] or Q[1][1] or Q[0][1] + Q[1][0]:
                        return False
                    continue
                # otherwise every member is checked through three samples, which
                # determines a projective-linear dependence
                for p in self.samples(3):
                    if not self.member(p).is_closed():
                        return False
                break
        return True


def _pattern_of(N):
    out = []
    for h in range(6):
        d = len(N.ws[h])
        k = len(N.parts[h])
        out.append(ZERO if k == 0 else FULL if k == d else LINE)
    return out


def _blocks(M):
    ws = M.weight_spaces()
    out = {}
    for t in range(3):
        for h in range(6):
            th = GD.mul[GD.tperm[t]][h]
            A = [[M.xs[t][i][j] for j in ws[h]] for i in ws[th]]
            out[(t, h)] = (th, A)
    return out


def _solve_pattern(M, pattern, blocks):
    ws = M.weight_spaces()
    fixes, eqs, alts = [], [], []
    for (t, h), (th, A) in blocks.items():
        ph, py = pattern[h], pattern[th]
        if ph == ZERO or py == FULL:
            continue
        dh = len(ws[h])
        r = linalg.rank(A, dh) if A and A[0] else 0
        if r == 0:
            continue
        if ph == FULL:
            if py == ZERO or r == 2:
                return []
            fixes.append((th, _norm_line(_image_line(A))))
        elif py == ZERO:
            if r == 2:
                return []
            fixes.append((h, _norm_line(linalg.nullspace(A, dh)[0])))
        elif r == 2:
            eqs.append((h, th, A))
        else:
            alts.append((h, th, _norm_line(linalg.nullspace(A, dh)[0]), _norm_line(_image_line(A))))
    line_vars = [h for h in range(6) if pattern[h] == LINE]
    out = []
    for choice in itertools.product((0, 1), repeat=len(alts)):
        f = list(fixes)
        for (h, th, k, im), c in zip(alts, choice):
            f.append((h, k) if c == 0 else (th, im))
        out.extend(_solve_lines(M, pattern, line_vars, f, eqs))
    return out


def _image_line(A):
    cols = linalg.transpose(A)
    for c in cols:
        if any(c):
            return c
    raise ValueError("zero block")


def _solve_lines(M, pattern, line_vars, fixes, eqs):
    adj = {v: [] for v in line_vars}
    for x, y, A in eqs:
        adj[x].append((y, A))
        adj[y].append((x, _mat2_inv(A)))
    seen, comps = set(), []
    for v in line_vars:
        if v in seen:
            continue
        T = {v: linalg.identity(2)}
        stack = [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            for y, A in adj[x]:
                if y not in T:
                    T[y] = linalg.matmul(A, T[x])
                    seen.add(y)
                    stack.append(y)
        comps.append(T)
    comp_of = {h: i for i, T in enumerate(comps) for h in T}
    allowed = [None] * len(comps)

    def restrict(i, lines):
        cur = allowed[i]
        allowed[i] = lines if cur is None else sorted(set(cur) & set(lines))

    for x, y, A in eqs:
        T = comps[comp_of[x]]
        C = linalg.matmul(_mat2_inv(T[y]), linalg.matmul(A, T[x]))
        ev = _eigenlines(C)
        if ev is not None:
            restrict(comp_of[x], ev)
    for h, l in fixes:
        T = comps[comp_of[h]]
        restrict(comp_of[h], [_norm_line(_apply2(_mat2_inv(T[h]), list(l)))])
    if any(a == [] for a in allowed):
        return []
    choices = [[None] if a is None else a for a in allowed]
    out = []
    for pick in itertools.product(*choices):
        fixed, free = {}, []
        for T, p in zip(comps, pick):
            if p is None:
                free.append(T)
            else:
                for h, Th in T.items():
                    fixed[h] = _norm_line(_apply2(Th, list(p)))
        out.append(LineFamily(M, tuple(pattern), fixed, free))
    return out


def enumerate_submodules(M):
    """All submodules of M, as point families (no parameter) and P^1 families."""
    ws = M.weight_spaces()
    if any(len(ws[h]) > 2 for h in range(6)):
        raise ValueError("lattice enumeration needs weight spaces of dimension <= 2")
    blocks = _blocks(M)
    options = [[ZERO] if not ws[h] else [ZERO, FULL] if len(ws[h]) == 1 else [ZERO, LINE, FULL]
               for h in range(6)]
    found = []
    for pattern in itertools.product(*options):
        found.extend(_solve_pattern(M, pattern, blocks))
    points, families = [], []
    for F in found:
        if F.nparams == 0:
            N = F.member()
            if not any(N == P for P in points):
                points.append(N)
        else:
            families.append(F)
    # keep maximal families
    uniq = []
    for F in families:
        if any(G.nparams >= F.nparams and all(G.params_of(F.member(p)) is not None for p in F.samples())
               for G in uniq):
            continue
        uniq = [G for G in uniq if not (F.nparams >= G.nparams and
                                        all(F.params_of(G.member(p)) is not None for p in G.samples()))]
        uniq.append(F)
    # a point lying on a family is a separate node only where the family degenerates
    isolated = []
    for N in points:
        special = True
        for F in uniq:
            if F.params_of(N) is not None and _moving_generated(F, N):
                special = False
        if special:
            isolated.append(N)
    return isolated, uniq


def _moving_generated(F, N):
    """N is generated by its lines in the moving weights of F (the family is {A.v})."""
    ws = N.M.weight_spaces()
    vecs = [_globalize(N.M, N.parts[h][0], h, ws) for comp in F.free for h in comp]
    return spin(N.M, vecs) == N


# ---------------------------------------------------------------- lattice certificate

@dataclass
class Node:
    name: str
    sub: Submodule = None
    family: LineFamily = None
    excluded: list = field(default_factory=list)

    @property
    def is_family(self):
        return self.family is not None

    def sample(self, k=0):
        if not self.is_family:
            return self.sub
        pts = [p for p in self.family.samples(6) if p not in self.excluded]
        return self.family.member(pts[k % len(pts)])

    def shape(self):
        """Per weight: ('zero',), ('full',), ('line', l) or ('moving',)."""
        out = []
        if self.is_family:
            moving = {h for comp in self.family.free for h in comp}
            for h in range(6):
                pt = self.family.pattern[h]
                if pt == ZERO:
                    out.append(("zero",))
                elif pt == FULL:
                    out.append(("full",))
                elif h in moving:
                    out.append(("moving",))
                else:
                    out.append(("line", self.family.fixed[h]))
        else:
            for h, kind in enumerate(_pattern_of(self.sub)):
                out.append(("zero",) if kind == ZERO else ("full",) if kind == FULL
                           else ("line", _norm_line(self.sub.parts[h][0])))
        return out

    def dims(self):
        return self.sample().dims_by_weight()


def _leq(X, Y):
    """Every member of X lies in every member of Y."""
    if X is Y:
        return True
    for a, b in zip(X.shape(), Y.shape()):
        if a[0] == "zero" or b[0] == "full":
            continue
        if a[0] == "full" or b[0] == "zero":
            return False
        if a[0] == "moving" or b[0] == "moving":
            return False
        if a[1] != b[1]:
            return False
    return True


@dataclass
class LatticeCertificate:
    module: str
    params: list
    nodes: list
    edges: list
    discrepancies: list
    checks: dict
    order: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.discrepancies and all(self.checks.values())

    def to_json(self):
        return {
            "schema": "hopf72/lattice/1",
            "module": self.module,
            "params": self.params,
            "nodes": [{"name": n.name, "family": n.is_family, "dims": n.dims(),
                       "dim": sum(n.dims())} for n in self.nodes],
            "edges": [list(e) for e in self.edges],
            "order": [list(p) for p in self.order],
            "discrepancies": self.discrepancies,
            "checks": self.checks,
            "ok": self.ok,
        }

    def to_dot(self):
        lines = ["digraph lattice {", f'  label="{self.module} {",".join(self.params)}";',
                 "  rankdir=TB;"]
        for i, n in enumerate(self.nodes):
            shape = "ellipse" if n.is_family else "box"
            prof = ",".join(str(d) for d in n.dims())
            lines.append(f'  n{i} [label="{n.name}\\n[{prof}]", shape={shape}];')
        idx = {n.name: i for i, n in enumerate(self.nodes)}
        for up, lo, lab in self.edges:
            lines.append(f'  n{idx[up]} -> n{idx[lo]} [label="{lab}", dir=none];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _vec(M, spec):
    """Vector from a dict {word text: coefficient}."""
    v = [Fraction(0)] * M.dim
    for w, c in spec.items():
        v[BASIS_WORDS.index(parse_word(w))] += Fraction(c)
    return v


def _expected(a, g):
    """Hard-coded lattices of the generic and sub-generic Verma modules (canonical coordinates).

    Nodes are (kind, data): ("vecs", [vectors]) spans, ("wt", weight) for A.M[weight],
    ("fam", weight, excluded vector) for the family A.v with v in M[weight].
    """
    reg = classify_regime(a).tag
    gname = str(GD.elems[_gidx(g)])
    f13_23 = f_eval(a, T13, Perm.parse("(23)"))
    f23_13 = f_eval(a, T23, Perm.parse("(13)"))
    m4 = {"x13.x12.x23.x12": 1}
    msoc = {"1": f13_23 * f23_13, "x13.x12.x23.x12": -1}
    mo = {"x13.x12.x13": 1, "x23": f13_23}
    c3, c2 = "(13)(23)", "(12)"
    if reg == "generic" and gname == "e":
        return {
            "nodes": {"M_e": ("all",), "N_e": ("rad",), "A.v": ("fam", c3, None),
                      "<m4>": ("vecs", [m4]), "0": ("none",)},
            "edges": {("M_e", "N_e", "k_e"), ("N_e", "A.v", "L"), ("A.v", "<m4>", "L"),
                      ("<m4>", "0", "k_e")},
        }
    if reg == "generic" and gname == str(Perm.parse(c3)):
        return {
            "nodes": {"M": ("all",), "N": ("rad",), "A.v": ("fam", "e", None),
                      "A.m_soc": ("vecs", [msoc]), "0": ("none",)},
            "edges": {("M", "N", "L"), ("N", "A.v", "k_e"), ("A.v", "A.m_soc", "k_e"),
                      ("A.m_soc", "0", "L")},
        }
    if reg == "sub-generic" and gname == "e":
        return {
            "nodes": {"M_e": ("all",), "N_e": ("rad",), "A.M[(13)(23)]": ("wt", c3),
                      "A.M[(12)]": ("wt", c2), "A.v": ("fam", c3, {"x23.x12": 1}),
                      "A<m13.12.23,m23.12>": ("vecs", [{"x13.x12.x23": 1}, {"x23.x12": 1}]),
                      "A.w": ("fam", c2, {"x13.x12.x23": 1}),
                      "A.m13.12.23": ("vecs", [{"x13.x12.x23": 1}]),
                      "A.m23.12": ("vecs", [{"x23.x12": 1}]), "<m4>": ("vecs", [m4]),
                      "0": ("none",)},
            "edges": {("M_e", "N_e", "k_e"), ("N_e", "A.M[(13)(23)]", "k_(12)"),
                      ("N_e", "A.M[(12)]", "L"), ("A.M[(13)(23)]", "A.v", "L"),
                      ("A.M[(13)(23)]", "A<m13.12.23,m23.12>", "L"),
                      ("A.M[(12)]", "A<m13.12.23,m23.12>", "k_(12)"), ("A.M[(12)]", "A.w", "k_(12)"),
                      ("A.v", "A.m13.12.23", "L"), ("A<m13.12.23,m23.12>", "A.m13.12.23", "L"),
                      ("A<m13.12.23,m23.12>", "A.m23.12", "k_(12)"), ("A.w", "A.m23.12", "k_(12)"),
                      ("A.m13.12.23", "<m4>", "k_(12)"), ("A.m23.12", "<m4>", "L"),
                      ("<m4>", "0", "k_e")},
        }
    if reg == "sub-generic" and gname == str(Perm.parse(c3)):
        return {
            "nodes": {"M": ("all",), "N": ("rad",), "A.M[e]": ("wt", "e"), "A.M[(12)]": ("wt", c2),
                      "A.v": ("fam", "e", {"x12.x23": 1}),
                      "A<m_o,m12.23>": ("vecs", [mo, {"x12.x23": 1}]),
                      "A.w": ("fam", c2, mo), "A.m_o": ("vecs", [mo]),
                      "A.m12.23": ("vecs", [{"x12.x23": 1}]), "A.m_soc": ("vecs", [msoc]),
                      "0": ("none",)},
            "edges": {("M", "N", "L"), ("N", "A.M[e]", "k_(12)"), ("N", "A.M[(12)]", "k_e"),
                      ("A.M[e]", "A.v", "k_e"), ("A.M[e]", "A<m_o,m12.23>", "k_e"),
                      ("A.M[(12)]", "A<m_o,m12.23>", "k_(12)"), ("A.M[(12)]", "A.w", "k_(12)"),
                      ("A.v", "A.m_o", "k_e"), ("A<m_o,m12.23>", "A.m_o", "k_e"),
                      ("A<m_o,m12.23>", "A.m12.23", "k_(12)"), ("A.w", "A.m12.23", "k_(12)"),
                      ("A.m_o", "A.m_soc", "k_(12)"), ("A.m12.23", "A.m_soc", "k_e"),
                      ("A.m_soc", "0", "L")},
        }
    if reg == "sub-generic" and gname == c2:
        return {
            "nodes": {"M": ("all",), "N": ("rad",), "A.M[(13)(23)]": ("wt", c3), "A.M[e]": ("wt", "e"),
                      "A.v": ("fam", c3, mo),
                      "A<m13.12.23,m_o>": ("vecs", [{"x13.x12.x23": 1}, mo]),
                      "A.w": ("fam", "e", {"x13.x12.x23": 1}),
                      "A.m13.12.23": ("vecs", [{"x13.x12.x23": 1}]),
                      "A.m_o": ("vecs", [mo]), "<m4>": ("vecs", [m4]), "0": ("none",)},
            "edges": {("M", "N", "k_(12)"), ("N", "A.M[(13)(23)]", "k_e"), ("N", "A.M[e]", "L"),
                      ("A.M[(13)(23)]", "A.v", "L"), ("A.M[(13)(23)]", "A<m13.12.23,m_o>", "L"),
                      ("A.M[e]", "A<m13.12.23,m_o>", "k_e"), ("A.M[e]", "A.w", "k_e"),
                      ("A.v", "A.m13.12.23", "L"), ("A<m13.12.23,m_o>", "A.m13.12.23", "L"),
                      ("A<m13.12.23,m_o>", "A.m_o", "k_e"), ("A.w", "A.m_o", "k_e"),
                      ("A.m13.12.23", "<m4>", "k_e"), ("A.m_o", "<m4>", "L"),
                      ("<m4>", "0", "k_(12)")},
        }
    return None


def _realize(M, spec):
    kind = spec[0]
    if kind == "all":
        return whole(M)
    if kind == "none":
        return zero(M)
    if kind == "rad":
        return radical(M)
    if kind == "vecs":
        return spin(M, [_vec(M, d) for d in spec[1]])
    if kind == "wt":
        h = _gidx(spec[1])
        ws = M.weight_spaces()
        return spin(M, [_globalize(M, r, h, ws) for r in linalg.identity(len(ws[h]))])
    raise ValueError(kind)


def submodule_lattice(a, g, seed=0):
    """Enumerate all submodules of M_g, build the Hasse diagram and compare with the known lattice."""
    reg = classify_regime(a)
    if reg.tag not in ("generic", "sub-generic"):
        raise ValueError("lattices are certified for generic and sub-generic parameters")
    gi = _gidx(g)
    b, theta = normalize(a)
    gc = GD.index[conj_elem(theta, GD.elems[gi])]
    M = verma(b, gc)
    rng = random.Random(seed)
    simples = named_simples(b)
    points, families = enumerate_submodules(M)
    expected = _expected(b, gc)
    discrepancies = []
    checks = {}

    nodes = []
    for N in points:
        nodes.append(Node(name=None, sub=N))
    for F in families:
        excl = [F.params_of(N) for N in points if F.params_of(N) is not None]
        nodes.append(Node(name=None, family=F, excluded=excl))

    # names from the expected lattice
    if expected:
        for name, spec in expected["nodes"].items():
            if spec[0] == "fam":
                h = _gidx(spec[1])
                ws = M.weight_spaces()
                excl = _local(M, _vec(M, spec[2]), h, ws) if spec[2] else None
                hits = []
                for n in nodes:
                    if not n.is_family:
                        continue
                    ok = True
                    for p in [(1, 1), (1, 2), (2, -3), (rng.randint(1, 9), rng.randint(-9, -1))]:
                        loc = [Fraction(p[0]), Fraction(p[1])]
                        if excl and _norm_line(loc) == _norm_line(excl):
                            continue
                        S = spin(M, [_globalize(M, loc, h, ws)])
                        q = n.family.params_of(S)
                        if q is None or q in n.excluded:
                            ok = False
                            break
                    if ok:
                        hits.append(n)
                if len(hits) != 1:
                    discrepancies.append(f"family {name}: {len(hits)} matches")
                else:
                    hits[0].name = name
                    if excl is not None:
                        S = spin(M, [_globalize(M, excl, h, ws)])
                        checks[f"{name} degenerates off the family"] = (
                            hits[0].family.params_of(S) is None or
                            hits[0].family.params_of(S) in hits[0].excluded)
            else:
                S = _realize(M, spec)
                hits = [n for n in nodes if not n.is_family and n.sub == S]
                if len(hits) != 1:
                    discrepancies.append(f"node {name}: {len(hits)} matches")
                else:
                    hits[0].name = name
    unnamed = 0
    for n in nodes:
        if n.name is None:
            unnamed += 1
            n.name = f"X{unnamed}{n.dims()}"
            if expected:
                discrepancies.append(f"unexpected submodule {n.name}")

    # verification of every node
    checks["points closed"] = all(n.sub.is_closed() for n in nodes if not n.is_family)
    checks["families closed identically"] = all(n.family.identically_closed() for n in nodes if n.is_family)
    checks["families closed at samples"] = all(n.sample(k).is_closed()
                                               for n in nodes if n.is_family for k in range(3))
    checks["family members distinct"] = all(
        len({tuple(map(tuple, n.sample(k).vectors())) for k in range(3)}) == 3
        for n in nodes if n.is_family)

    # Hasse diagram
    order = {(i, j): _leq(nodes[i], nodes[j]) for i in range(len(nodes)) for j in range(len(nodes))}
    edges = []
    for i, lo in enumerate(nodes):
        for j, up in enumerate(nodes):
            if i == j or not order[(i, j)]:
                continue
            if any(k not in (i, j) and order[(i, k)] and order[(k, j)] and not order[(k, i)]
                   for k in range(len(nodes))):
                continue
            labels = set()
            for k in range(3 if (lo.is_family or up.is_family) else 1):
                X, Y = lo.sample(k), up.sample(k)
                Q = Y.quotient(X)
                labels.add(simple_name(Q, simples) if is_simple(Q) else "not simple")
            lab = labels.pop() if len(labels) == 1 else "inconsistent"
            edges.append((up.name, lo.name, lab))
    edges.sort()
    if expected:
        got = set(edges)
        for e in sorted(expected["edges"] - got):
            discrepancies.append(f"missing edge {e}")
        for e in sorted(got - expected["edges"]):
            discrepancies.append(f"extra edge {e}")
    # a sum of two distinct members of a family is the next node up
    for n in nodes:
        if n.is_family:
            S = n.sample(0) + n.sample(1)
            ups = [e[0] for e in edges if e[1] == n.name]
            checks[f"{n.name}: sum of two members is a cover"] = any(
                not m.is_family and m.sub == S for m in nodes if m.name in ups)
    module = f"M_{GD.elems[gi]}"
    if not theta.is_identity():
        module += f" (computed as M_{GD.elems[gc]} at {','.join(b.strings())})"
    rel = sorted((nodes[i].name, nodes[j].name) for (i, j), v in order.items() if v and i != j)
    return LatticeCertificate(module, a.strings(), nodes, edges, discrepancies, checks, rel)

"""Presentation of A_[a] and K_a by generators and relations.

Elements of the smash product are kept normal ordered: a word in the x's
followed by a single idempotent delta_h.  The pair (word, h) is a path in
the quiver with vertex set S_n, so the quotient is a path algebra with
relations over Q and completion is ordinary Buchberger with scalar
coefficients.  delta_h x_t = x_t delta_{t h} gives the tail bookkeeping:
x_p x_u x_s delta_h only sees the tail prod(s) h at the end of u.
"""
from __future__ import annotations

import heapq
import itertools
import json
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .symgroup import (ParamVector, Perm, T12, T13, T23, elements, f_eval,
                       transpositions)


class GroupData:
    """Index tables for S_n and its transpositions."""

    def __init__(self, n):
        self.n = n
        self.elems = elements(n)
        self.index = {g: i for i, g in enumerate(self.elems)}
        self.trans = transpositions(n)
        self.tindex = {t: i for i, t in enumerate(self.trans)}
        m = len(self.elems)
        self.mul = [[self.index[g * h] for h in self.elems] for g in self.elems]
        self.inv = [self.index[g.inverse()] for g in self.elems]
        self.sign = [g.sign() for g in self.elems]
        self.tperm = [self.index[t.perm(n)] for t in self.trans]
        self.conj = [[self.tindex[t.conj(g)] for g in self.elems] for t in self.trans]
        self.e = self.index[Perm.identity(n)]
        self.order = m

    def prod(self, word):
        """Index of t1 t2 ... tk."""
        g = self.e
        for t in reversed(word):
            g = self.mul[self.tperm[t]][g]
        return g


@lru_cache(maxsize=None)
def group_data(n):
    return GroupData(n)


def word_str(word, n=3):
    ts = transpositions(n)
    if not word:
        return "1"
    return ".".join("x" + ts[t].label for t in word)


def parse_word(text, n=3):
    ts = {("x" + t.label): i for i, t in enumerate(transpositions(n))}
    if text in ("1", ""):
        return ()
    return tuple(ts[p] for p in text.split("."))


def _L(t):
    return transpositions(3).index(t)


# letters for n = 3
X12, X13, X23 = _L(T12), _L(T13), _L(T23)

# the monomial basis, in display order
BASIS_WORDS = [
    (),
    (X13,), (X23,), (X12,),
    (X13, X12), (X12, X13), (X23, X12), (X12, X23),
    (X13, X12, X13), (X12, X23, X12), (X13, X12, X23),
    (X13, X12, X23, X12),
]
M4 = (X13, X12, X23, X12)


# ---------------------------------------------------------------- relators

class Relator:
    """A sum of x-words with k^G-valued coefficients placed on the right.

    ``terms`` maps a word to a list of |G| scalars: the value of the
    coefficient function at each group element.
    """

    def __init__(self, name, terms):
        self.name = name
        self.terms = terms

    def at(self, h):
        """The scalar path relation obtained by multiplying with delta_h on the right."""
        return {(w, h): c[h] for w, c in self.terms.items() if c[h]}

    def __repr__(self):
        return f"Relator({self.name})"


def _const(n, c):
    return [Fraction(c)] * group_data(n).order


def _pair_relators(n):
    """Quadratic Nichols-type relators R_(ij)(kl) and R_(ij)(ik)."""
    gd = group_data(n)
    ts = gd.trans
    out, seen = [], set()
    for s, t in itertools.permutations(range(len(ts)), 2):
        A, B = ts[s], ts[t]
        shared = {A.i, A.j} & {B.i, B.j}
        if not shared:
            key = frozenset({(s, t), (t, s)})
            if key in seen:
                continue
            seen.add(key)
            terms = {(s, t): _const(n, 1), (t, s): _const(n, 1)}
            out.append(Relator(f"R{A}{B}", terms))
        else:
            i = shared.pop()
            j = A.j if A.i == i else A.i
            k = B.j if B.i == i else B.i
            jk = gd.tindex[type(A)(j, k)]
            words = [(s, t), (t, jk), (jk, s)]
            key = frozenset(words)
            if key in seen:
                continue
            seen.add(key)
            out.append(Relator(f"R{A}{B}", {w: _const(n, 1) for w in words}))
    return out


def relations(a, n=None, variant="A"):
    """All defining relators of A_[a] (variant A) or K_a (variant K)."""
    n = a.n if n is None else n
    if n not in (3, 4, 5):
        raise ValueError(f"unsupported n = {n}")
    if a.n != n:
        raise ValueError("parameter vector has the wrong size")
    if variant not in ("A", "K"):
        raise ValueError(f"unknown variant {variant!r}")
    gd = group_data(n)
    rels = _pair_relators(n)
    if n == 3:
        # only the two relators with shared index survive; keep the standard names
        names = {frozenset({(X13, X23), (X23, X12), (X12, X13)}): "R(13)(23)",
                 frozenset({(X23, X13), (X13, X12), (X12, X23)}): "R(23)(13)"}
        for r in rels:
            r.name = names[frozenset(r.terms)]
        rels.sort(key=lambda r: r.name)
    for ti, t in enumerate(gd.trans):
        if variant == "A":
            coef = [-f_eval(a, t, g) for g in gd.elems]
        else:
            coef = [a[t.conj(g)] for g in gd.elems]
        terms = {(ti, ti): _const(n, 1)}
        if any(coef):
            terms[()] = coef
        out_name = f"x{t.label}^2" + (" - f" + t.label if variant == "A" else " + sum a")
        rels.append(Relator(out_name, terms))
    return rels


# ---------------------------------------------------------------- orders

def deglex_key(precedence):
    """Graded order, ties broken left-lexicographically with the given letter ranks."""
    def key(word):
        return (len(word), tuple(precedence[t] for t in word))
    return key


def default_precedence(n):
    """x13 < x23 < x12 for n = 3, index order otherwise."""
    if n == 3:
        return {X13: 0, X23: 1, X12: 2}
    return {i: i for i in range(len(transpositions(n)))}


# ---------------------------------------------------------------- path rewriting

class PathRewriteSystem:
    """Rules (word, tail) -> {(word, tail): scalar} over the path algebra."""

    def __init__(self, n, key):
        self.n = n
        self.gd = group_data(n)
        self.key = key
        self.rules = {}
        self.by_word = {}
        self.truncated = False

    def _index(self):
        self.by_word = {}
        for (w, h) in self.rules:
            self.by_word.setdefault(w, set()).add(h)
        self._lens = sorted({len(w) for w in self.by_word})

    def find(self, word, h):
        """Locate a reducible subword: returns (i, j, tail) or None."""
        gd = self.gd
        L = len(word)
        tails = [h] * (L + 1)
        for p in range(L - 1, -1, -1):
            tails[p] = gd.mul[gd.tperm[word[p]]][tails[p + 1]]
        for i in range(L):
            for ln in self._lens:
                j = i + ln
                if j > L:
                    break
                hs = self.by_word.get(word[i:j])
                if hs and tails[j] in hs:
                    return i, j, tails[j]
        return None

    def reduce(self, elem):
        """Normal form of a dict {(word, h): c}."""
        key = self.key
        work = {}
        heap = []
        for k, c in elem.items():
            if c:
                work[k] = work.get(k, 0) + c
        for k in work:
            heapq.heappush(heap, (_neg(key(k[0])), k))
        out = {}
        while heap:
            _, k = heapq.heappop(heap)
            c = work.pop(k, 0)
            if not c:
                continue
            w, h = k
            hit = self.find(w, h)
            if hit is None:
                out[k] = out.get(k, 0) + c
                continue
            i, j, tail = hit
            for (v, _), d in self.rules[(w[i:j], tail)].items():
                nk = (w[:i] + v + w[j:], h)
                if nk not in work:
                    heapq.heappush(heap, (_neg(key(nk[0])), nk))
                work[nk] = work.get(nk, 0) + c * d
        return {k: v for k, v in out.items() if v}

    def leading(self, elem):
        return max(elem, key=lambda k: self.key(k[0]))

    def add_relation(self, elem):
        """Reduce, orient and insert a relation; returns the new lhs or None."""
        r = self.reduce(elem)
        if not r:
            return None
        lt = self.leading(r)
        lc = r[lt]
        rhs = {k: -v / lc for k, v in r.items() if k != lt}
        self.rules[lt] = rhs
        self._index()
        return lt

    def irreducible_words(self, h, max_len=12):
        """All irreducible words with tail h, by breadth-first extension."""
        out = [()]
        frontier = [()]
        nletters = len(self.gd.trans)
        for _ in range(max_len):
            nxt = []
            for w in frontier:
                for t in range(nletters):
                    cand = (t,) + w
                    if self.find(cand, h) is None:
                        nxt.append(cand)
            if not nxt:
                return sorted(out, key=self.key)
            out.extend(nxt)
            frontier = nxt
        self.truncated = True
        return sorted(out, key=self.key)


def _neg(key):
    # heap is a min-heap; invert a (len, tuple) key
    return (-key[0], tuple(-x for x in key[1]))


def _overlaps(rs, degree_bound):
    """Critical words: (path word, tail, first rule, second rule)."""
    gd = rs.gd
    lhss = list(rs.rules)
    for (u, h1) in lhss:
        for (v, h2) in lhss:
            # suffix of u equals prefix of v
            for k in range(1, min(len(u), len(v))):
                if u[len(u) - k:] != v[:k]:
                    continue
                C = v[k:]
                if len(u) + len(C) > degree_bound:
                    rs.truncated = True
                    continue
                if h1 == gd.mul[gd.prod(C)][h2]:
                    yield u + C, h2
            # v strictly inside u
            if (v, h2) != (u, h1) and len(v) <= len(u):
                for i in range(len(u) - len(v) + 1):
                    if u[i:i + len(v)] == v and gd.mul[gd.prod(u[i + len(v):])][h1] == h2:
                        yield u, h1


def _one_step_variants(rs, word, h):
    """Every single-rule rewrite of the path (word, h)."""
    gd = rs.gd
    out = []
    L = len(word)
    tails = [h] * (L + 1)
    for p in range(L - 1, -1, -1):
        tails[p] = gd.mul[gd.tperm[word[p]]][tails[p + 1]]
    for i in range(L):
        for j in range(i + 1, L + 1):
            rhs = rs.rules.get((word[i:j], tails[j]))
            if rhs is None:
                continue
            res = {}
            for (v, _), d in rhs.items():
                nk = (word[:i] + v + word[j:], h)
                res[nk] = res.get(nk, 0) + d
            out.append(res)
    return out


def complete(relators, n=3, precedence=None, degree_bound=8, max_rounds=50):
    """Buchberger completion of the path relations obtained from ``relators``.

    Returns a PathRewriteSystem; ``truncated`` is set when an overlap beyond
    ``degree_bound`` had to be skipped.
    """
    gd = group_data(n)
    key = deglex_key(precedence or default_precedence(n))
    rs = PathRewriteSystem(n, key)
    rs._index()
    for r in relators:
        for h in range(gd.order):
            rs.add_relation(r.at(h))
    _interreduce(rs)
    for _ in range(max_rounds):
        added = False
        for word, h in list(_overlaps(rs, degree_bound)):
            variants = _one_step_variants(rs, word, h)
            if len(variants) < 2:
                continue
            base = rs.reduce(variants[0])
            for other in variants[1:]:
                diff = dict(base)
                for k, v in rs.reduce(other).items():
                    diff[k] = diff.get(k, 0) - v
                diff = {k: v for k, v in diff.items() if v}
                if diff and rs.add_relation(diff) is not None:
                    added = True
        if not added:
            break
        _interreduce(rs)
    else:
        raise RuntimeError("completion did not stabilise")
    return rs


def _interreduce(rs):
    changed = True
    while changed:
        changed = False
        for lhs in sorted(rs.rules, key=lambda k: rs.key(k[0])):
            if lhs not in rs.rules:
                continue
            rhs = rs.rules.pop(lhs)
            rs._index()
            rel = dict(rhs)
            rel[lhs] = rel.get(lhs, 0) - 1
            red = rs.reduce(rel)
            if not red:
                changed = True
                continue
            lt = rs.leading(red)
            lc = red[lt]
            new_rhs = {k: -v / lc for k, v in red.items() if k != lt}
            if lt != lhs or new_rhs != rhs:
                changed = True
            rs.rules[lt] = new_rhs
            rs._index()


def is_confluent(rs, degree_bound=8):
    """Every critical pair resolves to a common normal form."""
    for word, h in _overlaps(rs, degree_bound):
        variants = [rs.reduce(v) for v in _one_step_variants(rs, word, h)]
        if any(v != variants[0] for v in variants[1:]):
            return False
    return True


# ---------------------------------------------------------------- basis system

class RewriteSystem:
    """Rules on x-words whose irreducible words are the monomial basis.

    Coefficients are k^G-valued: ``rules[lhs][word][h]`` is the scalar in
    front of ``word`` when the rule is applied with tail ``h``.
    """

    def __init__(self, a, variant, rules, gb):
        self.a = a
        self.variant = variant
        self.rules = rules
        self.gb = gb
        self.gd = group_data(3)
        self._lens = sorted({len(w) for w in rules})

    def find(self, word):
        L = len(word)
        for i in range(L):
            for ln in self._lens:
                if i + ln > L:
                    break
                if word[i:i + ln] in self.rules:
                    return i, i + ln
        return None

    def reduce(self, elem):
        """Normal form of {(word, h): c} in terms of basis words."""
        gd = self.gd
        work = dict(elem)
        out = {}
        while work:
            # longest words first: every rule lowers the degree or keeps it
            k = max(work, key=lambda t: (len(t[0]), t[0]))
            c = work.pop(k)
            if not c:
                continue
            w, h = k
            hit = self.find(w)
            if hit is None:
                out[k] = out.get(k, 0) + c
                continue
            i, j = hit
            tail = gd.mul[gd.prod(w[j:])][h]
            for v, coef in self.rules[w[i:j]].items():
                if coef[tail]:
                    nk = (w[:i] + v + w[j:], h)
                    work[nk] = work.get(nk, 0) + c * coef[tail]
        return {k: v for k, v in out.items() if v}

    def rule_strings(self):
        out = {}
        for lhs, rhs in self.rules.items():
            out[word_str(lhs)] = {word_str(w): [str(x) for x in c] for w, c in rhs.items()}
        return out

    def rewrite_graph_acyclic(self, max_degree=8):
        """Check that the homogeneous part of every one-step rewrite is acyclic."""
        for d in range(1, max_degree + 1):
            succ = {}
            for w in itertools.product(range(3), repeat=d):
                nxt = set()
                for i in range(d):
                    for ln in self._lens:
                        if i + ln > d:
                            break
                        rhs = self.rules.get(w[i:i + ln])
                        if rhs is None:
                            continue
                        for v, coef in rhs.items():
                            if len(v) == ln and any(coef):
                                nxt.add(w[:i] + v + w[i + ln:])
                succ[w] = nxt
            state = {}
            for start in succ:
                if state.get(start):
                    continue
                stack = [(start, iter(succ[start]))]
                state[start] = 1
                while stack:
                    node, it = stack[-1]
                    for nb in it:
                        s = state.get(nb, 0)
                        if s == 1:
                            return False
                        if s == 0:
                            state[nb] = 1
                            stack.append((nb, iter(succ[nb])))
                            break
                    else:
                        state[node] = 2
                        stack.pop()
        return True

    def critical_pairs_resolve(self):
        """Local confluence: every overlap of two rules, at every tail, resolves."""
        gd = self.gd
        lhss = list(self.rules)
        words = set()
        for u in lhss:
            for v in lhss:
                for k in range(1, min(len(u), len(v))):
                    if u[len(u) - k:] == v[:k]:
                        words.add(u + v[k:])
                if u != v and len(v) < len(u):
                    for i in range(len(u) - len(v) + 1):
                        if u[i:i + len(v)] == v:
                            words.add(u)
        for w in words:
            for h in range(gd.order):
                results = []
                for i in range(len(w)):
                    for j in range(i + 1, len(w) + 1):
                        rhs = self.rules.get(w[i:j])
                        if rhs is None:
                            continue
                        tail = gd.mul[gd.prod(w[j:])][h]
                        step = {}
                        for v, coef in rhs.items():
                            if coef[tail]:
                                nk = (w[:i] + v + w[j:], h)
                                step[nk] = step.get(nk, 0) + coef[tail]
                        results.append(self.reduce(step))
                if any(r != results[0] for r in results[1:]):
                    return False
        return True


def _standard_to_basis(gb):
    """Per tail h, the matrix expressing basis words through standard words."""
    gd = gb.gd
    conv = []
    for h in range(gd.order):
        std = gb.irreducible_words(h)
        if len(std) != len(BASIS_WORDS):
            raise RuntimeError(f"tail {h}: {len(std)} standard words, expected 12")
        sidx = {w: i for i, w in enumerate(std)}
        mat = []
        for b in BASIS_WORDS:
            nf = gb.reduce({(b, h): Fraction(1)})
            row = [Fraction(0)] * len(std)
            for (w, _), c in nf.items():
                row[sidx[w]] = c
            mat.append(row)
        # rows: basis words in standard coordinates; invert to go back
        inv = linalg.inverse(linalg.transpose(mat))
        conv.append((sidx, inv))
    return conv


def basis_normal_form(gb, conv, word, h):
    sidx, inv = conv[h]
    nf = gb.reduce({(word, h): Fraction(1)})
    vec = [Fraction(0)] * len(sidx)
    for (w, _), c in nf.items():
        vec[sidx[w]] = c
    coords = linalg.matvec(inv, vec)
    return {BASIS_WORDS[i]: c for i, c in enumerate(coords) if c}


# leading words of the basis-adapted system (squares, the two R-relators, three cubic rules)
OBSTRUCTIONS = [
    (X13, X13), (X23, X23), (X12, X12),
    (X13, X23), (X23, X13),
    (X12, X13, X12), (X23, X12, X23), (X23, X12, X13),
]


def build_rewrite_system(a, variant="A", degree_bound=8):
    """Complete the relations and re-express them as a system with basis normal forms."""
    if a.n != 3:
        raise ValueError("the basis-adapted system exists for n = 3 only")
    gb = complete(relations(a, 3, variant), 3, degree_bound=degree_bound)
    if gb.truncated:
        raise RuntimeError("completion hit the degree bound")
    conv = _standard_to_basis(gb)
    rules = {}
    for w in OBSTRUCTIONS:
        rhs = {}
        for h in range(6):
            for b, c in basis_normal_form(gb, conv, w, h).items():
                rhs.setdefault(b, [Fraction(0)] * 6)[h] = c
        rules[w] = rhs
    rs = RewriteSystem(a, variant, rules, gb)
    rs.conv = conv
    return rs


# ---------------------------------------------------------------- structure table

class StructureTable:
    """The 72-dimensional algebra on the basis {x delta_g : x in the monomial basis}."""

    def __init__(self, a, variant="A", degree_bound=8):
        self.a = a
        self.variant = variant
        self.gd = group_data(3)
        self.rs = build_rewrite_system(a, variant, degree_bound)
        self.basis = [(w, g) for w in BASIS_WORDS for g in range(6)]
        self.index = {k: i for i, k in enumerate(self.basis)}
        self.dim = len(self.basis)
        self._nf = {}
        self.products = {}
        gd = self.gd
        for i, (u, g) in enumerate(self.basis):
            for j, (v, h) in enumerate(self.basis):
                if g != gd.mul[gd.prod(v)][h]:
                    continue
                prod = self.word_nf(u + v, h)
                if prod:
                    self.products[(i, j)] = prod

    def word_nf(self, word, h):
        """Coordinates of x_word delta_h as {basis index: scalar}."""
        key = (word, h)
        if key not in self._nf:
            nf = self.rs.reduce({key: Fraction(1)})
            out = {}
            for (w, hh), c in nf.items():
                if (w, hh) not in self.index:
                    raise RuntimeError(f"closure failure: {word_str(w)} is not a basis word")
                out[self.index[(w, hh)]] = c
            self._nf[key] = out
        return self._nf[key]

    # -- elements
    def elem(self, coeffs=None):
        return AlgebraElement(self, coeffs or {})

    def basis_elem(self, i):
        return AlgebraElement(self, {i: Fraction(1)})

    def delta(self, g):
        gi = g if isinstance(g, int) else self.gd.index[g]
        return self.basis_elem(self.index[((), gi)])

    def one(self):
        return AlgebraElement(self, {self.index[((), g)]: Fraction(1) for g in range(6)})

    def x(self, t):
        li = t if isinstance(t, int) else self.gd.tindex[t]
        return AlgebraElement(self, {self.index[((li,), g)]: Fraction(1) for g in range(6)})

    def word(self, word, g=None):
        """x_word (times delta_g when g is given)."""
        gs = range(6) if g is None else [g if isinstance(g, int) else self.gd.index[g]]
        out = AlgebraElement(self, {})
        for h in gs:
            out = out + AlgebraElement(self, self.word_nf(tuple(word), h))
        return out

    def kg(self, values):
        """The function sum_g values[g] delta_g."""
        return AlgebraElement(self, {self.index[((), g)]: Fraction(v) for g, v in enumerate(values) if v})

    def chi(self):
        return self.kg(self.gd.sign)

    def multiply(self, x, y):
        out = {}
        for i, c in x.items():
            for j, d in y.items():
                p = self.products.get((i, j))
                if p is None:
                    continue
                cd = c * d
                for k, v in p.items():
                    out[k] = out.get(k, 0) + cd * v
        return {k: v for k, v in out.items() if v}

    def degree(self, i):
        return len(self.basis[i][0])

    def basis_label(self, i):
        w, g = self.basis[i]
        return f"{word_str(w)}|d{self.gd.elems[g]}"

    def left_matrix(self, x):
        """Matrix of left multiplication by x (columns are images of basis vectors)."""
        m = linalg.zeros(self.dim, self.dim)
        for j in range(self.dim):
            for k, v in self.multiply(x, {j: Fraction(1)}).items():
                m[k][j] = v
        return m

    # -- checks
    def closure_ok(self):
        return all(k < self.dim for p in self.products.values() for k in p)

    def unit_ok(self):
        one = self.one().coeffs
        return all(self.multiply(one, {i: 1}) == {i: 1} and self.multiply({i: 1}, one) == {i: 1}
                   for i in range(self.dim))

    def to_json(self):
        prods = []
        for (i, j) in sorted(self.products):
            prods.append([i, j, [[k, str(v)] for k, v in sorted(self.products[(i, j)].items())]])
        return {
            "schema": "hopf72/structure-table/1",
            "n": 3,
            "variant": self.variant,
            "params": self.a.strings(),
            "basis": [self.basis_label(i) for i in range(self.dim)],
            "products": prods,
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


def verify_associativity(table, mode="full"):
    """Associativity on all basis triples, or on (generator, basis, basis) triples.

    The generator mode suffices because every basis element is a product of
    generators and left multiplication by generators then determines the rest.
    """
    dim = table.dim
    if mode == "full":
        lefts = range(dim)
        left_vecs = [{i: Fraction(1)} for i in lefts]
    elif mode == "generators":
        gens = [table.x(t) for t in range(3)] + [table.delta(g) for g in range(6)]
        left_vecs = [gen.coeffs for gen in gens]
    else:
        raise ValueError(mode)
    mul = table.multiply
    right = {}
    for j in range(dim):
        for k in range(dim):
            p = table.products.get((j, k))
            if p:
                right[(j, k)] = p
    for x in left_vecs:
        xj = [mul(x, {j: 1}) for j in range(dim)]
        for j in range(dim):
            for k in range(dim):
                lhs = mul(xj[j], {k: 1})
                rhs = mul(x, right.get((j, k), {}))
                if lhs != rhs:
                    return False
    return True


class AlgebraElement:
    """A sparse vector in a StructureTable."""

    __slots__ = ("table", "coeffs")

    def __init__(self, table, coeffs):
        self.table = table
        self.coeffs = {k: Fraction(v) for k, v in coeffs.items() if v}

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return AlgebraElement(self.table, out)

    def __neg__(self):
        return AlgebraElement(self.table, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return AlgebraElement(self.table, self.table.multiply(self.coeffs, other.coeffs))
        return AlgebraElement(self.table, {k: v * Fraction(other) for k, v in self.coeffs.items()})

    def __rmul__(self, other):
        return AlgebraElement(self.table, {k: v * Fraction(other) for k, v in self.coeffs.items()})

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self):
        return not self.coeffs

    def vector(self):
        v = [Fraction(0)] * self.table.dim
        for k, c in self.coeffs.items():
            v[k] = c
        return v

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*{self.table.basis_label(k)}" for k, c in sorted(self.coeffs.items()))


def build_algebra(a, variant="A"):
    if a.n != 3:
        raise ValueError("build_algebra requires n = 3")
    table = StructureTable(a, variant)
    if table.dim != 72 or not table.closure_ok():
        raise RuntimeError("dimension mismatch")
    return table


def identity_checks(table):
    """The three cubic identities, as exact element equalities."""
    a = table.a
    x12, x13, x23 = table.x(X12), table.x(X13), table.x(X23)
    om = table.kg([_omega(a, g) for g in table.gd.elems])
    return {
        "x12x13x12": x12 * x13 * x12 == x13 * x12 * x13 + x23 * (a[T13] - a[T12]),
        "x23x12x23": x23 * x12 * x23 == x12 * x23 * x12 - x13 * (a[T23] - a[T12]),
        "x23x12x13": x23 * x12 * x13 == x13 * x12 * x23 + x12 * om,
    }


def _omega(a, g):
    from .symgroup import omega_eval
    return omega_eval(a, g)

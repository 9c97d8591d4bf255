"""Coalgebra, antipode and the Hopf-theoretic invariants of A_[a]."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from . import linalg
from .presentation import (BASIS_WORDS, M4, X12, X13, X23, StructureTable,
                           build_algebra, relations, verify_associativity)
from .symgroup import T12, T13, T23, transpositions

HALF = Fraction(1, 2)


# ---------------------------------------------------------------- tensors

def t_add(*ts):
    out = {}
    for t in ts:
        for k, v in t.items():
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def t_scale(t, c):
    return {k: v * c for k, v in t.items() if v * c}


def t_mul(table, s, t):
    """Product in A (x) A (or A (x) A (x) A for 3-tuples)."""
    prods = table.products
    out = {}
    for ks, cs in s.items():
        for kt, ct in t.items():
            parts = []
            for a, b in zip(ks, kt):
                p = prods.get((a, b))
                if p is None:
                    break
                parts.append(p)
            else:
                c = cs * ct
                for combo in iproduct(*[list(p.items()) for p in parts]):
                    key = tuple(k for k, _ in combo)
                    v = c
                    for _, x in combo:
                        v *= x
                    out[key] = out.get(key, 0) + v
    return {k: v for k, v in out.items() if v}


def simple_tensor(x, y):
    return {(i, j): c * d for i, c in x.items() for j, d in y.items() if c * d}


# ---------------------------------------------------------------- coalgebra

@dataclass
class CoproductTable:
    table: StructureTable
    delta: dict
    counit: list
    antipode: dict = field(default_factory=dict)

    def apply_delta(self, x):
        out = {}
        for i, c in x.items():
            for k, v in self.delta[i].items():
                out[k] = out.get(k, 0) + c * v
        return {k: v for k, v in out.items() if v}

    def apply_antipode(self, x):
        out = {}
        for i, c in x.items():
            for k, v in self.antipode[i].items():
                out[k] = out.get(k, 0) + c * v
        return {k: v for k, v in out.items() if v}

    def eps(self, x):
        return sum((c * self.counit[i] for i, c in x.items()), Fraction(0))


def _generator_coproducts(table):
    gd = table.gd
    one = table.one().coeffs
    gens = {}
    for t in range(3):
        xt = table.x(t).coeffs
        d = simple_tensor(xt, one)
        for h in range(6):
            tc = gd.conj[t][h]
            d = t_add(d, t_scale(simple_tensor(table.delta(h).coeffs, table.x(tc).coeffs), gd.sign[h]))
        gens[t] = d
    deltas = {}
    for g in range(6):
        d = {}
        for u in range(6):
            v = gd.mul[gd.inv[u]][g]
            d[(table.index[((), u)], table.index[((), v)])] = Fraction(1)
        deltas[g] = d
    return gens, deltas


def build_coalgebra(table):
    gd = table.gd
    gens, deltas = _generator_coproducts(table)
    delta = {}
    for i, (w, g) in enumerate(table.basis):
        d = deltas[g]
        for t in reversed(w):
            d = t_mul(table, gens[t], d)
        delta[i] = d
    counit = [Fraction(1) if (w == () and g == gd.e) else Fraction(0) for (w, g) in table.basis]
    ct = CoproductTable(table, delta, counit)
    ct.antipode = solve_antipode(ct)
    return ct


def solve_antipode(ct):
    """Solve m(S (x) id) Delta = u eps for S, degree by degree.

    Delta(x delta_g) has first legs of degree < deg x except x delta_u (x) delta_v
    with uv = g, so the system is block triangular; each diagonal block is
    solved exactly and must have a unique solution.
    """
    table = ct.table
    dim = table.dim
    one = table.one().coeffs
    S = {}
    for d in range(5):
        block = [i for i in range(dim) if table.degree(i) == d]
        if not block:
            continue
        pos = {i: n for n, i in enumerate(block)}
        nunk = len(block) * dim
        rows, rhs = [], []
        eqs = {}
        for b in block:
            # known part and unknown part of sum S(b1) b2
            known = {}
            unknown = {}
            for (j, k), c in ct.delta[b].items():
                if j in pos:
                    # S(e_j) e_k: coordinate m of S(e_j) contributes to products (m, k)
                    for m in range(dim):
                        p = table.products.get((m, k))
                        if not p:
                            continue
                        for r, v in p.items():
                            unknown.setdefault(r, {})
                            key = pos[j] * dim + m
                            unknown[r][key] = unknown[r].get(key, 0) + c * v
                else:
                    for r, v in table.multiply(S[j], {k: c}).items():
                        known[r] = known.get(r, 0) + v
            target = t_scale(one, ct.counit[b])
            for r in range(dim):
                row = {k: v for k, v in unknown.get(r, {}).items() if v}
                val = target.get(r, 0) - known.get(r, 0)
                if row or val:
                    rows.append(row)
                    rhs.append(val)
        aug = []
        for row, val in zip(rows, rhs):
            r = dict(row)
            if val:
                r[nunk] = val
            aug.append(r)
        red, piv = linalg.sparse_rref(aug)
        if nunk in piv:
            raise RuntimeError("antipode system is inconsistent")
        if len(piv) != nunk:
            raise RuntimeError("antipode system is singular")
        sol = [Fraction(0)] * nunk
        for row, p in zip(red, piv):
            sol[p] = row.get(nunk, Fraction(0))
        for b in block:
            vec = sol[pos[b] * dim:(pos[b] + 1) * dim]
            S[b] = {m: v for m, v in enumerate(vec) if v}
    return S


# ---------------------------------------------------------------- checks

def check_delta_multiplicative(ct):
    """Delta kills every relator and agrees with products of generator coproducts."""
    table = ct.table
    gens, deltas = _generator_coproducts(table)
    gd = table.gd
    for rel in relations(table.a, 3, table.variant):
        for h in range(6):
            total = {}
            for w, coef in rel.terms.items():
                c = coef[h]
                if not c:
                    continue
                d = deltas[h]
                for t in reversed(w):
                    d = t_mul(table, gens[t], d)
                total = t_add(total, t_scale(d, c))
            if total:
                return False
    gen_elems = [table.x(t).coeffs for t in range(3)] + [table.delta(g).coeffs for g in range(6)]
    for x in gen_elems:
        dx = ct.apply_delta(x)
        for j in range(table.dim):
            lhs = ct.apply_delta(table.multiply(x, {j: 1}))
            if lhs != t_mul(table, dx, ct.delta[j]):
                return False
    return True


def check_coassociative(ct):
    for i in range(ct.table.dim):
        left, right = {}, {}
        for (j, k), c in ct.delta[i].items():
            for (p, q), d in ct.delta[j].items():
                left[(p, q, k)] = left.get((p, q, k), 0) + c * d
            for (p, q), d in ct.delta[k].items():
                right[(j, p, q)] = right.get((j, p, q), 0) + c * d
        if {k: v for k, v in left.items() if v} != {k: v for k, v in right.items() if v}:
            return False
    return True


def check_counit(ct):
    for i in range(ct.table.dim):
        l, r = {}, {}
        for (j, k), c in ct.delta[i].items():
            if ct.counit[j]:
                l[k] = l.get(k, 0) + c * ct.counit[j]
            if ct.counit[k]:
                r[j] = r.get(j, 0) + c * ct.counit[k]
        l = {k: v for k, v in l.items() if v}
        r = {k: v for k, v in r.items() if v}
        if l != {i: 1} or r != {i: 1}:
            return False
    return True


def check_antipode(ct):
    table = ct.table
    one = table.one().coeffs
    for i in range(table.dim):
        l, r = {}, {}
        for (j, k), c in ct.delta[i].items():
            for m, v in table.multiply(ct.antipode[j], {k: c}).items():
                l[m] = l.get(m, 0) + v
            for m, v in table.multiply({j: c}, ct.antipode[k]).items():
                r[m] = r.get(m, 0) + v
        target = t_scale(one, ct.counit[i])
        if {k: v for k, v in l.items() if v} != target or {k: v for k, v in r.items() if v} != target:
            return False
    return True


def check_s2_conjugation(ct):
    """S^2(b) = chi b chi^-1 on every basis element, and S^4 = id."""
    table = ct.table
    chi = table.chi().coeffs
    ok2, ok4 = True, True
    for i in range(table.dim):
        s2 = ct.apply_antipode(ct.apply_antipode({i: 1}))
        conj = table.multiply(table.multiply(chi, {i: 1}), chi)
        ok2 &= s2 == conj
        ok4 &= ct.apply_antipode(ct.apply_antipode(s2)) == {i: 1}
    return ok2, ok4


def s2_witness_table(ct):
    table = ct.table
    out = []
    for i in range(table.dim):
        s2 = ct.apply_antipode(ct.apply_antipode({i: 1}))
        sign = s2.get(i)
        out.append([table.basis_label(i), str(sign) if s2 == {i: sign} else "non-diagonal"])
    return out


# ---------------------------------------------------------------- dual algebra

def dual_products(ct):
    """Structure constants of A*: e^i e^j = sum_k Delta_k^{ij} e^k."""
    out = {}
    for k, d in ct.delta.items():
        for (i, j), c in d.items():
            out.setdefault((i, j), {})[k] = c
    return out


def coradical_dimension(ct):
    """dim of the coradical of A = dim A* / J(A*)."""
    dp = dual_products(ct)
    return ct.table.dim - len(linalg.trace_form_radical(dp, ct.table.dim))


def jacobson_dimension(table):
    return len(linalg.trace_form_radical(table.products, table.dim))


# ---------------------------------------------------------------- group-likes and primitives

def grouplikes(ct):
    """All group-like elements.

    They lie in the coradical.  When its dimension is 6 the coradical is
    k^{S_3} (which is cosemisimple and contained in it), so a group-like is
    sum c_g delta_g with c_{uv} = c_u c_v: a homomorphism S_3 -> k^x, hence
    determined by its values +-1 on (12) and (23).
    """
    table = ct.table
    gd = table.gd
    if coradical_dimension(ct) != 6:
        raise RuntimeError("coradical is not k^{S_3}")
    found = []
    t12, t23 = gd.index[T12.perm()], gd.index[T23.perm()]
    for s12, s23 in iproduct((1, -1), repeat=2):
        # extend along words in the two generators
        c = {gd.e: 1}
        frontier = [gd.e]
        ok = True
        while frontier and ok:
            nxt = []
            for g in frontier:
                for t, s in ((t12, s12), (t23, s23)):
                    h = gd.mul[t][g]
                    val = s * c[g]
                    if h in c:
                        ok &= c[h] == val
                    else:
                        c[h] = val
                        nxt.append(h)
            frontier = nxt
        if not ok:
            continue
        g = table.kg([c[h] for h in range(6)]).coeffs
        if ct.apply_delta(g) == simple_tensor(g, g) and ct.eps(g) == 1:
            found.append(g)
    return found


def skew_primitives(ct, chi):
    """Basis of {z : Delta z = z (x) 1 + chi (x) z}."""
    table = ct.table
    one = table.one().coeffs
    dim = table.dim
    eqs = {}
    for i in range(dim):
        expr = t_add(ct.delta[i], t_scale(simple_tensor({i: 1}, one), -1),
                     t_scale(simple_tensor(chi, {i: 1}), -1))
        for key, v in expr.items():
            eqs.setdefault(key, {})[i] = v
    return linalg.sparse_nullspace(list(eqs.values()), dim)


def span_closure(table, gens):
    """Subalgebra (with 1) generated by the given elements, as an echelon basis."""
    dim = table.dim
    vecs = [table.one().vector()] + [_vec(table, g) for g in gens]
    basis = linalg.row_space(vecs, dim)
    while True:
        new = list(basis)
        for u in basis:
            for v in basis:
                new.append(_vec(table, table.multiply(_sp(u), _sp(v))))
        nb = linalg.row_space(new, dim)
        if len(nb) == len(basis):
            return nb
        basis = nb


def _vec(table, x):
    v = [Fraction(0)] * table.dim
    for k, c in x.items():
        v[k] = c
    return v


def _sp(v):
    return {i: c for i, c in enumerate(v) if c}


@dataclass
class SweedlerReport:
    dimension: int
    y_squared: dict
    y_squared_zero: bool
    chi_squared_one: bool
    anticommute: bool
    y_skew_primitive: bool
    span_closed: bool
    literal_presentation: bool

    def to_json(self):
        return self.__dict__


def sweedler_check(ct):
    table = ct.table
    chi = table.chi().coeffs
    y = table.x(X12) + table.x(X13) + table.x(X23)
    y = y.coeffs
    one = table.one().coeffs
    y2 = table.multiply(y, y)
    sub = span_closure(table, [chi, y])
    four = [one, chi, y, table.multiply(chi, y)]
    closed = linalg.rank([_vec(table, v) for v in four], table.dim) == 4 and len(sub) == 4
    dy = ct.apply_delta(y)
    return SweedlerReport(
        dimension=len(sub),
        y_squared={table.basis_label(k): str(v) for k, v in y2.items()},
        y_squared_zero=not y2,
        chi_squared_one=table.multiply(chi, chi) == one,
        anticommute=t_add(table.multiply(y, chi), table.multiply(chi, y)) == {},
        y_skew_primitive=dy == t_add(simple_tensor(y, one), simple_tensor(chi, y)),
        span_closed=closed,
        literal_presentation=not y2 and closed,
    )


def is_hopf_subalgebra(ct, basis):
    table = ct.table
    dim = table.dim
    for u in basis:
        for v in basis:
            if not linalg.in_span(basis, _vec(table, table.multiply(_sp(u), _sp(v))), dim):
                return False
        if not linalg.in_span(basis, _vec(table, ct.apply_antipode(_sp(u))), dim):
            return False
        du = ct.apply_delta(_sp(u))
        # Delta(u) lies in B (x) B iff it is killed by (P (x) id) and (id (x) P)
        # for any projection P with kernel B; test via coordinates instead
        if not _tensor_in(table, basis, du):
            return False
    return True


def _tensor_in(table, basis, tensor):
    dim = table.dim
    # write tensor as sum_j e_j (x) r_j and check each r_j and each column in span
    rows, cols = {}, {}
    for (j, k), c in tensor.items():
        rows.setdefault(j, [Fraction(0)] * dim)[k] += c
        cols.setdefault(k, [Fraction(0)] * dim)[j] += c
    return (all(linalg.in_span(basis, r, dim) for r in rows.values())
            and all(linalg.in_span(basis, c, dim) for c in cols.values()))


def hopf_subalgebra_census(ct):
    table = ct.table
    chi = table.chi().coeffs
    y = (table.x(X12) + table.x(X13) + table.x(X23)).coeffs
    cands = {
        "k<chi>": span_closure(table, [chi]),
        "sweedler": span_closure(table, [chi, y]),
        "k^S3": span_closure(table, [table.delta(g).coeffs for g in range(6)]),
        "A": linalg.identity(table.dim),
    }
    return {name: {"dim": len(b), "hopf": is_hopf_subalgebra(ct, b)} for name, b in cands.items()}


# ---------------------------------------------------------------- integrals

@dataclass
class IntegralSpace:
    left: list
    right: list
    dual_left: list
    dual_right: list
    modular_function_trivial: bool
    distinguished_grouplike: dict

    @property
    def unimodular(self):
        return linalg.same_span(self.left, self.right, len(self.left[0]))

    @property
    def dual_unimodular(self):
        return linalg.same_span(self.dual_left, self.dual_right, len(self.dual_left[0]))


def _integral_space(ct, side):
    table = ct.table
    dim = table.dim
    gens = [table.x(t).coeffs for t in range(3)] + [table.delta(g).coeffs for g in range(6)]
    rows = []
    for a in gens:
        e = ct.eps(a)
        mat = {}
        for j in range(dim):
            prod = table.multiply(a, {j: 1}) if side == "left" else table.multiply({j: 1}, a)
            for k, v in prod.items():
                mat.setdefault(k, {})[j] = mat.get(k, {}).get(j, 0) + v
            if e:
                mat.setdefault(j, {})[j] = mat.get(j, {}).get(j, 0) - e
        rows.extend(mat.values())
    return linalg.sparse_nullspace(rows, dim)


def _dual_integral_space(ct, side):
    """lambda with (id (x) lambda) Delta(a) = lambda(a) 1 (left) or the mirror (right)."""
    table = ct.table
    dim = table.dim
    one = table.one().coeffs
    rows = {}
    for a in range(dim):
        for (j, k), c in ct.delta[a].items():
            out_idx, var = (j, k) if side == "left" else (k, j)
            rows.setdefault((a, out_idx), {})
            rows[(a, out_idx)][var] = rows[(a, out_idx)].get(var, 0) + c
        for m, v in one.items():
            rows.setdefault((a, m), {})
            rows[(a, m)][a] = rows[(a, m)].get(a, 0) - v
    return linalg.sparse_nullspace(list(rows.values()), dim)


def integrals(table, ct):
    left = _integral_space(ct, "left")
    right = _integral_space(ct, "right")
    dl = _dual_integral_space(ct, "left")
    dr = _dual_integral_space(ct, "right")
    # modular function: Lambda a = alpha(a) Lambda for a left integral Lambda
    lam = _sp(left[0])
    trivial = True
    gens = [table.x(t).coeffs for t in range(3)] + [table.delta(g).coeffs for g in range(6)]
    for a in gens:
        prod = table.multiply(lam, a)
        if prod != t_scale(lam, ct.eps(a)):
            trivial = False
    # distinguished group-like: (lambda (x) id) Delta(a) = lambda(a) g for a left dual integral
    lam_d = dl[0]
    g = None
    for a in range(table.dim):
        la = lam_d[a]
        if not la:
            continue
        acc = {}
        for (j, k), c in ct.delta[a].items():
            if lam_d[j]:
                acc[k] = acc.get(k, 0) + c * lam_d[j]
        cand = {k: v / la for k, v in acc.items() if v}
        if g is None:
            g = cand
        elif g != cand:
            raise RuntimeError("distinguished group-like is not well defined")
    return IntegralSpace(left, right, dl, dr, trivial, g)


# ---------------------------------------------------------------- quasitriangularity

def r0(table):
    one, chi = table.one().coeffs, table.chi().coeffs
    return t_scale(t_add(simple_tensor(one, one), simple_tensor(one, chi), simple_tensor(chi, one),
                         t_scale(simple_tensor(chi, chi), -1)), HALF)


@dataclass
class QTReport:
    coradical_dim_A: int
    coradical_dim_dual: int
    not_iso_to_dual_cop: bool
    r0_squared_is_one: bool
    failing: list
    witness: str | None

    def to_json(self):
        return self.__dict__


def qt_obstruction(ct):
    table = ct.table
    gd = table.gd
    R = r0(table)
    one = table.one().coeffs
    failing = []
    for g in range(6):
        d = ct.delta[table.index[((), g)]]
        dcop = {(k, j): c for (j, k), c in d.items()}
        if t_mul(table, dcop, R) != t_mul(table, R, d):
            failing.append(str(gd.elems[g]))
    c_a = coradical_dimension(ct)
    c_dual = table.dim - jacobson_dimension(table)
    return QTReport(
        coradical_dim_A=c_a,
        coradical_dim_dual=c_dual,
        not_iso_to_dual_cop=c_a != c_dual,
        r0_squared_is_one=t_mul(table, R, R) == simple_tensor(one, one),
        failing=failing,
        witness=failing[0] if failing else None,
    )


def hopf_certificate(a):
    """Everything hopf-report prints, as plain data."""
    table = build_algebra(a)
    ct = build_coalgebra(table)
    s2, s4 = check_s2_conjugation(ct)
    gl = grouplikes(ct)
    chi = table.chi().coeffs
    sp = skew_primitives(ct, chi)
    integ = integrals(table, ct)
    qt = qt_obstruction(ct)
    sw = sweedler_check(ct)
    lab = table.basis_label
    return {
        "schema": "hopf72/hopf-report/1",
        "params": a.strings(),
        "axioms": {
            "delta_multiplicative": check_delta_multiplicative(ct),
            "coassociative": check_coassociative(ct),
            "counit": check_counit(ct),
            "antipode": check_antipode(ct),
            "s2_is_chi_conjugation": s2,
            "s4_identity": s4,
        },
        "grouplikes": [{lab(k): str(v) for k, v in sorted(g.items())} for g in gl],
        "skew_primitives": [{lab(k): str(v) for k, v in enumerate(b) if v} for b in sp],
        "sweedler": sw.to_json(),
        "hopf_subalgebras": hopf_subalgebra_census(ct),
        "integrals": {
            "left": [{lab(k): str(v) for k, v in enumerate(b) if v} for b in integ.left],
            "right": [{lab(k): str(v) for k, v in enumerate(b) if v} for b in integ.right],
            "unimodular": integ.unimodular,
            "dual_unimodular": integ.dual_unimodular,
            "modular_function_trivial": integ.modular_function_trivial,
            "distinguished_grouplike": {lab(k): str(v) for k, v in sorted(integ.distinguished_grouplike.items())},
        },
        "s2_table": s2_witness_table(ct),
        "qt_obstruction": qt.to_json(),
    }


# ---------------------------------------------------------------- the variant K and its module

@dataclass
class KReport:
    dimension: int
    closure: bool
    associative: bool
    m3_relators_vanish: bool
    m3_failures: list
    sample_action: dict
    r_relator_scalars: dict

    @property
    def ok(self):
        return self.dimension == 72 and self.closure and self.associative and self.m3_relators_vanish

    def to_json(self):
        d = dict(self.__dict__)
        d["ok"] = self.ok
        return d


def build_K_and_M3(a):
    from .repcore import M3_module

    table = build_algebra(a, "K")
    M = M3_module(a)
    fails = M.relation_failures()
    gd = table.gd
    e = gd.e
    t12 = gd.index[T12.perm()]
    # x12 . m_e
    col = [M.xs[X12][i][e] for i in range(6)]
    # the R relators on m_g: sum over the three words of the scalar products
    rscal = {}
    for rel in relations(a, 3, "K")[:2]:
        vals = []
        for g in range(6):
            acc = [Fraction(0)] * 6
            for w in rel.terms:
                v = [Fraction(int(i == g)) for i in range(6)]
                for t in reversed(w):
                    v = linalg.matvec(M.xs[t], v)
                acc = [x + y for x, y in zip(acc, v)]
            vals.append(str(sum(acc)))
        rscal[rel.name] = vals
    return KReport(
        dimension=table.dim,
        closure=table.closure_ok(),
        associative=verify_associativity(table, "generators"),
        m3_relators_vanish=not fails,
        m3_failures=fails,
        sample_action={"x12.m_e": {M.names[i]: str(c) for i, c in enumerate(col) if c},
                       "expected": {M.names[t12]: str(-a[T12])} if a[T12] else {}},
        r_relator_scalars=rscal,
    )

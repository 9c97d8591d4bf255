"""Ext^1 between simple modules, separated quivers and representation type."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .repcore import (GD, Submodule, algebra, classify_simples, hom_space, is_indecomposable,
                      is_isomorphic, is_simple, named_simples, radical, simple_name, socle,
                      submodule_lattice, top, verma, whole, zero)
from .presentation import relations
from .symgroup import classify_regime


class ExtMismatch(RuntimeError):
    """The two Ext computations disagree."""


# ---------------------------------------------------------------- Ext^1(S, T)

def _constraints(a, variant="A"):
    """Pairs (h, {word: scalar}) with sum scalar * x_word = 0 on weight h."""
    out = []
    for rel in relations(a, 3, variant):
        for h in range(6):
            d = {w: c[h] for w, c in rel.terms.items() if c[h]}
            if d:
                out.append((h, d))
    for lhs, rhs in algebra(a, variant).rs.rules.items():
        for h in range(6):
            d = {lhs: Fraction(1)}
            for w, c in rhs.items():
                if c[h]:
                    d[w] = d.get(w, 0) - c[h]
            out.append((h, d))
    return out


def _word(M, word):
    W = linalg.identity(M.dim)
    for t in reversed(word):
        W = linalg.matmul(M.xs[t], W)
    return W


def ext1_cocycles(S, T):
    """dim Ext^1(S, T) from derivations d_t : S -> T (weight t-shifting) modulo inner ones."""
    a = S.a
    wS, wT = S.weight_spaces(), T.weight_spaces()
    var = {}
    for t in range(3):
        for h in range(6):
            th = GD.mul[GD.tperm[t]][h]
            for i in wT[th]:
                for j in wS[h]:
                    var[(t, i, j)] = len(var)
    nv = len(var)
    cacheS, cacheT = {}, {}

    def ws(word):
        if word not in cacheS:
            cacheS[word] = _word(S, word)
        return cacheS[word]

    def wt(word):
        if word not in cacheT:
            cacheT[word] = _word(T, word)
        return cacheT[word]

    rows = []
    for h, terms in _constraints(a):
        # off-diagonal block of sum c x_word on S[h]: sum_i X^T(prefix) d_{w_i} X^S(suffix)
        for j in wS[h]:
            acc = {}
            for word, c in terms.items():
                for pos in range(len(word)):
                    pre, t, suf = word[:pos], word[pos], word[pos + 1:]
                    Ssuf, Tpre = ws(suf), wt(pre)
                    for k in range(S.dim):
                        sv = Ssuf[k][j]
                        if not sv:
                            continue
                        for i in range(T.dim):
                            if (t, i, k) not in var:
                                continue
                            for r in range(T.dim):
                                tv = Tpre[r][i]
                                if tv:
                                    key = (r, var[(t, i, k)])
                                    acc[key] = acc.get(key, 0) + c * tv * sv
            byrow = {}
            for (r, v), c in acc.items():
                if c:
                    byrow.setdefault(r, {})[v] = c
            rows.extend(byrow.values())
    zdim = nv - len(linalg.sparse_rref([dict(r) for r in rows])[1]) if rows else nv
    hom_kg = sum(len(wS[h]) * len(wT[h]) for h in range(6))
    hom_a = len(hom_space(S, T))
    return zdim - (hom_kg - hom_a)


def _cover_vertex(S):
    """g with top(M_g) = S: any weight of S at which a Verma module maps onto S."""
    simples = named_simples(S.a)
    for g in sorted(set(S.weights)):
        P = verma(S.a, g)
        Tp = top(P)
        if is_isomorphic(Tp, S) is not None:
            return g, P
    raise RuntimeError(f"no Verma module covers {S.label}")


def ext1_resolution(S, T):
    """dim Ext^1(S, T) = dim Hom(Omega S, T) - dim Hom(P_0, T) + dim Hom(S, T)."""
    g, P = _cover_vertex(S)
    omega = radical(P).as_module()
    return len(hom_space(omega, T)) - len(hom_space(P, T)) + len(hom_space(S, T))


def ext1(S, T):
    c = ext1_cocycles(S, T)
    r = ext1_resolution(S, T)
    if c != r:
        raise ExtMismatch(f"Ext^1({S.label}, {T.label}): cocycles {c}, resolution {r}")
    return c


@dataclass
class ExtMatrix:
    simples: list
    dims: list

    def names(self):
        return [S.label for S in self.simples]

    def to_json(self):
        return {"simples": self.names(), "dims": self.dims}


def ext_matrix(a):
    simples = named_simples(a)
    dims = [[ext1(S, T) for T in simples] for S in simples]
    return ExtMatrix(simples, dims)


# ---------------------------------------------------------------- extension catalog

@dataclass
class Extension:
    socle: str
    top: str
    realization: str
    family: bool
    verified: bool


def extension_catalog(a, S, T):
    """Non-split extensions 0 -> S -> X -> T -> 0, realised inside the injective hull of S.

    The hull is the Verma module whose socle is S; the realisations are the
    submodules X with soc X = S and X / S = T.
    """
    simples = named_simples(a)
    sname, tname = S.label, T.label
    hull = None
    for g in range(6):
        M = verma(a, g)
        so = socle(M)
        if is_isomorphic(so.as_module(), S) is not None:
            hull, hull_g, soc_sub = M, g, so
            break
    if hull is None:
        raise RuntimeError(f"no Verma module has socle {sname}")
    out = []
    reg = classify_regime(a).tag
    if T.dim == 1:
        # X = soc + k u with u of weight h and x_t u in soc for all t
        h = T.weights[0]
        ws = hull.weight_spaces()
        rows = []
        for t in range(3):
            th = GD.mul[GD.tperm[t]][h]
            # condition: the image of u lies in soc[th]; project onto a complement
            for r in _complement_functionals(soc_sub, th):
                rows.append([sum(r[n] * hull.xs[t][i][j] for n, i in enumerate(ws[th])) for j in ws[h]])
        U = linalg.nullspace(rows, len(ws[h])) if rows else linalg.identity(len(ws[h]))
        U = [u for u in U]
        socw = soc_sub.parts[h]
        fresh = [u for u in U if not linalg.in_span(socw, u, len(ws[h]))]
        if fresh:
            # U / soc[h] is the space of classes; its projectivisation parametrises X
            quotient_dim = linalg.rank(U + socw, len(ws[h])) - len(socw)
            X = soc_sub + Submodule(hull, {h: [fresh[0]]})
            ok = (X.is_closed() and socle_of(X) == soc_sub and X.quotient(soc_sub).dim == 1
                  and is_indecomposable(X.as_module()))
            u = [Fraction(0)] * hull.dim
            for c, i in zip(fresh[0], ws[h]):
                u[i] = c
            if quotient_dim == 1:
                desc = f"A.({describe_vector(hull, u)}) in {hull.label}"
            else:
                desc = f"A.u in {hull.label}, u in {hull.label}[{GD.elems[h]}] outside the socle"
            out.append(Extension(sname, tname, desc, quotient_dim > 1, ok))
    else:
        if reg not in ("generic", "sub-generic"):
            return out
        cert = submodule_lattice(a, hull_g)
        socnode = [n for n in cert.nodes if not n.is_family and n.sub == soc_sub]
        if not socnode:
            return out
        name = socnode[0].name
        for up, lo, lab in cert.edges:
            if lo == name and lab == tname:
                node = next(n for n in cert.nodes if n.name == up)
                X = node.sample()
                ok = (X.is_closed() and socle_of(X) == soc_sub
                      and is_isomorphic(X.quotient(soc_sub), T) is not None
                      and is_indecomposable(X.as_module()))
                out.append(Extension(sname, tname, f"{up} in {hull.label}", node.is_family, ok))
    return out


def describe_vector(M, v):
    terms = []
    for c, name in zip(v, M.names):
        if c:
            terms.append(name if c == 1 else f"-{name}" if c == -1 else f"{c}*{name}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


def socle_of(X):
    """Socle of a submodule, as a submodule of the same ambient module."""
    Xm = X.as_module()
    so = socle(Xm)
    vecs = X.vectors()
    # translate echelon coordinates back into the ambient module
    basis = [(h, r) for h in range(6) for r in X.parts[h]]
    amb = []
    for v in so.vectors():
        w = [Fraction(0)] * X.M.dim
        for c, (h, r) in zip(v, basis):
            if c:
                for n, i in enumerate(X.ws[h]):
                    w[i] += c * r[n]
        amb.append(w)
    return Submodule.from_vectors(X.M, amb) if amb else zero(X.M)


def _complement_functionals(sub, h):
    """Linear functionals on M[h] whose common kernel is sub[h]."""
    d = len(sub.ws[h])
    return linalg.nullspace(sub.parts[h], d) if sub.parts[h] else linalg.identity(d)


# ---------------------------------------------------------------- separated quiver and graphs

@dataclass
class SeparatedQuiver:
    vertices: list
    arrows: dict

    def graph(self):
        """Underlying multigraph as {frozenset(u, v): multiplicity}."""
        g = {}
        for (u, v), m in self.arrows.items():
            if m:
                key = (u, v)
                g[key] = g.get(key, 0) + m
        return g

    def components(self):
        return graph_components(self.vertices, self.graph())

    def to_dot(self):
        lines = ["digraph separated {"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for (u, v), m in sorted(self.arrows.items()):
            for _ in range(m):
                lines.append(f'  "{u}" -> "{v}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def separated_quiver(a, ext=None):
    ext = ext or ext_matrix(a)
    names = ext.names()
    verts = names + [n + "'" for n in names]
    arrows = {}
    for i, s in enumerate(names):
        for j, t in enumerate(names):
            if ext.dims[i][j]:
                arrows[(s, t + "'")] = ext.dims[i][j]
    return SeparatedQuiver(verts, arrows)


def graph_components(vertices, edges):
    adj = {v: set() for v in vertices}
    for (u, v), m in edges.items():
        adj[u].add(v)
        adj[v].add(u)
    seen, comps = set(), []
    for v in vertices:
        if v in seen:
            continue
        comp, stack = [], [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append((comp, {e: m for e, m in edges.items() if e[0] in comp}))
    return comps


def _det(m):
    n = len(m)
    if n == 0:
        return Fraction(1)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


def tits_form(vertices, edges):
    """Symmetric matrix of q(x) = sum x_v^2 - sum_{edges} m x_u x_v."""
    idx = {v: i for i, v in enumerate(vertices)}
    n = len(vertices)
    q = [[Fraction(2 if i == j else 0) for j in range(n)] for i in range(n)]
    for (u, v), m in edges.items():
        if u == v:
            q[idx[u]][idx[u]] -= 2 * m
        else:
            q[idx[u]][idx[v]] -= m
            q[idx[v]][idx[u]] -= m
    return q


def _definiteness(q):
    n = len(q)
    if all(_det([row[:k] for row in q[:k]]) > 0 for k in range(1, n + 1)):
        return "definite"
    for k in range(1, n + 1):
        for sub in itertools.combinations(range(n), k):
            if _det([[q[i][j] for j in sub] for i in sub]) < 0:
                return "indefinite"
    return "semidefinite"


@dataclass
class GraphClass:
    kind: str
    name: str

    def __str__(self):
        return f"{self.kind} {self.name}".strip()


def classify_graph(vertices, edges):
    """Dynkin / Affine / Neither for a connected multigraph."""
    q = tits_form(vertices, edges)
    d = _definiteness(q)
    if d == "indefinite":
        return GraphClass("Neither", "")
    n = len(vertices)
    if d == "semidefinite":
        radical_dim = n - linalg.rank(q, n)
        if radical_dim != 1:
            return GraphClass("Neither", "")
    name = _shape_name(vertices, edges, affine=(d == "semidefinite"))
    return GraphClass("Dynkin" if d == "definite" else "Affine", name)


def _shape_name(vertices, edges, affine):
    n = len(vertices)
    if n == 1 and not edges:
        return "A1"
    deg = {v: 0 for v in vertices}
    simple = all(m == 1 for m in edges.values())
    for (u, v), m in edges.items():
        deg[u] += m
        deg[v] += m
    if not simple:
        return "~A1" if affine and n == 2 else "?"
    nedges = len(edges)
    if affine and nedges == n and all(d == 2 for d in deg.values()):
        return f"~A{n - 1}"
    if nedges != n - 1:
        return "?"
    branch = [v for v in vertices if deg[v] >= 3]
    if not branch:
        return f"A{n}"
    adj = {v: [] for v in vertices}
    for (u, v) in edges:
        adj[u].append(v)
        adj[v].append(u)

    def arm(start, prev):
        length, cur, p = 1, start, prev
        while deg[cur] == 2:
            nxt = [x for x in adj[cur] if x != p][0]
            p, cur = cur, nxt
            length += 1
        return length, cur

    if len(branch) == 1:
        c = branch[0]
        arms = sorted(arm(x, c)[0] for x in adj[c])
        if deg[c] == 4 and arms == [1, 1, 1, 1]:
            return "~D4"
        if deg[c] != 3:
            return "?"
        table = {(1, 1): None, (1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8",
                 (2, 2, 2): "~E6", (1, 3, 3): "~E7", (1, 2, 5): "~E8"}
        if arms[0] == arms[1] == 1:
            return f"D{n}"
        return table.get(tuple(arms), "?")
    if len(branch) == 2 and all(deg[b] == 3 for b in branch):
        return f"~D{n - 1}"
    return "?"


def _path(n):
    return [str(i) for i in range(n)], {(str(i), str(i + 1)): 1 for i in range(n - 1)}


def known_diagrams(max_vertices=10):
    """Every Dynkin and affine diagram with at most ``max_vertices`` vertices, by name."""
    out = {}
    for n in range(1, max_vertices + 1):
        out[f"A{n}"] = _path(n)
    for n in range(4, max_vertices + 1):
        v, e = _path(n - 1)
        e[(str(n - 3), str(n - 1))] = 1
        out[f"D{n}"] = ([*v, str(n - 1)], e)

    def star(arms):
        verts, edges, k = ["c"], {}, 0
        for length in arms:
            prev = "c"
            for _ in range(length):
                k += 1
                edges[(prev, f"v{k}")] = 1
                verts.append(f"v{k}")
                prev = f"v{k}"
        return verts, edges

    for name, arms in (("E6", (1, 2, 2)), ("E7", (1, 2, 3)), ("E8", (1, 2, 4)),
                       ("~E6", (2, 2, 2)), ("~E7", (1, 3, 3)), ("~E8", (1, 2, 5)), ("~D4", (1, 1, 1, 1))):
        v, e = star(arms)
        if len(v) <= max_vertices:
            out[name] = (v, e)
    out["~A1"] = (["0", "1"], {("0", "1"): 2})
    for n in range(3, max_vertices + 1):
        v, e = _path(n)
        e[(str(n - 1), "0")] = 1
        out[f"~A{n - 1}"] = (v, e)
    for n in range(6, max_vertices + 1):
        # ~D_{n-1}: a path with two leaves at each end
        v, e = _path(n - 4)
        end = str(n - 5)
        e.update({("0", "x1"): 1, ("0", "x2"): 1, (end, "y1"): 1, (end, "y2"): 1})
        out[f"~D{n - 1}"] = ([*v, "x1", "x2", "y1", "y2"], e)
    return out


def complete_bipartite(m, n):
    v = [f"a{i}" for i in range(m)] + [f"b{j}" for j in range(n)]
    return v, {(f"a{i}", f"b{j}"): 1 for i in range(m) for j in range(n)}


# ---------------------------------------------------------------- verdicts

@dataclass
class RepTypeVerdict:
    regime: str
    ext: ExtMatrix
    components: list
    verdict: str
    basis_of_inference: list
    open_questions: list = field(default_factory=list)

    def to_json(self):
        return {
            "schema": "hopf72/quiver/1",
            "regime": self.regime,
            "ext_matrix": self.ext.to_json(),
            "components": [{"vertices": sorted(c[0]), "class": str(c[1])} for c in self.components],
            "verdict": self.verdict,
            "basis_of_inference": self.basis_of_inference,
            "open_questions": self.open_questions,
        }


def rep_type_verdict(a, ext=None):
    reg = classify_regime(a).tag
    ext = ext or ext_matrix(a)
    q = separated_quiver(a, ext)
    comps = [(verts, classify_graph(verts, edges)) for verts, edges in q.components()]
    kinds = {c[1].kind for c in comps}
    basis = []
    opens = []
    if "Neither" in kinds:
        verdict = "wild"
        basis.append("separated quiver of A/rad^2 has a component that is neither Dynkin nor affine, "
                     "so A/rad^2 is wild")
        basis.append("A/rad^2 is a quotient of A, so A is wild")
    elif kinds == {"Dynkin"}:
        verdict = "finite"
        basis.append("separated quiver of A/rad^2 is a union of Dynkin diagrams")
        opens.append("finite type of A/rad^2 does not by itself decide the type of A")
    else:
        verdict = "not finite"
        basis.append("separated quiver of A/rad^2 has an affine component, so A/rad^2 is of infinite "
                     "(tame) representation type")
        basis.append("A/rad^2 is a quotient of A, so A is not of finite representation type")
        if reg == "generic":
            basis.append("the non-split extensions of L by k_e form a P^1 family of pairwise "
                         "non-isomorphic indecomposable modules")
        opens.append("tame versus wild for A itself is not settled by this argument")
    return RepTypeVerdict(reg, ext, comps, verdict, basis, opens)

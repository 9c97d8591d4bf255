"""Exact linear algebra over the rationals.

Matrices are lists of rows, rows are lists of Fraction.  Nothing here is
clever; the matrices in this package are at most a few thousand columns
wide and mostly sparse, so a plain Gauss-Jordan pass is fast enough.
"""
from fractions import Fraction


def frac(x):
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def zeros(r, c):
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def matmul(a, b):
    if not a:
        return []
    n = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Fraction(0)] * n
        for k, v in enumerate(row):
            if v:
                bk = b[k]
                for j in range(n):
                    if bk[j]:
                        acc[j] += v * bk[j]
        out.append(acc)
    return out


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a]


def transpose(a):
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def is_zero(a):
    return all(not x for row in a for x in row)


def rref(rows, ncols=None):
    """Reduced row echelon form.  Returns (reduced rows, pivot columns)."""
    m = [list(map(frac, r)) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = None
        for i in range(r, len(m)):
            if m[i][c]:
                p = i
                break
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        if inv != 1:
            m[r] = [x * inv for x in m[r]]
        pr = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                mi = m[i]
                for j in range(c, ncols):
                    if pr[j]:
                        mi[j] -= f * pr[j]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols=None):
    if not rows:
        return 0
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of {v : rows . v = 0}."""
    red, piv = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, piv):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(rows, rhs, ncols):
    """One solution of rows . v = rhs, or None when inconsistent."""
    aug = [list(r) + [frac(b)] for r, b in zip(rows, rhs)]
    red, piv = rref(aug, ncols + 1)
    if ncols in piv:
        return None
    v = [Fraction(0)] * ncols
    for row, p in zip(red, piv):
        v[p] = row[ncols]
    return v


def inverse(a):
    n = len(a)
    aug = [list(a[i]) + identity(n)[i] for i in range(n)]
    red, piv = rref(aug, 2 * n)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def row_space(vectors, ncols):
    """Echelon basis of the span of the given vectors."""
    if not vectors:
        return []
    return rref(vectors, ncols)[0]


def in_span(basis, v, ncols):
    if not any(v):
        return True
    return rank(list(basis) + [v], ncols) == rank(basis, ncols) if basis else False


def same_span(a, b, ncols):
    ea, eb = row_space(a, ncols), row_space(b, ncols)
    return ea == eb


def coordinates(basis, v):
    """Coefficients c with sum c_i basis_i = v, or None."""
    n = len(v)
    cols = transpose(basis) if basis else [[] for _ in range(n)]
    return solve(cols, v, len(basis))


def sparse_rref(rows):
    """Row reduce a list of sparse rows {col: value}.  Returns (rows, pivots)."""
    pivots = {}
    out = []
    for row in rows:
        row = {k: frac(v) for k, v in row.items() if v}
        for p in sorted(pivots):
            if p in row and row[p]:
                f = row[p]
                for k, v in out[pivots[p]].items():
                    row[k] = row.get(k, 0) - f * v
                row = {k: v for k, v in row.items() if v}
        if not row:
            continue
        p = min(row)
        inv = 1 / row[p]
        row = {k: v * inv for k, v in row.items()}
        for q, idx in pivots.items():
            r = out[idx]
            if p in r:
                f = r[p]
                for k, v in row.items():
                    r[k] = r.get(k, 0) - f * v
                out[idx] = {k: v for k, v in r.items() if v}
        pivots[p] = len(out)
        out.append(row)
    order = sorted(pivots)
    return [out[pivots[p]] for p in order], order


def sparse_nullspace(rows, ncols):
    red, piv = sparse_rref(rows)
    pset = set(piv)
    basis = []
    for f in range(ncols):
        if f in pset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, piv):
            if f in row:
                v[p] = -row[f]
        basis.append(v)
    return basis


def trace_form_radical(products, dim):
    """Jacobson radical of a finite-dimensional algebra over a field of characteristic 0.

    ``products`` maps (i, j) to {k: c}.  The radical is the kernel of the
    form (u, v) -> tr(L_{uv}).
    """
    tr = [Fraction(0)] * dim
    for (i, j), p in products.items():
        c = p.get(j)
        if c:
            tr[i] += c
    form = zeros(dim, dim)
    for (i, j), p in products.items():
        s = sum((c * tr[k] for k, c in p.items() if tr[k]), Fraction(0))
        if s:
            form[i][j] = s
    return nullspace(form, dim)

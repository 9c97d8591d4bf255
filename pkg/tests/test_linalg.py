from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopf72 import linalg

entries = st.integers(-4, 4).map(Fraction) | st.fractions(-3, 3, max_denominator=5)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    n = len(m[0])
    ns = linalg.nullspace(m, n)
    assert linalg.rank(m, n) + len(ns) == n
    for v in ns:
        assert not any(linalg.matvec(m, v))


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rref_is_reduced_and_spans(m):
    n = len(m[0])
    red, piv = linalg.rref(m, n)
    for row, p in zip(red, piv):
        assert row[p] == 1
        assert all(other[p] == 0 for other in red if other is not row)
    assert piv == sorted(piv)
    for row in m:
        assert linalg.in_span(red, row, n)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_sparse_agrees_with_dense(m):
    n = len(m[0])
    sparse = [{j: x for j, x in enumerate(r) if x} for r in m]
    red, piv = linalg.sparse_rref(sparse)
    dred, dpiv = linalg.rref(m, n)
    assert piv == dpiv
    assert [[r.get(j, 0) for j in range(n)] for r in red] == dred
    assert linalg.same_span(linalg.sparse_nullspace(sparse, n), linalg.nullspace(m, n), n)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(entries, min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
def test_inverse(m):
    n = len(m)
    if linalg.rank(m, n) < n:
        with pytest.raises(ZeroDivisionError):
            linalg.inverse(m)
    else:
        assert linalg.matmul(linalg.inverse(m), m) == linalg.identity(n)


@settings(max_examples=60, deadline=None)
@given(matrices(), st.data())
def test_solve_and_coordinates(m, data):
    n = len(m[0])
    x = data.draw(st.lists(entries, min_size=n, max_size=n))
    b = linalg.matvec(m, x)
    y = linalg.solve(m, b, n)
    assert y is not None and linalg.matvec(m, y) == b
    c = linalg.coordinates(linalg.transpose(m), b)
    assert c is not None


def test_solve_inconsistent():
    assert linalg.solve([[1, 1], [1, 1]], [1, 2], 2) is None


def _algebra_products(mult, dim):
    out = {}
    for i in range(dim):
        for j in range(dim):
            p = mult(i, j)
            if p:
                out[(i, j)] = p
    return out


def test_trace_form_radical_upper_triangular():
    # 2x2 upper triangular matrices: basis e11, e12, e22; radical = span(e12)
    E = {(0, 0): 0, (0, 1): 1, (1, 1): 2}
    units = [(0, 0), (0, 1), (1, 1)]

    def mult(i, j):
        (a, b), (c, d) = units[i], units[j]
        return {E[(a, d)]: Fraction(1)} if b == c else {}

    rad = linalg.trace_form_radical(_algebra_products(mult, 3), 3)
    assert rad == [[0, 1, 0]]


def test_trace_form_radical_dual_numbers():
    # k[x]/x^3: radical spanned by x, x^2
    def mult(i, j):
        return {i + j: Fraction(1)} if i + j < 3 else {}

    rad = linalg.trace_form_radical(_algebra_products(mult, 3), 3)
    assert linalg.same_span(rad, [[0, 1, 0], [0, 0, 1]], 3)

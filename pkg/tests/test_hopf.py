from fractions import Fraction

import pytest

from hopf72 import linalg
from hopf72.hopf import (build_K_and_M3, check_antipode, check_coassociative, check_counit,
                         check_delta_multiplicative, check_s2_conjugation, coradical_dimension,
                         grouplikes, hopf_subalgebra_census, integrals, jacobson_dimension,
                         qt_obstruction, r0, simple_tensor, skew_primitives, sweedler_check, t_add,
                         t_mul)
from hopf72.presentation import M4, X12, X13, X23
from hopf72.repcore import algebra

from conftest import GENERIC, NAMED, SUBGENERIC, ZERO, coalgebra


@pytest.mark.parametrize("name", list(NAMED))
def test_axioms(name):
    ct = coalgebra(NAMED[name])
    assert check_delta_multiplicative(ct)
    assert check_coassociative(ct)
    assert check_counit(ct)
    assert check_antipode(ct)
    assert check_s2_conjugation(ct) == (True, True)


def test_generator_coproduct_and_antipode():
    table = algebra(GENERIC)
    ct = coalgebra(GENERIC)
    gd = table.gd
    one = table.one().coeffs
    x13 = table.x(X13).coeffs
    expected = simple_tensor(x13, one)
    for h in range(6):
        conj = gd.conj[X13][h]
        expected = t_add(expected, {k: v * gd.sign[h] for k, v in
                                    simple_tensor(table.delta(h).coeffs, table.x(conj).coeffs).items()})
    assert ct.apply_delta(x13) == expected
    for g in range(6):
        assert ct.apply_antipode(table.delta(g).coeffs) == table.delta(gd.inv[g]).coeffs
        assert ct.eps(table.delta(g).coeffs) == (1 if g == gd.e else 0)
    assert ct.eps(x13) == 0


def test_grouplikes():
    table = algebra(GENERIC)
    ct = coalgebra(GENERIC)
    gl = grouplikes(ct)
    assert sorted(map(sorted, (g.items() for g in gl))) == sorted(
        map(sorted, (table.one().coeffs.items(), table.chi().coeffs.items())))
    chi = table.chi().coeffs
    assert ct.apply_delta(chi) == simple_tensor(chi, chi)


def test_coradical_and_radical():
    ct = coalgebra(GENERIC)
    assert coradical_dimension(ct) == 6
    assert jacobson_dimension(algebra(GENERIC)) == 46


def test_skew_primitives():
    table = algebra(GENERIC)
    ct = coalgebra(GENERIC)
    chi = table.chi().coeffs
    sp = skew_primitives(ct, chi)
    one_minus_chi = (table.one() - table.chi()).vector()
    y = (table.x(X12) + table.x(X13) + table.x(X23)).vector()
    assert linalg.same_span(sp, [one_minus_chi, y], table.dim)


def test_sweedler_subalgebra():
    rep = sweedler_check(coalgebra(GENERIC))
    assert rep.dimension == 4
    assert rep.y_squared_zero and rep.chi_squared_one and rep.anticommute and rep.y_skew_primitive


def test_hopf_subalgebras():
    census = hopf_subalgebra_census(coalgebra(GENERIC))
    assert {k: (v["dim"], v["hopf"]) for k, v in census.items()} == {
        "k<chi>": (2, True), "sweedler": (4, True), "k^S3": (6, True), "A": (72, True)}


@pytest.mark.parametrize("name", list(NAMED))
def test_integrals(name):
    a = NAMED[name]
    table = algebra(a)
    ct = coalgebra(a)
    integ = integrals(table, ct)
    lam = table.word(M4, table.gd.e).vector()
    assert len(integ.left) == 1 and linalg.same_span(integ.left, [lam], table.dim)
    assert integ.unimodular and integ.dual_unimodular
    assert integ.modular_function_trivial
    assert integ.distinguished_grouplike == table.one().coeffs


def test_integral_defining_property_directly():
    table = algebra(SUBGENERIC)
    ct = coalgebra(SUBGENERIC)
    lam = table.word(M4, table.gd.e)
    for i in range(table.dim):
        b = table.basis_elem(i)
        assert b * lam == lam * ct.eps(b.coeffs)
        assert lam * b == lam * ct.eps(b.coeffs)


def test_quasitriangular_obstruction():
    ct = coalgebra(GENERIC)
    rep = qt_obstruction(ct)
    assert rep.witness == "(12)"
    assert rep.failing == ["(12)", "(13)", "(23)", "(123)", "(132)"]
    assert (rep.coradical_dim_A, rep.coradical_dim_dual) == (6, 26)
    assert rep.r0_squared_is_one
    # the witness is a genuine failure of R0 Delta = Delta^cop R0 on delta_(12)
    table = ct.table
    d = ct.delta[table.index[((), 1)]]
    dcop = {(k, j): c for (j, k), c in d.items()}
    R = r0(table)
    assert t_mul(table, dcop, R) != t_mul(table, R, d)


@pytest.mark.parametrize("name", list(NAMED))
def test_variant_K_module(name):
    a = NAMED[name]
    rep = build_K_and_M3(a)
    assert rep.ok and rep.dimension == 72 and rep.m3_failures == []
    assert rep.sample_action["x12.m_e"] == rep.sample_action["expected"]

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopf72.symgroup import (E, T12, T13, T23, ParamVector, Perm, check_chain, classify_regime,
                             conj_elem, elements, f_eval, gamma_act, isotropy_group, linkage_classes,
                             linked, normalize, omega_eval, relabel, transpositions)

from conftest import GENERIC, SUBGENERIC, ZERO, small_rationals, sum_zero

S3 = elements(3)
perms = st.sampled_from(S3)
nonzero = small_rationals.filter(lambda x: x != 0)


def P(s):
    return Perm.parse(s)


def test_composition_is_right_to_left():
    assert P("(13)") * P("(23)") == P("(132)")
    assert P("(13)(23)") == P("(132)")
    assert P("(12)") * P("(12)") == E


def test_parse_and_print_roundtrip():
    for g in S3:
        assert Perm.parse(str(g)) == g
    assert [str(g) for g in S3] == ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]


@pytest.mark.parametrize("bad", ["(14)", "(1 1)", "12", "(a)", "(12"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        Perm.parse(bad)


def test_signs_and_inverses():
    assert [g.sign() for g in S3] == [1, -1, -1, -1, 1, 1]
    for g in S3:
        assert g * g.inverse() == E


def test_conjugation_of_transpositions():
    assert T12.conj(P("(13)")) == T23
    assert T13.conj(P("(12)")) == T23
    for t in transpositions(3):
        assert t.conj(E) == t


def test_param_vector_validation():
    with pytest.raises(ValueError):
        ParamVector([1, 1, 1])
    with pytest.raises(ValueError):
        ParamVector([1, -1])
    a = ParamVector.parse("1/2,-1/3,-1/6")
    assert a[T12] == Fraction(1, 2) and a.strings() == ["1/2", "-1/3", "-1/6"]


def test_f_values():
    a = GENERIC  # a12, a13, a23 = 1, 2, -3
    assert f_eval(a, T13, P("(132)")) == 1
    assert f_eval(a, T12, P("(13)")) == a[T12] - a[T23] == 4
    assert all(f_eval(a, t, E) == 0 for t in transpositions(3))
    # f_t vanishes on the centralizer of t
    for t in transpositions(3):
        assert f_eval(a, t, t.perm()) == 0


def test_omega():
    for a in (GENERIC, SUBGENERIC, ZERO):
        for g in S3:
            assert omega_eval(a, g) == f_eval(a, T13, P("(12)") * g) - f_eval(a, T13, g)


def test_regimes():
    assert classify_regime(GENERIC).tag == "generic"
    assert classify_regime(SUBGENERIC).tag == "sub-generic"
    assert classify_regime(ZERO).tag == "zero"
    b, theta = normalize(ParamVector([-1, 2, -1]))
    assert b[T13] == b[T23] != b[T12]
    assert relabel(ParamVector([-1, 2, -1]), theta) == b


def test_isotropy():
    assert isotropy_group(GENERIC) == [E]
    assert isotropy_group(SUBGENERIC) == [E, P("(12)")]
    assert isotropy_group(ZERO) == S3


def test_linkage_classes_named():
    fmt = lambda a: sorted(sorted(map(str, c)) for c in linkage_classes(a))
    assert fmt(GENERIC) == [["(12)", "(123)", "(13)", "(132)", "(23)"], ["e"]]
    assert fmt(SUBGENERIC) == [["(12)"], ["(123)", "(13)", "(132)", "(23)"], ["e"]]
    assert fmt(ZERO) == [[str(g)] for g in sorted(S3, key=str)]


@settings(max_examples=60, deadline=None)
@given(sum_zero(), perms, perms, perms)
def test_linked_is_an_equivalence(a, g, h, k):
    assert linked(a, g, g)[0]
    assert linked(a, g, h)[0] == linked(a, h, g)[0]
    if linked(a, g, h)[0] and linked(a, h, k)[0]:
        assert linked(a, g, k)[0]


@settings(max_examples=60, deadline=None)
@given(sum_zero(), perms, perms)
def test_linkage_chains_are_valid(a, g, h):
    ok, chain = linked(a, g, h)
    if ok:
        assert check_chain(a, g, h, chain)


@settings(max_examples=60, deadline=None)
@given(sum_zero(), nonzero, perms, perms, perms)
def test_regime_and_linkage_invariant_under_rescale_relabel(a, mu, theta, g, h):
    b = gamma_act(a, mu, theta)
    assert classify_regime(b).tag == classify_regime(a).tag
    assert linked(b, conj_elem(theta, g), conj_elem(theta, h))[0] == linked(a, g, h)[0]
    assert len(isotropy_group(b)) == len(isotropy_group(a))


@settings(max_examples=60, deadline=None)
@given(sum_zero(), perms, perms)
def test_f_relabel_covariance(a, theta, g):
    b = relabel(a, theta)
    for t in transpositions(3):
        tt = t.conj(theta.inverse())
        assert f_eval(b, tt, conj_elem(theta, g)) == f_eval(a, t, g)

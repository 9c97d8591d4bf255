import pytest
from hypothesis import given, settings, strategies as st

from hopf72.extquiver import (classify_graph, complete_bipartite, ext1_cocycles, ext1_resolution,
                              ext_matrix, extension_catalog, graph_components, known_diagrams,
                              rep_type_verdict, separated_quiver, tits_form)
from hopf72.repcore import named_simples
from hopf72.symgroup import ParamVector, Perm, transpositions

from conftest import GENERIC, NAMED, SUBGENERIC, ZERO

DIAGRAMS = known_diagrams(9)


@pytest.mark.parametrize("name", sorted(DIAGRAMS))
def test_known_diagrams(name):
    v, e = DIAGRAMS[name]
    c = classify_graph(v, e)
    assert c.name == name
    assert c.kind == ("Affine" if name.startswith("~") else "Dynkin")


def test_non_diagrams():
    assert classify_graph(*complete_bipartite(3, 3)).kind == "Neither"
    assert classify_graph(["a", "b"], {("a", "b"): 3}).kind == "Neither"
    assert classify_graph(*complete_bipartite(1, 5)).kind == "Neither"
    assert classify_graph(*complete_bipartite(1, 4)).name == "~D4"
    assert classify_graph(*complete_bipartite(2, 2)).name == "~A3"


def test_tits_form_matrix():
    # symmetric matrix of 2q(x) = 2 sum x_i^2 - 2 sum_edges m x_i x_j
    assert tits_form(["0", "1"], {("0", "1"): 1}) == [[2, -1], [-1, 2]]
    assert tits_form(["0", "1"], {("0", "1"): 2}) == [[2, -2], [-2, 2]]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(DIAGRAMS)), st.randoms(use_true_random=False))
def test_classification_ignores_labels(name, rnd):
    v, e = DIAGRAMS[name]
    perm = list(v)
    rnd.shuffle(perm)
    ren = dict(zip(v, (f"z{p}" for p in perm)))
    e2 = {(ren[a], ren[b]) if rnd.random() < 0.5 else (ren[b], ren[a]): m for (a, b), m in e.items()}
    assert classify_graph([ren[x] for x in v], e2) == classify_graph(v, e)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(k for k in DIAGRAMS if k.startswith("~"))), st.data())
def test_affine_diagrams_are_minimal(name, data):
    v, e = DIAGRAMS[name]
    drop = data.draw(st.sampled_from(v))
    rest = [x for x in v if x != drop]
    sub = {k: m for k, m in e.items() if drop not in k}
    for verts, edges in graph_components(rest, sub):
        assert classify_graph(verts, edges).kind == "Dynkin"
    grow = data.draw(st.sampled_from(v))
    bigger = dict(e)
    bigger[(grow, "new")] = 1
    assert classify_graph([*v, "new"], bigger).kind == "Neither"


# ---------------------------------------------------------------- Ext^1

def test_ext_generic():
    m = ext_matrix(GENERIC)
    assert m.names() == ["k_e", "L"]
    assert m.dims == [[0, 2], [2, 0]]


def test_ext_subgeneric():
    m = ext_matrix(SUBGENERIC)
    assert m.names() == ["k_e", "k_(12)", "L"]
    assert m.dims == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]


def test_ext_zero():
    m = ext_matrix(ZERO)
    names = m.names()
    ts = [t.perm() for t in transpositions(3)]
    for i, s in enumerate(names):
        for j, t in enumerate(names):
            g, h = Perm.parse(s[2:]), Perm.parse(t[2:])
            assert m.dims[i][j] == (1 if any(g == tt * h for tt in ts) else 0)


@pytest.mark.parametrize("a", [ParamVector([-1, 2, -1]), ParamVector([3, -1, -2])], ids=str)
def test_ext_methods_agree(a):
    simples = named_simples(a)
    for S in simples:
        for T in simples:
            assert ext1_cocycles(S, T) == ext1_resolution(S, T)


def test_extension_catalog():
    kg, L = named_simples(GENERIC)
    (ext,) = extension_catalog(GENERIC, kg, L)
    assert (ext.socle, ext.top, ext.family, ext.verified) == ("k_e", "L", True, True)
    k_e, k12, L2 = named_simples(SUBGENERIC)
    (ext2,) = extension_catalog(SUBGENERIC, k_e, k12)
    assert (ext2.socle, ext2.top, ext2.family, ext2.verified) == ("k_e", "k_(12)", False, True)
    assert ext2.realization == "A.(m13.12.23) in M_e"


# ---------------------------------------------------------------- separated quivers and verdicts

def _component_classes(a):
    q = separated_quiver(a)
    return sorted(str(classify_graph(v, e)) for v, e in q.components())


def test_separated_quivers():
    assert _component_classes(GENERIC) == ["Affine ~A1", "Affine ~A1"]
    assert _component_classes(SUBGENERIC) == ["Affine ~A5"]
    comps = separated_quiver(ZERO).components()
    assert len(comps) == 2
    for v, e in comps:
        assert len(v) == 6 and len(e) == 9 and classify_graph(v, e).kind == "Neither"


@pytest.mark.parametrize("name,verdict", [("generic", "not finite"), ("sub-generic", "not finite"),
                                          ("zero", "wild")])
def test_verdicts(name, verdict):
    v = rep_type_verdict(NAMED[name])
    assert v.verdict == verdict
    d = v.to_json()
    assert d["schema"] == "hopf72/quiver/1"
    if name != "zero":
        assert any("tame versus wild" in q for q in v.open_questions)


def test_quiver_dot():
    dot = separated_quiver(GENERIC).to_dot()
    assert dot.count("->") == 4
    assert '"k_e" -> "L\'"' in dot

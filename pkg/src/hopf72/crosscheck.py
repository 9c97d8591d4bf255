"""Compare the left regular action on A delta_g with the printed Verma formulas.

Some printed coefficients evaluate f at a fixed permutation with no g, for
instance f23((13)) or f12((23)).  Those terms are read two ways: literally
(a constant) and shifted (f23((13) g)).  Every formula is evaluated in
both readings and the report records which one the table reproduces.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .presentation import X12, X13, X23, M4, BASIS_WORDS, word_str
from .symgroup import Perm, T12, T13, T23, f_eval, omega_eval

TR = {X12: T12, X13: T13, X23: T23}
P = Perm.parse


class _Ctx:
    def __init__(self, a, g, reading):
        self.a, self.g, self.reading = a, g, reading

    def f(self, t, prefix="e"):
        """f_t(prefix . g), printed with g."""
        return f_eval(self.a, t, P(prefix) * self.g)

    def bare(self, t, sigma):
        """A printed f_t(sigma) with no g; meaning depends on the reading."""
        if self.reading == "literal":
            return f_eval(self.a, t, P(sigma))
        return f_eval(self.a, t, P(sigma) * self.g)

    def om(self):
        return omega_eval(self.a, self.g)

    def A(self, t):
        return self.a[t]


m1 = ()
m13, m23, m12 = (X13,), (X23,), (X12,)
m13_12, m12_13, m23_12, m12_23 = (X13, X12), (X12, X13), (X23, X12), (X12, X23)
m13_12_13, m12_23_12, m13_12_23 = (X13, X12, X13), (X12, X23, X12), (X13, X12, X23)


@dataclass
class Formula:
    gen: int
    word: tuple
    rhs: object  # ctx -> {word: scalar}
    bare: bool = False

    @property
    def label(self):
        return f"x{TR[self.gen].label} . m[{word_str(self.word)}]"


def _F():
    out = []
    add = lambda gen, word, rhs, bare=False: out.append(Formula(gen, word, rhs, bare))
    for t in (X13, X23, X12):
        add(t, m1, lambda c, t=t: {(t,): 1})
        add(t, (t,), lambda c, t=t: {m1: c.f(TR[t])})
    add(X13, m23, lambda c: {m23_12: -1, m12_13: -1})
    add(X13, m12, lambda c: {m13_12: 1})
    add(X23, m13, lambda c: {m12_23: -1, m13_12: -1})
    add(X23, m12, lambda c: {m23_12: 1})
    add(X12, m13, lambda c: {m12_13: 1})
    add(X12, m23, lambda c: {m12_23: 1})

    add(X13, m13_12, lambda c: {m12: c.f(T13, "(12)")})
    add(X13, m12_13, lambda c: {m13_12_13: 1})
    add(X13, m23_12, lambda c: {m13_12_13: -1, m23: -c.f(T13, "(23)")})
    add(X13, m12_23, lambda c: {m13_12_23: 1})
    add(X23, m13_12, lambda c: {m12_23_12: -1, m13: -c.f(T12)})
    add(X23, m12_13, lambda c: {m13_12_23: 1, m12: c.om()})
    add(X23, m23_12, lambda c: {m12: c.f(T23, "(12)")})
    add(X23, m12_23, lambda c: {m12_23_12: 1, m13: -c.bare(T23, "(13)")}, True)
    add(X12, m13_12, lambda c: {m13_12_13: 1, m23: c.bare(T13, "(23)")}, True)
    add(X12, m12_13, lambda c: {m13: c.f(T12, "(13)")})
    add(X12, m23_12, lambda c: {m12_23_12: 1})
    add(X12, m12_23, lambda c: {m23: c.f(T12, "(23)")})

    add(X13, m13_12_13, lambda c: {m12_13: c.f(T13, "(12)(13)")})
    add(X13, m12_23_12, lambda c: {M4: 1})
    add(X13, m13_12_23, lambda c: {m12_23: c.f(T13, "(12)(23)")})
    add(X23, m13_12_13, lambda c: {M4: 1, m1: -(c.f(T12) * c.om() + (c.A(T13) - c.A(T12)) * c.f(T23))})
    add(X23, m12_23_12, lambda c: {m12_23: c.f(T12), m13_12: c.A(T12) - c.A(T23)})
    add(X23, m13_12_23, lambda c: {m12_13: c.f(T23, "(23)(12)"), m23_12: -c.om()})
    add(X12, m13_12_13, lambda c: {m13_12: c.f(T13) + c.bare(T12, "(23)"), m12_23: c.bare(T12, "(23)")}, True)
    add(X12, m12_23_12, lambda c: {m23_12: c.f(T12, "(23)(12)")})
    add(X12, m13_12_23, lambda c: {M4: -1, m1: c.bare(T13, "(23)") * c.f(T23) - c.f(T12, "(13)") * c.f(T13)}, True)

    add(X13, M4, lambda c: {m12_23_12: c.f(T13)})
    add(X23, M4, lambda c: {m13_12_13: c.f(T23), m23: c.bare(T13, "(23)") * c.f(T23) + c.om() * c.f(T12)}, True)
    add(X12, M4, lambda c: {m13_12_23: -c.f(T12),
                            m12: c.bare(T13, "(23)") * c.f(T23, "(12)") - c.f(T12, "(23)") * c.f(T13, "(12)")}, True)
    return out


FORMULAS = _F()


def _clean(d):
    return {k: Fraction(v) for k, v in d.items() if v}


@dataclass
class CrosscheckReport:
    params: tuple
    checked: int = 0
    verbatim_failures: list = field(default_factory=list)
    flagged: list = field(default_factory=list)  # (label, g, status)
    weight_failures: list = field(default_factory=list)
    consistent: bool = True

    @property
    def passed(self):
        return self.consistent and not self.verbatim_failures and not self.weight_failures

    def summary(self):
        by = {}
        for label, g, status in self.flagged:
            by.setdefault(label, {}).setdefault(status, []).append(g)
        return by

    def to_json(self):
        return {
            "params": list(self.params),
            "checked": self.checked,
            "passed": self.passed,
            "consistent": self.consistent,
            "verbatim_failures": self.verbatim_failures,
            "weight_failures": self.weight_failures,
            "flagged": [{"formula": l, "g": g, "status": s} for l, g, s in self.flagged],
        }


def derived_action(table, gen, word, g):
    """x_gen . (word delta_g) in the table, as {word: scalar}."""
    gi = table.gd.index[g]
    out = {}
    for k, c in table.word_nf((gen,) + word, gi).items():
        w, h = table.basis[k]
        assert h == gi
        out[w] = c
    return out


def regular_action_crosscheck(table, a=None):
    a = a or table.a
    rep = CrosscheckReport(tuple(str(v) for v in a.values()))
    gd = table.gd
    for g in gd.elems:
        gi = gd.index[g]
        # the k^G part: delta_h . m_w = [h = w g] m_w
        for w in BASIS_WORDS:
            wt = gd.mul[gd.prod(w)][gi]
            for h in range(6):
                got = table.multiply(table.delta(h).coeffs, {table.index[(w, gi)]: 1})
                exp = {table.index[(w, gi)]: 1} if h == wt else {}
                if got != exp:
                    rep.weight_failures.append([word_str(w), str(g), str(gd.elems[h])])
        for fm in FORMULAS:
            rep.checked += 1
            got = derived_action(table, fm.gen, fm.word, g)
            lit = _clean(fm.rhs(_Ctx(a, g, "literal")))
            if not fm.bare:
                if got != lit:
                    rep.verbatim_failures.append({
                        "formula": fm.label, "g": str(g),
                        "expected": {word_str(k): str(v) for k, v in lit.items()},
                        "got": {word_str(k): str(v) for k, v in got.items()}})
                continue
            sh = _clean(fm.rhs(_Ctx(a, g, "shifted")))
            ok_l, ok_s = got == lit, got == sh
            status = ("both" if ok_l and ok_s else "literal" if ok_l
                      else "shifted" if ok_s else "neither")
            rep.flagged.append((fm.label, str(g), status))
    return rep


def flagged_formula_labels():
    return [fm.label for fm in FORMULAS if fm.bare]

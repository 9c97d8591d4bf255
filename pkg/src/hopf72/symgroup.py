"""Symmetric groups, transpositions, parameter vectors and linkage.

Permutations compose right to left: ``g * h`` applies ``h`` first.  With
this convention ``(13)(23) == (132)`` and ``(13)(12) == (123)``.
"""
from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class Perm:
    images: tuple  # images[i - 1] is the image of i

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a bijection of 1..n: {self.images}")

    @property
    def n(self):
        return len(self.images)

    @classmethod
    def identity(cls, n=3):
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles, n=3):
        """Build from a list of cycles; the rightmost cycle acts first."""
        g = cls.identity(n)
        for cyc in reversed(list(cycles)):
            img = list(range(1, n + 1))
            for k, x in enumerate(cyc):
                img[x - 1] = cyc[(k + 1) % len(cyc)]
            g = cls(tuple(img)) * g
        return g

    @classmethod
    def parse(cls, text, n=3):
        """Parse cycle notation such as ``(12)``, ``(13)(23)``, ``(123)`` or ``e``."""
        s = text.replace(" ", "")
        if s in ("e", "()", "1", "id"):
            return cls.identity(n)
        if not re.fullmatch(r"(\([1-9](,?[1-9])*\))+", s):
            raise ValueError(f"bad permutation syntax: {text!r}")
        cycles = []
        for body in re.findall(r"\(([^)]*)\)", s):
            pts = [int(c) for c in body.replace(",", "")]
            if len(set(pts)) != len(pts) or max(pts) > n:
                raise ValueError(f"bad cycle {body!r} for n={n}")
            cycles.append(pts)
        return cls.from_cycles(cycles, n)

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return Perm(tuple(self.images[j - 1] for j in other.images))

    def inverse(self):
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Perm(tuple(inv))

    def cycles(self):
        seen, out = set(), []
        for i in range(1, self.n + 1):
            if i in seen or self(i) == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def sign(self):
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def is_identity(self):
        return self.images == tuple(range(1, self.n + 1))

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "e"
        return "".join("(" + "".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Perm({self})"


@dataclass(frozen=True, order=True)
class Transposition:
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("a transposition needs two distinct points")
        if self.i > self.j:
            a, b = self.j, self.i
            object.__setattr__(self, "i", a)
            object.__setattr__(self, "j", b)

    def perm(self, n=3):
        return Perm.from_cycles([(self.i, self.j)], n)

    def conj(self, g):
        """The transposition g^-1 (ij) g."""
        gi = g.inverse()
        return Transposition(gi(self.i), gi(self.j))

    @property
    def label(self):
        return f"{self.i}{self.j}"

    def __str__(self):
        return f"({self.i}{self.j})"

    __repr__ = __str__


def transpositions(n=3):
    return [Transposition(i, j) for i, j in itertools.combinations(range(1, n + 1), 2)]


def elements(n=3):
    """All of S_n in a fixed order; for n = 3 the order is e,(12),(13),(23),(123),(132)."""
    if n == 3:
        return [Perm.parse(s) for s in ("e", "(12)", "(13)", "(23)", "(123)", "(132)")]
    return sorted((Perm(p) for p in itertools.permutations(range(1, n + 1))),
                  key=lambda g: (sum(len(c) - 1 for c in g.cycles()), g.images))


T12, T13, T23 = Transposition(1, 2), Transposition(1, 3), Transposition(2, 3)
E = Perm.identity(3)


def parse_scalar(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational {text!r}") from exc


class ParamVector:
    """A point of the parameter space: rationals a_t, one per transposition, summing to zero.

    For n = 3 the positional order is (a12, a13, a23).
    """

    def __init__(self, values, n=3):
        ts = transpositions(n)
        if isinstance(values, dict):
            vals = {Transposition(t.i, t.j) if isinstance(t, Transposition) else Transposition(*t): Fraction(v)
                    for t, v in values.items()}
        else:
            values = list(values)
            if len(values) != len(ts):
                raise ValueError(f"expected {len(ts)} entries, got {len(values)}")
            vals = {t: Fraction(v) for t, v in zip(ts, values)}
        if set(vals) != set(ts):
            raise ValueError("entries must be indexed by all transpositions")
        total = sum(vals.values())
        if total != 0:
            raise ValueError(f"entries must sum to zero (sum is {total})")
        self.n = n
        self._a = vals

    @classmethod
    def parse(cls, text, n=3):
        return cls([parse_scalar(p) for p in text.split(",")], n)

    def __getitem__(self, t):
        return self._a[t]

    def values(self):
        return tuple(self._a[t] for t in transpositions(self.n))

    def __eq__(self, other):
        return isinstance(other, ParamVector) and self.n == other.n and self._a == other._a

    def __hash__(self):
        return hash((self.n, self.values()))

    def __repr__(self):
        return "ParamVector(" + ",".join(str(v) for v in self.values()) + ")"

    def strings(self):
        return [str(v) for v in self.values()]


@dataclass(frozen=True)
class Regime:
    tag: str  # "zero", "sub-generic" or "generic"
    normalizer: Perm  # theta with (theta . a) in canonical form


def f_eval(a, t, g):
    """f_t(g) = a_t - a_{g^-1 t g}."""
    return a[t] - a[t.conj(g)]


def omega_eval(a, g):
    """Coefficient of delta_g in Omega = f13((12) .) - f13."""
    if a.n != 3:
        raise ValueError("Omega is only defined for n = 3")
    return f_eval(a, T13, T12.perm() * g) - f_eval(a, T13, g)


def isotropy_group(a):
    ts = transpositions(a.n)
    return [h for h in elements(a.n) if all(f_eval(a, t, h) == 0 for t in ts)]


def linked(a, g, h):
    """Return (True, chain) when g ~ h, else (False, None).

    The chain [t1, ..., tm] satisfies g = tm ... t1 h and every partial product
    k_s = ts ... t1 h has f_ts(k_s) != 0.
    """
    if g == h:
        return True, []
    ts = transpositions(a.n)
    prev = {h: None}
    queue = deque([h])
    while queue:
        k = queue.popleft()
        for t in ts:
            nxt = t.perm(a.n) * k
            if nxt in prev or f_eval(a, t, nxt) == 0:
                continue
            prev[nxt] = (k, t)
            if nxt == g:
                chain = []
                cur = g
                while prev[cur] is not None:
                    cur, step = prev[cur]
                    chain.append(step)
                return True, chain[::-1]
            queue.append(nxt)
    return False, None


def check_chain(a, g, h, chain):
    k = h
    for t in chain:
        k = t.perm(a.n) * k
        if f_eval(a, t, k) == 0:
            return False
    return k == g


def linkage_classes(a):
    classes, seen = [], set()
    for g in elements(a.n):
        if g in seen:
            continue
        cls = [h for h in elements(a.n) if linked(a, g, h)[0]]
        seen.update(cls)
        classes.append(cls)
    return classes


def gamma_act(a, mu, theta):
    """The rescale-and-relabel action: (mu, theta) . a has entry mu * a_{theta^-1 t theta} at t.

    x_t -> x_{theta t theta^-1}, delta_g -> delta_{theta g theta^-1} is then an
    isomorphism from the algebra at a onto the algebra at theta . a.
    """
    mu = Fraction(mu)
    if mu == 0:
        raise ValueError("mu must be non-zero")
    return ParamVector({t: mu * a[t.conj(theta)] for t in transpositions(a.n)}, a.n)


def relabel(a, theta):
    return gamma_act(a, 1, theta)


def classify_regime(a):
    if a.n != 3:
        raise ValueError("regime classification is defined for n = 3")
    v12, v13, v23 = a[T12], a[T13], a[T23]
    if v12 == v13 == v23:
        return Regime("zero", E)
    if len({v12, v13, v23}) == 3:
        return Regime("generic", E)
    for theta in elements(3):
        b = relabel(a, theta)
        if b[T12] != b[T13] and b[T13] == b[T23]:
            return Regime("sub-generic", theta)
    raise AssertionError("unreachable")


def normalize(a):
    """Return (b, theta) with b = theta . a canonical (a12 != a13 = a23 when sub-generic)."""
    reg = classify_regime(a)
    return relabel(a, reg.normalizer), reg.normalizer


def conj_elem(theta, g):
    """The image theta g theta^-1 of g under the relabelling induced by theta."""
    return theta * g * theta.inverse()

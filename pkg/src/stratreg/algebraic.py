"""Exact arithmetic in a real radical field Q(t^(1/n)).

Series coefficients produced along a monomial arc all live in a single field
Q(theta) with theta = t^(1/n) > 0 and x^n - t irreducible, because the only
irrationality ever introduced is the a-th root of the leading coefficient of
the surface polynomial restricted to the arc.  Elements are coordinate
vectors over the power basis (1, theta, ..., theta^(n-1)); equality with
zero is therefore exact, while signs and magnitudes are certified through
interval enclosures of theta refined on a precision ladder.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .intervals import RationalInterval, exact_nth_root

Rat = Union[int, Fraction]

PRECISION_LADDER = (64, 128, 256, 512, 1024)
PRECISION_CAP = PRECISION_LADDER[-1]


class PrecisionExhausted(Exception):
    """Sign of a (tiny but nonzero) value could not be certified at cap."""


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@lru_cache(maxsize=4096)
def reduce_radical(m: Fraction, k: int) -> tuple[Fraction, Fraction, int]:
    """Write m**(1/k) = w * t**(1/n) with w, t rational, x^n - t irreducible.

    Requires m > 0.  Returns (w, t, n) with n dividing k and n = 1 whenever
    the root is rational.
    """
    if m <= 0:
        raise ValueError("radicand must be positive")
    exps: dict[int, int] = {}
    for p, e in _factorize(m.numerator).items():
        exps[p] = exps.get(p, 0) + e
    for p, e in _factorize(m.denominator).items():
        exps[p] = exps.get(p, 0) - e
    import math

    g = k
    for e in exps.values():
        g = math.gcd(g, e % k)
    n = k // g
    w = Fraction(1)
    t = Fraction(1)
    for p, e in exps.items():
        w *= Fraction(p) ** (e // k)
        rem = (e % k) // g  # exponent of p in t, coprime data guaranteed
        t *= Fraction(p) ** rem
    if n == 1:
        w *= t
        t = Fraction(1)
    return w, t, n


_FIELD_CACHE: dict[tuple[Fraction, int], "RootField"] = {}


@dataclass(frozen=True, eq=False)
class RootField:
    """The field Q(theta), theta = t**(1/n) real positive.

    Instances are interned by (t, n), so identity comparison is the fast
    path everywhere in the kernel.
    """

    t: Fraction
    n: int

    def __new__(cls, t: Fraction, n: int):
        key = (t, n)
        cached = _FIELD_CACHE.get(key)
        if cached is not None:
            return cached
        inst = super().__new__(cls)
        _FIELD_CACHE[key] = inst
        return inst

    def __eq__(self, other) -> bool:
        return self is other or (isinstance(other, RootField)
                                 and self.t == other.t and self.n == other.n)

    def __hash__(self) -> int:
        return hash((self.t, self.n))

    @staticmethod
    def rationals() -> "RootField":
        return RootField(Fraction(1), 1)

    @property
    def is_trivial(self) -> bool:
        return self.n == 1

    def zero(self) -> "FieldElement":
        return FieldElement(self, (Fraction(0),) * self.n)

    def one(self) -> "FieldElement":
        return self.from_rational(1)

    def from_rational(self, v: Rat) -> "FieldElement":
        vec = [Fraction(0)] * self.n
        vec[0] = Fraction(v)
        return FieldElement(self, tuple(vec))

    def theta_power(self, k: int) -> "FieldElement":
        """theta**k reduced into the power basis (k >= 0)."""
        q, r = divmod(k, self.n)
        vec = [Fraction(0)] * self.n
        vec[r] = self.t ** q
        return FieldElement(self, tuple(vec))

    def theta_enclosure(self, bits: int) -> RationalInterval:
        return RationalInterval.point(self.t).nth_root(self.n, bits)

    def coerce(self, v: "FieldElement | Rat") -> "FieldElement":
        if isinstance(v, FieldElement):
            if v.field is self:
                return v
            if v.field.is_trivial:
                return self.from_rational(v.vec[0])
            if self.is_trivial:
                raise ValueError("cannot coerce irrational element into Q")
            raise ValueError(f"incompatible fields {v.field} and {self}")
        return self.from_rational(v)

    @staticmethod
    def common(f1: "RootField", f2: "RootField") -> "RootField":
        if f1 is f2 or f2.is_trivial:
            return f1
        if f1.is_trivial:
            return f2
        if f1 == f2:
            return f1
        raise ValueError(f"incompatible fields {f1} and {f2}")

    def __repr__(self) -> str:
        return "QQ" if self.n == 1 else f"QQ({self.t}^(1/{self.n}))"


@lru_cache(maxsize=4096)
def nth_root_element(m: Fraction, k: int) -> tuple["RootField", "FieldElement"]:
    """Field and element representing m**(1/k) exactly, m > 0."""
    w, t, n = reduce_radical(Fraction(m), k)
    field = RootField(t, n)
    if n == 1:
        return field, field.from_rational(w)
    vec = [Fraction(0)] * n
    vec[1] = w
    return field, FieldElement(field, tuple(vec))


@dataclass(frozen=True, slots=True)
class FieldElement:
    field: RootField
    vec: tuple[Fraction, ...]

    # --- exact ring operations ----------------------------------------------

    def _pair(self, other: "FieldElement | Rat") -> tuple["FieldElement", "FieldElement"]:
        other = other if isinstance(other, FieldElement) else self.field.from_rational(other)
        if self.field is other.field:
            return self, other
        field = RootField.common(self.field, other.field)
        return field.coerce(self), field.coerce(other)

    def __add__(self, other: "FieldElement | Rat") -> "FieldElement":
        a, b = self._pair(other)
        if len(a.vec) == 1:
            return FieldElement(a.field, (a.vec[0] + b.vec[0],))
        return FieldElement(a.field, tuple(x + y for x, y in zip(a.vec, b.vec)))

    __radd__ = __add__

    def __sub__(self, other: "FieldElement | Rat") -> "FieldElement":
        a, b = self._pair(other)
        if len(a.vec) == 1:
            return FieldElement(a.field, (a.vec[0] - b.vec[0],))
        return FieldElement(a.field, tuple(x - y for x, y in zip(a.vec, b.vec)))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, tuple(-x for x in self.vec))

    def __mul__(self, other: "FieldElement | Rat") -> "FieldElement":
        a, b = self._pair(other)
        n = a.field.n
        if n == 1:
            return FieldElement(a.field, (a.vec[0] * b.vec[0],))
        t = a.field.t
        acc = [Fraction(0)] * n
        for i, x in enumerate(a.vec):
            if not x:
                continue
            for j, y in enumerate(b.vec):
                if not y:
                    continue
                k = i + j
                if k < n:
                    acc[k] += x * y
                else:
                    acc[k - n] += x * y * t
        return FieldElement(a.field, tuple(acc))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "FieldElement":
        if k < 0:
            return self.inverse() ** (-k)
        r = self.field.one()
        base = self
        while k:
            if k & 1:
                r = r * base
            base = base * base
            k >>= 1
        return r

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        n, t = self.field.n, self.field.t
        if n == 1:
            return self.field.from_rational(1 / self.vec[0])
        # extended Euclid of self (as poly in theta) against x^n - t
        mod = [-t] + [Fraction(0)] * (n - 1) + [Fraction(1)]
        a = list(self.vec)
        inv = _poly_modinv(a, mod)
        return FieldElement(self.field, tuple(inv + [Fraction(0)] * (n - len(inv))))

    def __truediv__(self, other: "FieldElement | Rat") -> "FieldElement":
        a, b = self._pair(other)
        return a * b.inverse()

    # --- certification -------------------------------------------------------

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.vec)

    def is_rational(self) -> bool:
        return all(x == 0 for x in self.vec[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.vec[0]

    def enclosure(self, bits: int = 64) -> RationalInterval:
        if self.field.is_trivial:
            return RationalInterval.point(self.vec[0])
        th = self.field.theta_enclosure(bits)
        acc = RationalInterval.point(0)
        power = RationalInterval.point(1)
        for coef in self.vec:
            if coef:
                acc = acc + power.scaled(coef)
            power = power * th
        return acc

    def sign(self) -> int:
        """Certified sign in {-1, 0, +1}; raises PrecisionExhausted at cap."""
        if self.is_zero():
            return 0
        if self.is_rational():
            return 1 if self.vec[0] > 0 else -1
        for bits in PRECISION_LADDER:
            enc = self.enclosure(bits)
            if enc.is_certainly_positive():
                return 1
            if enc.is_certainly_negative():
                return -1
        raise PrecisionExhausted(f"sign of {self} not certified at {PRECISION_CAP} bits")

    def cmp(self, other: "FieldElement | Rat") -> int:
        return (self - other).sign()

    def __repr__(self) -> str:
        if self.field.is_trivial:
            return str(self.vec[0])
        parts = []
        for i, c in enumerate(self.vec):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                parts.append(f"{c}*th^{i}" if i > 1 else f"{c}*th")
        return " + ".join(parts) if parts else "0"


def _poly_modinv(a: Sequence[Fraction], mod: Sequence[Fraction]) -> list[Fraction]:
    """Inverse of polynomial a modulo mod over Q (mod irreducible)."""

    def trim(p):
        p = list(p)
        while p and p[-1] == 0:
            p.pop()
        return p

    def divmod_(num, den):
        num = trim(num)
        den = trim(den)
        q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
        while len(num) >= len(den) and num:
            f = num[-1] / den[-1]
            shift = len(num) - len(den)
            q[shift] = f
            for i, dv in enumerate(den):
                num[i + shift] -= f * dv
            num = trim(num)
        return q, num

    r0, r1 = trim(mod), trim(a)
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while r1:
        q, r = divmod_(r0, r1)
        prod = [Fraction(0)] * (len(q) + len(s1))
        for i, qv in enumerate(q):
            if qv:
                for j, sv in enumerate(s1):
                    prod[i + j] += qv * sv
        s_new = [x - y for x, y in
                 zip(s0 + [Fraction(0)] * max(0, len(prod) - len(s0)),
                     prod + [Fraction(0)] * max(0, len(s0) - len(prod)))]
        r0, r1 = r1, r
        s0, s1 = s1, trim(s_new) or [Fraction(0)]
    # r0 = gcd (a constant, field case), s0 * a = r0 mod `mod`
    if len(r0) != 1:
        raise ZeroDivisionError("element not invertible (zero divisor)")
    c = r0[0]
    return [x / c for x in s0]

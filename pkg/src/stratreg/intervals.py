"""Rational interval arithmetic with outward-rounded n-th roots.

Endpoints are exact fractions, so +, -, *, / introduce no widening at all.
Widening enters only through n-th roots of non-perfect powers, where the
enclosure is computed to a requested number of bits and rounded outward.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rat = Union[int, Fraction]


def iroot_floor(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0, k >= 1, in exact integer arithmetic."""
    if n < 0:
        raise ValueError("negative radicand")
    if n in (0, 1) or k == 1:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k + 1)  # upper seed
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    return x


def iroot_ceil(n: int, k: int) -> int:
    r = iroot_floor(n, k)
    return r if r ** k == n else r + 1


def _frac_root_floor(f: Fraction, k: int, bits: int) -> Fraction:
    # floor-enclosure of f**(1/k) on a 2**-bits grid
    scaled = (f.numerator << (k * bits)) // f.denominator
    return Fraction(iroot_floor(scaled, k), 1 << bits)


def _frac_root_ceil(f: Fraction, k: int, bits: int) -> Fraction:
    num = f.numerator << (k * bits)
    scaled = -((-num) // f.denominator)  # ceil division
    return Fraction(iroot_ceil(scaled, k), 1 << bits)


def exact_nth_root(f: Fraction, k: int) -> Fraction | None:
    """Return the exact rational k-th root of f >= 0, or None."""
    if f < 0:
        return None
    rn = iroot_floor(f.numerator, k)
    rd = iroot_floor(f.denominator, k)
    if rn ** k == f.numerator and rd ** k == f.denominator:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval [lo, hi] with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @staticmethod
    def point(v: Rat) -> "RationalInterval":
        v = Fraction(v)
        return RationalInterval(v, v)

    # --- queries -----------------------------------------------------------

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def is_certainly_positive(self) -> bool:
        return self.lo > 0

    def is_certainly_negative(self) -> bool:
        return self.hi < 0

    def is_certified_zero(self) -> bool:
        return self.lo == 0 == self.hi

    def contains(self, v: Rat | float) -> bool:
        return self.lo <= Fraction(v) <= self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self) -> float:
        return float(self.mid)

    # --- arithmetic --------------------------------------------------------

    def __add__(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self) -> "RationalInterval":
        return RationalInterval(-self.hi, -self.lo)

    def __mul__(self, other: "RationalInterval") -> "RationalInterval":
        prods = (self.lo * other.lo, self.lo * other.hi,
                 self.hi * other.lo, self.hi * other.hi)
        return RationalInterval(min(prods), max(prods))

    def __truediv__(self, other: "RationalInterval") -> "RationalInterval":
        if other.contains_zero():
            raise ZeroDivisionError("interval divisor contains zero")
        inv = RationalInterval(1 / other.hi, 1 / other.lo)
        return self * inv

    def scaled(self, c: Rat) -> "RationalInterval":
        c = Fraction(c)
        if c >= 0:
            return RationalInterval(self.lo * c, self.hi * c)
        return RationalInterval(self.hi * c, self.lo * c)

    def abs(self) -> "RationalInterval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return RationalInterval(Fraction(0), max(-self.lo, self.hi))

    def pow_int(self, k: int) -> "RationalInterval":
        if k == 0:
            return RationalInterval.point(1)
        if k < 0:
            return RationalInterval.point(1) / self.pow_int(-k)
        r = RationalInterval.point(1)
        base = self
        while k:
            if k & 1:
                r = r * base
            base = base * base
            k >>= 1
        return r

    def nth_root(self, k: int, bits: int = 64) -> "RationalInterval":
        """Outward enclosure of the k-th root; requires lo >= 0."""
        if self.lo < 0:
            raise ValueError("nth_root of interval reaching below zero")
        if k == 1:
            return self
        exact_lo = exact_nth_root(self.lo, k)
        exact_hi = exact_nth_root(self.hi, k) if self.hi != self.lo else exact_lo
        lo = exact_lo if exact_lo is not None else _frac_root_floor(self.lo, k, bits)
        hi = exact_hi if exact_hi is not None else _frac_root_ceil(self.hi, k, bits)
        return RationalInterval(lo, hi)

    def pow_frac(self, e: Fraction, bits: int = 64) -> "RationalInterval":
        """self ** e for e rational, self >= 0."""
        e = Fraction(e)
        return self.pow_int(e.numerator).nth_root(e.denominator, bits)

    def hull(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(min(self.lo, other.lo), max(self.hi, other.hi))

    def __repr__(self) -> str:
        if self.is_point():
            return f"[{self.lo}]"
        return f"[{self.lo}, {self.hi}]"

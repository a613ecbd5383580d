"""Truncated Puiseux series with exact rational exponents.

A series is a finite sum of terms coef * u**exp with strictly increasing
rational exponents.  Coefficients are exact elements of a radical field
(see `algebraic`), so cancellation is detected exactly; interval enclosures
of coefficients are produced on demand at any precision.  `trunc` records
the exponent from which terms are unknown: `trunc is None` means the series
is exact (no discarded tail), otherwise the object represents the germ only
up to O(u**trunc).

Division and fractional powers are inherently truncating; by default they
retain eight lattice units beyond the leading exponent, where the lattice
step is the reciprocal of the common exponent denominator.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Callable, Optional, Sequence, Union

from .algebraic import (FieldElement, RootField, nth_root_element,
                        PRECISION_LADDER)
from .intervals import RationalInterval

Rat = Union[int, Fraction]

DEFAULT_WINDOW_UNITS = 8


class KernelError(Exception):
    pass


class IndeterminateLeading(KernelError):
    """Operation required a certified leading coefficient and none exists."""


class UnsupportedLeading(KernelError):
    """Fractional power needs a rational, certified-positive leading coefficient."""


def _fr(v: Rat) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def _min_trunc(a: Optional[Fraction], b: Optional[Fraction]) -> Optional[Fraction]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


@dataclass(frozen=True)
class PuiseuxSeries:
    field: RootField
    terms: tuple[tuple[Fraction, FieldElement], ...]  # ascending exponents
    trunc: Optional[Fraction]  # None = exact

    # --- constructors -------------------------------------------------------

    @staticmethod
    def from_terms(field: RootField,
                   terms: Sequence[tuple[Rat, FieldElement | Rat]],
                   trunc: Optional[Rat] = None) -> "PuiseuxSeries":
        tr = None if trunc is None else _fr(trunc)
        # merge on integer keys over the common exponent lattice: Fraction
        # hashing and comparison are far too slow for the hot paths
        den = 1
        exps = [_fr(e) for e, _ in terms]
        for e in exps:
            den = lcm(den, e.denominator)
        tri = None
        if tr is not None:
            den = lcm(den, tr.denominator)
            tri = tr.numerator * (den // tr.denominator)
        merged: dict[int, FieldElement] = {}
        for e, (_, c) in zip(exps, terms):
            k = e.numerator * (den // e.denominator)
            if tri is not None and k >= tri:
                continue
            c = field.coerce(c)
            prev = merged.get(k)
            merged[k] = c if prev is None else prev + c
        out = []
        for k in sorted(merged):
            c = merged[k]
            if not c.is_zero():
                out.append((Fraction(k, den), c))
        return PuiseuxSeries(field, tuple(out), tr)

    @staticmethod
    def monomial(coef: Rat | FieldElement, exp: Rat = 0,
                 field: Optional[RootField] = None) -> "PuiseuxSeries":
        if isinstance(coef, FieldElement):
            field = field or coef.field
        else:
            field = field or RootField.rationals()
        return PuiseuxSeries.from_terms(field, [(exp, coef)], None)

    @staticmethod
    def zero(field: Optional[RootField] = None) -> "PuiseuxSeries":
        return PuiseuxSeries(field or RootField.rationals(), (), None)

    @staticmethod
    def one(field: Optional[RootField] = None) -> "PuiseuxSeries":
        return PuiseuxSeries.monomial(1, 0, field)

    # --- basic queries -------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.trunc is None

    def is_certified_zero(self) -> bool:
        return not self.terms and self.is_exact

    def is_empty(self) -> bool:
        return not self.terms

    def leading(self) -> tuple[Fraction, FieldElement]:
        if not self.terms:
            raise IndeterminateLeading("series has no visible terms")
        return self.terms[0]

    def lattice_step(self) -> Fraction:
        den = 1
        for e, _ in self.terms:
            den = lcm(den, e.denominator)
        if self.trunc is not None:
            den = lcm(den, self.trunc.denominator)
        return Fraction(1, den)

    def coefficient(self, exp: Rat) -> FieldElement:
        exp = _fr(exp)
        for e, c in self.terms:
            if e == exp:
                return c
        return self.field.zero()

    # --- arithmetic ----------------------------------------------------------

    def _in_field(self, field: RootField) -> "PuiseuxSeries":
        if self.field is field:
            return self
        return PuiseuxSeries(field, tuple((e, field.coerce(c)) for e, c in self.terms),
                             self.trunc)

    def __add__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        field = RootField.common(self.field, other.field)
        tr = _min_trunc(self.trunc, other.trunc)
        return PuiseuxSeries.from_terms(
            field, list(self._in_field(field).terms) + list(other._in_field(field).terms),
            tr)

    def __neg__(self) -> "PuiseuxSeries":
        return PuiseuxSeries(self.field,
                             tuple((e, -c) for e, c in self.terms), self.trunc)

    def __sub__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        return self + (-other)

    def __mul__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        field = RootField.common(self.field, other.field)
        tr = None
        if self.trunc is not None:
            lo = other.terms[0][0] if other.terms else other.trunc
            if lo is not None:
                tr = _min_trunc(tr, self.trunc + lo)
        if other.trunc is not None:
            lo = self.terms[0][0] if self.terms else self.trunc
            if lo is not None:
                tr = _min_trunc(tr, other.trunc + lo)
        s1 = self._in_field(field)
        s2 = other._in_field(field)
        den = 1
        for e, _ in s1.terms:
            den = lcm(den, e.denominator)
        for e, _ in s2.terms:
            den = lcm(den, e.denominator)
        tri = None
        if tr is not None:
            den = lcm(den, tr.denominator)
            tri = tr.numerator * (den // tr.denominator)
        k1 = [(e.numerator * (den // e.denominator), c) for e, c in s1.terms]
        k2 = [(e.numerator * (den // e.denominator), c) for e, c in s2.terms]
        merged: dict[int, FieldElement] = {}
        for e1, c1 in k1:
            for e2, c2 in k2:
                k = e1 + e2
                if tri is not None and k >= tri:
                    continue
                prod = c1 * c2
                prev = merged.get(k)
                merged[k] = prod if prev is None else prev + prod
        out = []
        for k in sorted(merged):
            c = merged[k]
            if not c.is_zero():
                out.append((Fraction(k, den), c))
        return PuiseuxSeries(field, tuple(out), tr)

    def squared(self) -> "PuiseuxSeries":
        """self * self using the symmetric-product shortcut."""
        tr = None
        if self.trunc is not None and self.terms:
            tr = self.trunc + self.terms[0][0]
        den = 1
        for e, _ in self.terms:
            den = lcm(den, e.denominator)
        tri = None
        if tr is not None:
            den = lcm(den, tr.denominator)
            tri = tr.numerator * (den // tr.denominator)
        ks = [(e.numerator * (den // e.denominator), c) for e, c in self.terms]
        merged: dict[int, FieldElement] = {}
        n = len(ks)
        for i in range(n):
            e1, c1 = ks[i]
            for j in range(i, n):
                k = e1 + ks[j][0]
                if tri is not None and k >= tri:
                    continue
                prod = c1 * ks[j][1]
                if j > i:
                    prod = prod + prod
                prev = merged.get(k)
                merged[k] = prod if prev is None else prev + prod
        out = []
        for k in sorted(merged):
            c = merged[k]
            if not c.is_zero():
                out.append((Fraction(k, den), c))
        return PuiseuxSeries(self.field, tuple(out), tr)

    def scaled(self, c: FieldElement | Rat) -> "PuiseuxSeries":
        if not isinstance(c, FieldElement):
            c = self.field.from_rational(c)
        field = RootField.common(self.field, c.field)
        c = field.coerce(c)
        return PuiseuxSeries.from_terms(
            field, [(e, field.coerce(cc) * c) for e, cc in self.terms], self.trunc)

    def shifted(self, de: Rat) -> "PuiseuxSeries":
        de = _fr(de)
        return PuiseuxSeries(self.field,
                             tuple((e + de, c) for e, c in self.terms),
                             None if self.trunc is None else self.trunc + de)

    def pow_int(self, k: int) -> "PuiseuxSeries":
        if k < 0:
            return div(PuiseuxSeries.one(self.field), self.pow_int(-k))
        r = PuiseuxSeries.one(self.field)
        base = self
        while k:
            if k & 1:
                r = r * base
            base = base * base
            k >>= 1
        return r

    def substituted_power(self, k: int) -> "PuiseuxSeries":
        """u -> u**k reparametrization (k positive integer)."""
        if k <= 0:
            raise ValueError("k must be positive")
        return PuiseuxSeries(self.field,
                             tuple((e * k, c) for e, c in self.terms),
                             None if self.trunc is None else self.trunc * k)

    def truncated(self, trunc: Rat) -> "PuiseuxSeries":
        tr = _fr(trunc)
        tr = tr if self.trunc is None else min(tr, self.trunc)
        return PuiseuxSeries(self.field,
                             tuple((e, c) for e, c in self.terms if e < tr), tr)

    # --- evaluation -----------------------------------------------------------

    def eval_enclosure(self, u: Rat, bits: int = 64) -> RationalInterval:
        """Interval enclosure of the visible partial sum at u > 0.

        For an exact series this encloses the true value of the germ.
        """
        u = _fr(u)
        if u <= 0:
            raise ValueError("evaluation point must be positive")
        acc = RationalInterval.point(0)
        for e, c in self.terms:
            ue = RationalInterval.point(u).pow_frac(e, bits)
            acc = acc + ue * c.enclosure(bits)
        return acc

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*u^{e}" for e, c in self.terms) or "0"
        tail = "" if self.trunc is None else f" + O(u^{self.trunc})"
        return body + tail


# --- module-level operations ----------------------------------------------


def add(s: PuiseuxSeries, t: PuiseuxSeries) -> PuiseuxSeries:
    return s + t


def neg(s: PuiseuxSeries) -> PuiseuxSeries:
    return -s


def mul(s: PuiseuxSeries, t: PuiseuxSeries) -> PuiseuxSeries:
    return s * t


def _normalized_tail(s: PuiseuxSeries, field: RootField) -> PuiseuxSeries:
    """h with s = c0 u^e0 (1 + h); h has positive-order terms only."""
    e0, c0 = s.leading()
    c0 = field.coerce(c0)
    inv0 = c0.inverse()
    return PuiseuxSeries(field,
                         tuple((e - e0, field.coerce(c) * inv0) for e, c in s.terms[1:]),
                         None if s.trunc is None else s.trunc - e0)


def div(s: PuiseuxSeries, t: PuiseuxSeries,
        window_units: int = DEFAULT_WINDOW_UNITS) -> PuiseuxSeries:
    """s / t; t must have a visible (hence exactly nonzero) leading term."""
    if t.is_empty():
        raise IndeterminateLeading("division by a series with no visible terms")
    field = RootField.common(s.field, t.field)
    e0, c0 = t.leading()
    h = _normalized_tail(t, field)
    if h.is_empty() and h.is_exact:
        inv = PuiseuxSeries.one(field)  # exact monomial divisor
    else:
        limit = _min_trunc(h.trunc, t.lattice_step() * window_units)
        acc = PuiseuxSeries.one(field)
        if h.terms:
            dh = h.terms[0][0]
            n_terms = int(limit / dh) + 1
            powh = PuiseuxSeries.one(field)
            sign = 1
            for _ in range(n_terms):
                powh = (powh * h).truncated(limit)
                sign = -sign
                acc = acc + (powh if sign > 0 else -powh)
        inv = acc.truncated(limit)
    out = (s * inv).scaled(field.coerce(c0).inverse())
    return out.shifted(-e0)


def rpow(s: PuiseuxSeries, r: Rat,
         window_units: int = DEFAULT_WINDOW_UNITS) -> PuiseuxSeries:
    """s ** r for rational r.

    Integer exponents are exact.  Fractional exponents expand the binomial
    series and require the leading coefficient to be rational and certified
    positive (absolute values are taken upstream); the result lives in the
    radical field generated by the needed root of that coefficient.
    """
    r = _fr(r)
    if r.denominator == 1:
        return s.pow_int(r.numerator)
    if s.is_empty():
        if s.is_certified_zero():
            raise UnsupportedLeading("fractional power of the zero series")
        raise IndeterminateLeading("fractional power of a series with no visible terms")
    e0, c0 = s.leading()
    if not c0.is_rational():
        raise UnsupportedLeading("fractional rpow needs a rational leading coefficient")
    m = c0.as_rational()
    if m <= 0:
        raise UnsupportedLeading("fractional rpow needs a positive leading coefficient")
    root_field, root = nth_root_element(m, r.denominator)
    field = RootField.common(s.field, root_field)
    lead_pow = (field.coerce(root) ** (r.numerator % r.denominator)
                * field.from_rational(m) ** (r.numerator // r.denominator))
    h = _normalized_tail(s, field)
    if h.is_empty() and h.is_exact:
        acc = PuiseuxSeries.one(field)  # exact monomial base
    else:
        limit = _min_trunc(h.trunc, s.lattice_step() * window_units)
        acc = PuiseuxSeries.one(field)
        if h.terms:
            dh = h.terms[0][0]
            n_terms = int(limit / dh) + 1
            powh = PuiseuxSeries.one(field)
            coef = Fraction(1)
            for j in range(1, n_terms + 1):
                coef = coef * (r - (j - 1)) / j  # running binomial C(r, j)
                powh = (powh * h).truncated(limit)
                acc = acc + powh.scaled(coef)
        acc = acc.truncated(limit)
    return acc.scaled(lead_pow).shifted(e0 * r)


# --- order certification ------------------------------------------------------


class OrderStatus(enum.Enum):
    ZERO = "zero"              # certified identically zero (order +inf)
    EXACT = "exact"            # order and nonzero leading certified
    AT_LEAST = "at-least"      # no visible terms; order >= truncation bound
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class OrderCertificate:
    status: OrderStatus
    order: Optional[Fraction] = None            # EXACT: the order; AT_LEAST: the bound
    leading: Optional[RationalInterval] = None  # EXACT only, excludes zero
    leading_exact: Optional[FieldElement] = None
    candidate: Optional[Fraction] = None        # INDETERMINATE: next certifiable exponent

    @property
    def is_exact(self) -> bool:
        return self.status is OrderStatus.EXACT


def _certified_sign_at(c: FieldElement, bits: int) -> int:
    """Sign from an enclosure at fixed precision; 0 means straddling."""
    if c.is_rational():
        return 1 if c.as_rational() > 0 else -1  # exact zeros never stored
    enc = c.enclosure(bits)
    if enc.is_certainly_positive():
        return 1
    if enc.is_certainly_negative():
        return -1
    return 0


def order_of(s: PuiseuxSeries,
             rebuild: Optional[Callable[[int], PuiseuxSeries]] = None) -> OrderCertificate:
    """Certificate for the smallest exponent with a sign-certified coefficient.

    Straddling coefficient enclosures trigger escalation along the precision
    ladder (rebuilding the series through `rebuild` when provided); a leading
    straddle surviving the cap yields Indeterminate, carrying the next
    certifiable exponent as candidate order.
    """
    cur = s
    for rung, bits in enumerate(PRECISION_LADDER):
        if not cur.terms:
            if cur.is_exact:
                return OrderCertificate(OrderStatus.ZERO)
            return OrderCertificate(OrderStatus.AT_LEAST, cur.trunc)
        straddle = None
        candidate = None
        for e, c in cur.terms:
            sgn = _certified_sign_at(c, bits)
            if sgn != 0:
                if straddle is None:
                    if c.is_rational():
                        enc = RationalInterval.point(c.as_rational())
                    else:
                        enc = c.enclosure(bits)
                    return OrderCertificate(OrderStatus.EXACT, e, enc, c)
                candidate = e
                break
            if straddle is None:
                straddle = e
        if rung + 1 == len(PRECISION_LADDER):
            return OrderCertificate(OrderStatus.INDETERMINATE,
                                    candidate=candidate if candidate is not None
                                    else cur.trunc)
        if rebuild is not None:
            cur = rebuild(PRECISION_LADDER[rung + 1])
    raise AssertionError("unreachable")

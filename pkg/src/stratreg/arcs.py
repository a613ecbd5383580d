"""Monomial arcs on the surface and certified limits of regularity ratios.

An arc x = sigma * u**p, z = lambda * u**q (u -> 0+) pulls every regularity
ratio back to a one-variable Puiseux quantity.  The pullbacks are composed
from exact series plus a small algebra of "factors" (order, exact square of
the leading magnitude), so orders of vanishing are certified: positive order
means the ratio tends to zero, zero order with nonzero leading means a
bounded nonzero limit, negative order means blow-up.

Coefficients along one arc live in a single radical field generated by the
a-th root of the leading coefficient of z**b x**c + x**d, which keeps all
cancellations exact; square roots coming from norms never enter the series
themselves, only the factor algebra (norms are carried as squares).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional, Union

from .algebraic import (FieldElement, PrecisionExhausted, RootField,
                        nth_root_element, PRECISION_LADDER)
from .intervals import RationalInterval, exact_nth_root
from .model import SurfaceParams
from .puiseux import (OrderCertificate, OrderStatus, PuiseuxSeries, div,
                      order_of, rpow)

Rat = Union[int, Fraction]

WINDOW_LADDER = (8, 16, 32, 64)
PAIR_WINDOW_LADDER = (12, 24, 64)  # column differences cancel deeper; skip a rung


class InfeasibleArc(ValueError):
    """The arc does not lie on the real surface (no real y-branch)."""


class InadmissiblePair(ValueError):
    """Pair violates the chain proximity window asymptotically."""


class QuantityId(enum.Enum):
    A = "A"
    BPI = "Bpi"
    W = "W"
    Z = "Z"
    L2 = "L2"
    L3 = "L3"


PAIR_QUANTITIES = (QuantityId.L2, QuantityId.L3)


@dataclass(frozen=True)
class MonomialArc:
    """x = sigma_x * u**p, z = lam * u**q, y solved from the surface equation.

    `complex_cancel` marks the complex-field surrogate arc at the critical
    slope b*q = (d-c)*p where z carries a unimodular complex coefficient
    killing z**b x**c + x**d exactly; magnitudes along it are still real
    monomial series.
    """

    p: int
    q: int
    sigma_x: int
    lam: Fraction
    branch: str = "+"
    complex_cancel: bool = False

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError("arc exponents must be positive")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"arc exponents must be coprime, got ({self.p},{self.q})")
        if self.sigma_x not in (1, -1):
            raise ValueError("sigma_x must be +1 or -1")
        if not self.complex_cancel and self.lam == 0:
            raise ValueError("lambda must be nonzero")
        if self.branch not in ("+", "-"):
            raise ValueError("branch must be '+' or '-'")

    def to_json(self) -> dict:
        out = {"p": self.p, "q": self.q, "sigma_x": self.sigma_x,
               "lambda": str(self.lam), "branch": self.branch, "pair": None}
        if self.complex_cancel:
            out["complex_cancel"] = True
        return out

    def __str__(self) -> str:
        sx = "" if self.sigma_x == 1 else "-"
        lam = "zeta" if self.complex_cancel else str(self.lam)
        return f"x={sx}u^{self.p}, z={lam}*u^{self.q}, y:{self.branch}"


@dataclass(frozen=True)
class ArcPair:
    """Base arc plus the nearby curve x' = x * (1 + delta * u**e), shared z."""

    base: MonomialArc
    delta: Fraction
    e: Fraction

    def __post_init__(self):
        if self.delta == 0:
            raise ValueError("pair perturbation delta must be nonzero")
        if self.e <= 0:
            raise ValueError("pair perturbation exponent must be positive")

    def to_json(self) -> dict:
        out = self.base.to_json()
        out["pair"] = {"delta": str(self.delta), "e": str(self.e)}
        return out

    def __str__(self) -> str:
        return f"{self.base} | x'=x*(1+{self.delta}*u^{self.e})"


def arc_from_json(obj: dict) -> Union[MonomialArc, ArcPair]:
    base = MonomialArc(obj["p"], obj["q"], obj["sigma_x"], Fraction(obj["lambda"]),
                       obj.get("branch", "+"), obj.get("complex_cancel", False))
    if obj.get("pair"):
        return ArcPair(base, Fraction(obj["pair"]["delta"]), Fraction(obj["pair"]["e"]))
    return base


class BehaviorClass(enum.Enum):
    TENDS_TO_ZERO = "tends-to-zero"
    BOUNDED_NONZERO = "bounded-nonzero"
    UNBOUNDED = "unbounded"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class LimitBehavior:
    """Certified asymptotics of a quantity along an arc as u -> 0+."""

    klass: BehaviorClass
    order: Optional[Fraction] = None     # None: +inf (identically zero) or unknown
    leading: Optional[RationalInterval] = None
    order_lower_bound: Optional[Fraction] = None
    identically_zero: bool = False

    def order_str(self) -> str:
        if self.identically_zero:
            return "inf"
        if self.order is not None:
            return str(self.order)
        if self.order_lower_bound is not None:
            return f">={self.order_lower_bound}"
        return "?"


# --- substitution -------------------------------------------------------------


@dataclass(frozen=True)
class ArcAtoms:
    """Series pullbacks of the coordinates and gradient along one curve."""

    field: RootField
    x: PuiseuxSeries
    y: PuiseuxSeries
    z_abs: PuiseuxSeries      # |z| as a series (complex mode carries magnitudes)
    rhs: PuiseuxSeries
    fx: PuiseuxSeries
    fy: PuiseuxSeries
    fz: PuiseuxSeries
    root_abs_rhs: Optional[FieldElement]  # |leading coef of rhs| ** (1/a), if rhs != 0
    bpi_num: PuiseuxSeries    # (a-c) z^b x^c + (a-d) x^d on the surface


def _mono(coef: Rat, exp: Rat) -> PuiseuxSeries:
    return PuiseuxSeries.monomial(Fraction(coef), Fraction(exp))


def _rhs_series(params: SurfaceParams, p: int, q: int, sigma: int,
                lam: Fraction) -> PuiseuxSeries:
    a, b, c, d = params.as_tuple()
    t1 = (Fraction(lam) ** b * sigma ** c, Fraction(b * q + c * p))
    t2 = (Fraction(sigma ** d), Fraction(d * p))
    return PuiseuxSeries.from_terms(RootField.rationals(),
                                    [(t1[1], t1[0]), (t2[1], t2[0])])


def _y_series(params: SurfaceParams, rhs: PuiseuxSeries, branch: str,
              window_units: int) -> tuple[PuiseuxSeries, RootField, Optional[FieldElement]]:
    a = params.a
    if rhs.is_certified_zero():
        field = RootField.rationals()
        return PuiseuxSeries.zero(field), field, None
    if a == 1:
        return rhs, rhs.field, rhs.leading()[1]
    _, m_elem = rhs.leading()
    m = m_elem.as_rational()
    if m < 0:
        if a % 2 == 0:
            raise InfeasibleArc(f"negative leading coefficient {m} with even a={a}")
        y = -rpow(-rhs, Fraction(1, a), window_units)
    else:
        y = rpow(rhs, Fraction(1, a), window_units)
        if a % 2 == 0 and branch == "-":
            y = -y
    field = y.field
    root = field.coerce(nth_root_element(abs(m), a)[1])
    return y, field, root


def _curve_atoms(params: SurfaceParams, p: int, q: int, sigma: int, lam: Fraction,
                 branch: str, complex_cancel: bool, window_units: int,
                 x_series: Optional[PuiseuxSeries] = None) -> ArcAtoms:
    """Atoms along x(u) (default sigma*u^p, or a perturbed series), z = lam*u^q."""
    a, b, c, d = params.as_tuple()
    x = x_series if x_series is not None else _mono(sigma, p)

    if complex_cancel:
        if b * q + c * p != d * p:
            raise ValueError("complex-cancel arcs require b*q = (d-c)*p")
        if x_series is not None:
            raise ValueError("complex-cancel arcs are single curves only")
        field = RootField.rationals()
        zero = PuiseuxSeries.zero(field)
        # z^b = -sigma^(d-c) u^(bq) kills the surface polynomial exactly; the
        # surviving coefficients below are exact magnitudes along that curve.
        fx = _mono(-(d - c) * sigma ** (d - 1), (c - 1) * p + b * q)
        fy = zero if a > 1 else PuiseuxSeries.one(field)
        fz = _mono(-b * sigma ** c, (b - 1) * q + c * p)
        bpi_num = _mono((c - d) * sigma ** d, d * p)
        return ArcAtoms(field, x, zero, _mono(1, q), zero, fx, fy, fz, None, bpi_num)

    if x_series is not None:
        rhs = _mono(Fraction(lam) ** b, b * q) * x.pow_int(c) + x.pow_int(d)
    else:
        rhs = _rhs_series(params, p, q, sigma, lam)

    y, field, root = _y_series(params, rhs, branch, window_units)
    x = PuiseuxSeries.from_terms(field, list(x.terms), x.trunc)
    rhs_f = PuiseuxSeries.from_terms(field, list(rhs.terms), rhs.trunc)

    xcm1 = x.pow_int(c - 1)
    fx = -(xcm1.scaled(c) * _mono(Fraction(lam) ** b, b * q) + x.pow_int(d - 1).scaled(d))
    fy = y.pow_int(a - 1).scaled(a)
    fz = -(x.pow_int(c).scaled(b * Fraction(lam) ** (b - 1)).shifted((b - 1) * q))
    bpi_num = (x.pow_int(c).scaled((a - c) * Fraction(lam) ** b).shifted(b * q)
               + x.pow_int(d).scaled(a - d))
    z_abs = _mono(abs(Fraction(lam)), q)
    return ArcAtoms(field, x, y, z_abs, rhs_f, fx, fy, fz, root, bpi_num)


_cached_atoms = lru_cache(maxsize=8192)(_curve_atoms)


def substitute(params: SurfaceParams, arc: MonomialArc,
               window_units: int = 8) -> tuple[PuiseuxSeries, PuiseuxSeries, PuiseuxSeries]:
    """(x(u), y(u), z(u)) as series; raises InfeasibleArc when no branch exists."""
    at = _curve_atoms(params, arc.p, arc.q, arc.sigma_x, arc.lam, arc.branch,
                      arc.complex_cancel, window_units)
    z = _mono(arc.lam if not arc.complex_cancel else 1, arc.q)
    return at.x, at.y, z


def surface_residual(params: SurfaceParams, arc: MonomialArc,
                     window_units: int = 8) -> PuiseuxSeries:
    """y(u)^a - z(u)^b x(u)^c - x(u)^d; certified zero up to truncation."""
    at = _curve_atoms(params, arc.p, arc.q, arc.sigma_x, arc.lam, arc.branch,
                      arc.complex_cancel, window_units)
    return at.y.pow_int(params.a) - at.rhs


# --- factor algebra -------------------------------------------------------------


class _WindowTooSmall(Exception):
    def __init__(self, bound: Optional[Fraction]):
        self.bound = bound


@dataclass(frozen=True)
class _Factor:
    order: Fraction
    lead_sq: FieldElement  # exact, certified positive
    zero: bool = False


def _factor_abs(s: PuiseuxSeries) -> _Factor:
    cert = order_of(s)
    if cert.status is OrderStatus.ZERO:
        return _Factor(Fraction(0), s.field.one(), zero=True)
    if cert.status is OrderStatus.AT_LEAST:
        raise _WindowTooSmall(cert.order)
    if cert.status is OrderStatus.INDETERMINATE:
        raise PrecisionExhausted("straddling leading coefficient")
    lead = cert.leading_exact
    return _Factor(cert.order, lead * lead)


def _factor_sqrt(s: PuiseuxSeries) -> _Factor:
    """Factor for sqrt(s); s must be a sum of squares (nonnegative)."""
    cert = order_of(s)
    if cert.status is OrderStatus.ZERO:
        return _Factor(Fraction(0), s.field.one(), zero=True)
    if cert.status is OrderStatus.AT_LEAST:
        raise _WindowTooSmall(cert.order)
    if cert.status is OrderStatus.INDETERMINATE:
        raise PrecisionExhausted("straddling leading coefficient")
    if not cert.leading.is_certainly_positive():
        raise ArithmeticError(f"sum of squares with non-positive leading {cert.leading}")
    # the square of sqrt(s)'s leading magnitude is s's own leading
    return _Factor(cert.order / 2, cert.leading_exact)


def _factor_pow_frac(rhs: PuiseuxSeries, num: int, den: int,
                     root_abs: Optional[FieldElement]) -> _Factor:
    """Factor for |rhs| ** (num/den); root_abs = |lead(rhs)| ** (1/den)."""
    cert = order_of(rhs)
    if cert.status is OrderStatus.ZERO:
        return _Factor(Fraction(0), rhs.field.one(), zero=True)
    assert cert.status is OrderStatus.EXACT and root_abs is not None
    lead_sq = root_abs ** (2 * num)
    return _Factor(cert.order * Fraction(num, den), lead_sq)


def _factor_sup(f1: _Factor, f2: _Factor) -> _Factor:
    if f1.zero:
        return f2
    if f2.zero:
        return f1
    if f1.order != f2.order:
        return f1 if f1.order < f2.order else f2
    # equal orders: pointwise max has the larger leading magnitude
    try:
        c = f1.lead_sq.cmp(f2.lead_sq)
    except PrecisionExhausted:
        # leadings agree beyond the precision cap; class and order are the
        # same either way, only the reported limit constant differs below
        # certification precision
        return f1
    return f1 if c >= 0 else f2


def _assemble(nums: list[_Factor], dens: list[_Factor]) -> LimitBehavior:
    for f in dens:
        if f.zero:
            raise ZeroDivisionError("denominator factor certified zero")
    if any(f.zero for f in nums):
        return LimitBehavior(BehaviorClass.TENDS_TO_ZERO, order=None,
                             identically_zero=True)
    order = sum((f.order for f in nums), Fraction(0)) \
        - sum((f.order for f in dens), Fraction(0))
    lead_sq = None
    for f in nums:
        lead_sq = f.lead_sq if lead_sq is None else lead_sq * f.lead_sq
    for f in dens:
        lead_sq = lead_sq / f.lead_sq
    leading = None
    for bits in PRECISION_LADDER:
        enc = lead_sq.enclosure(bits)
        if enc.is_certainly_positive():
            leading = enc.nth_root(2, bits)
            break
    if leading is None:
        return LimitBehavior(BehaviorClass.INDETERMINATE)
    if order > 0:
        klass = BehaviorClass.TENDS_TO_ZERO
    elif order == 0:
        klass = BehaviorClass.BOUNDED_NONZERO
    else:
        klass = BehaviorClass.UNBOUNDED
    return LimitBehavior(klass, order=order, leading=leading)


# --- quantity pipelines ----------------------------------------------------------


def _norm_sq(*components: PuiseuxSeries) -> PuiseuxSeries:
    acc = None
    for s in components:
        sq = s.squared()
        acc = sq if acc is None else acc + sq
    return acc


def _quantity_single(params: SurfaceParams, qid: QuantityId, at: ArcAtoms,
                     window_units: int, allow_lower_bound: bool) -> LimitBehavior:
    a = params.a
    if qid is QuantityId.A:
        num = _factor_abs(at.fz)
        den = _factor_sqrt(_norm_sq(at.fx, at.fy))
        return _assemble([num], [den])
    if qid is QuantityId.BPI:
        num = _factor_abs(at.bpi_num)  # exact two-term series, never truncated away
        dens = [_factor_sqrt(_norm_sq(at.x, at.y)),
                _factor_sqrt(_norm_sq(at.fx, at.fy, at.fz))]
        return _assemble([num], dens)
    if qid is QuantityId.W:
        num = _factor_abs(at.z_abs.pow_int(params.b - 1) * at.x.pow_int(params.c))
        t1 = -at.fx  # c x^(c-1) z^b + d x^(d-1)
        s1 = _factor_sup(_factor_abs(t1),
                         _factor_pow_frac(at.rhs, a - 1, a, at.root_abs_rhs))
        s2 = _factor_sup(_factor_abs(at.x),
                         _factor_pow_frac(at.rhs, 1, a, at.root_abs_rhs))
        return _assemble([num], [s1, s2])
    if qid is QuantityId.Z:
        num = _factor_abs(at.fz)
        dens = [_factor_sqrt(_norm_sq(at.fx, at.fy, at.fz)),
                _factor_sqrt(_norm_sq(at.x, at.y))]
        return _assemble([num], dens)
    raise ValueError(f"{qid} is a pair quantity; supply an ArcPair")


def _cap_series(s: PuiseuxSeries, units: int) -> PuiseuxSeries:
    if s.is_empty():
        return s
    return s.truncated(s.terms[0][0] + s.lattice_step() * units)


def _capped_atoms(at: ArcAtoms, units: int) -> ArcAtoms:
    return ArcAtoms(at.field, _cap_series(at.x, units), _cap_series(at.y, units),
                    at.z_abs, at.rhs, _cap_series(at.fx, units),
                    _cap_series(at.fy, units), _cap_series(at.fz, units),
                    at.root_abs_rhs, at.bpi_num)


def _projection_products(at: ArcAtoms, window_units: int):
    """Upper triangle of f_i f_j / ||grad f||^2 along a curve (series)."""
    g = _norm_sq(at.fx, at.fy, at.fz)
    inv_g = div(PuiseuxSeries.one(at.field), g, window_units)
    grads = (at.fx, at.fy, at.fz)
    return {(i, j): grads[i] * grads[j] * inv_g
            for i in range(3) for j in range(i, 3)}


@lru_cache(maxsize=8192)
def _pair_base(params: SurfaceParams, p: int, q: int, sigma: int, lam: Fraction,
               branch: str, window_units: int):
    """Base-curve intermediates shared by every perturbation of one arc."""
    at = _capped_atoms(_cached_atoms(params, p, q, sigma, lam, branch, False,
                                     window_units), window_units)
    f_dist = _factor_sqrt(_norm_sq(at.x, at.y))
    return at, f_dist, _projection_products(at, window_units)


@lru_cache(maxsize=8192)
def _pair_core(params: SurfaceParams, p: int, q: int, sigma: int, lam: Fraction,
               branch: str, delta: Fraction, e: Fraction, window_units: int):
    """Shared intermediates for both pair quantities along one pair.

    Returns ("core", f_diff, f_dist, columns) where each column entry is
    ("zero",), ("ok", factor) or ("bound", order_lower_bound);
    or ("inadmissible", message) when the pair violates the window.
    """
    at, f_dist, proj1 = _pair_base(params, p, q, sigma, lam, branch, window_units)
    xp = at.x + at.x.shifted(e).scaled(delta)
    at2 = _capped_atoms(
        _curve_atoms(params, p, q, sigma, lam, branch, False, window_units,
                     x_series=xp), window_units)

    f_diff = _factor_sqrt(_norm_sq(at.x - at2.x, at.y - at2.y))
    if f_diff.zero:
        return ("zero-diff",)
    if f_diff.order < f_dist.order or (
            f_diff.order == f_dist.order
            and (f_diff.lead_sq * 16).cmp(f_dist.lead_sq) >= 0):
        return ("inadmissible",
                f"|q-q'| has order {f_diff.order} vs dist order {f_dist.order}")

    proj2 = _projection_products(at2, window_units)

    columns = []
    for j in range(3):
        # ((P_q - P_q') e_j)_i = (f'_i f'_j) / G' - (f_i f_j) / G, i = 1..3
        comps = [proj2[min(i, j), max(i, j)] - proj1[min(i, j), max(i, j)]
                 for i in range(3)]
        try:
            f = _factor_sqrt(_norm_sq(*comps))
            columns.append(("zero",) if f.zero else ("ok", f))
        except _WindowTooSmall as exc:
            if exc.bound is None:
                raise
            columns.append(("bound", exc.bound / 2))
    return ("core", f_diff, f_dist, tuple(columns))


def _quantity_pair(params: SurfaceParams, qid: QuantityId, pair: ArcPair,
                   window_units: int, allow_lower_bound: bool) -> LimitBehavior:
    base = pair.base
    if base.complex_cancel:
        raise ValueError("pair quantities are evaluated over real arcs only")
    core = _pair_core(params, base.p, base.q, base.sigma_x, base.lam, base.branch,
                      pair.delta, pair.e, window_units)
    if core[0] == "zero-diff":
        return LimitBehavior(BehaviorClass.TENDS_TO_ZERO, order=None,
                             identically_zero=True)
    if core[0] == "inadmissible":
        raise InadmissiblePair(core[1])
    _, f_diff, f_dist, columns = core

    wanted = (columns[2],) if qid is QuantityId.L2 else columns
    extra_num = [] if qid is QuantityId.L2 else [f_dist]
    extra_order = sum((f.order for f in extra_num), Fraction(0))
    col_factors = [c[1] for c in wanted if c[0] == "ok"]
    col_bounds = [c[1] for c in wanted if c[0] == "bound"]
    if not col_factors:
        if not col_bounds:  # every column identically zero
            return LimitBehavior(BehaviorClass.TENDS_TO_ZERO, order=None,
                                 identically_zero=True)
        bound = min(col_bounds) + extra_order - f_diff.order
        if allow_lower_bound and bound > 0:
            return LimitBehavior(BehaviorClass.TENDS_TO_ZERO, order_lower_bound=bound)
        raise _WindowTooSmall(None)
    sup = col_factors[0]
    for f in col_factors[1:]:
        sup = _factor_sup(sup, f)
    if col_bounds and min(col_bounds) < sup.order:
        # a hidden column might dominate the max; only a bound survives
        bound = min(col_bounds) + extra_order - f_diff.order
        if allow_lower_bound and bound > 0:
            return LimitBehavior(BehaviorClass.TENDS_TO_ZERO, order_lower_bound=bound)
        raise _WindowTooSmall(None)
    return _assemble([sup] + extra_num, [f_diff])


def limit_along_arc(params: SurfaceParams, quantity: QuantityId,
                    arc: Union[MonomialArc, ArcPair]) -> LimitBehavior:
    """Certified LimitBehavior of a quantity along an arc or arc pair.

    Escalates the truncation window, then (through the kernel's certificate
    machinery) coefficient precision; surviving ambiguity is reported as
    Indeterminate rather than guessed.
    """
    is_pair = isinstance(arc, ArcPair)
    if quantity in PAIR_QUANTITIES and not is_pair:
        raise ValueError(f"{quantity.value} requires an ArcPair")
    if is_pair and quantity not in PAIR_QUANTITIES:
        arc = arc.base
        is_pair = False
    ladder = PAIR_WINDOW_LADDER if is_pair else WINDOW_LADDER
    for attempt, w in enumerate(ladder):
        last = attempt + 1 == len(ladder)
        try:
            if is_pair:
                return _quantity_pair(params, quantity, arc, w, allow_lower_bound=last)
            at = _cached_atoms(params, arc.p, arc.q, arc.sigma_x, arc.lam,
                               arc.branch, arc.complex_cancel, w)
            return _quantity_single(params, quantity, at, w, allow_lower_bound=last)
        except _WindowTooSmall:
            if last:
                return LimitBehavior(BehaviorClass.INDETERMINATE)
            continue
        except PrecisionExhausted:
            return LimitBehavior(BehaviorClass.INDETERMINATE)
    raise AssertionError("unreachable")


def _substitute_raw(params: SurfaceParams, p: int, q: int, sigma: int, lam: Fraction,
                    branch: str = "+", window_units: int = 8) -> ArcAtoms:
    # test hook: allows non-normalized (p, q) to exercise reparametrization
    return _curve_atoms(params, p, q, sigma, lam, branch, False, window_units)


# --- critical coefficient values ---------------------------------------------------


@dataclass(frozen=True)
class CriticalLambdas:
    """Rational cancellation coefficients at a slope, with solvability flags.

    `candidates` holds exact rational lambda values killing either the
    leading term of z**b x**c + x**d or of its x-derivative factor at the
    critical slope; the flags record real solvability (per sign of x) when
    the killing value exists but is irrational, which is exactly the case
    the monomial-arc grammar cannot express.
    """

    slope_matches: bool
    candidates: tuple[Fraction, ...]
    rhs_kill_real: tuple[tuple[int, bool], ...]
    t1_kill_real: tuple[tuple[int, bool], ...]
    t1_modulus_rational: bool


def critical_lambdas(params: SurfaceParams, pq: tuple[int, int]) -> CriticalLambdas:
    a, b, c, d = params.as_tuple()
    p, q = pq
    if q * b != p * (d - c):
        return CriticalLambdas(False, (), ((1, False), (-1, False)),
                               ((1, False), (-1, False)), False)
    cands: set[Fraction] = set()
    rhs_flags = []
    t1_flags = []
    root_dc = exact_nth_root(Fraction(d, c), b)
    for sigma in (1, -1):
        # lambda^b = -sigma^(d-c): kills z^b x^c + x^d
        target = Fraction(-(sigma ** (d - c)))
        solvable = target > 0 or b % 2 == 1
        rhs_flags.append((sigma, solvable))
        if solvable:
            root = exact_nth_root(abs(target), b)
            if root is not None:  # |target| = 1, always rational
                val = root if target > 0 else -root
                cands.add(val)
                if b % 2 == 0:
                    cands.add(-val)
        # lambda^b = -(d/c) sigma^(d-c): kills c z^b x^(c-1) + d x^(d-1)
        target = -Fraction(d, c) * sigma ** (d - c)
        solvable = target > 0 or b % 2 == 1
        t1_flags.append((sigma, solvable))
        if solvable and root_dc is not None:
            val = root_dc if target > 0 else -root_dc
            cands.add(val)
            if b % 2 == 0:
                cands.add(-val)
    return CriticalLambdas(True, tuple(sorted(cands)), tuple(rhs_flags),
                           tuple(t1_flags), root_dc is not None)

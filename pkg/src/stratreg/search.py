"""Arc enumeration, certified fault search, and the floating sampling oracle.

The searcher only ever certifies failures: a returned witness carries a
certified limit class plus an independent floating re-check, while absence
of a witness is budget-bounded evidence, never a proof of regularity.

Enumeration is deterministic: slopes (p, q) by increasing height p+q and
increasing p within a height, crossed with a fixed sign/coefficient lattice
extended by the rational cancellation coefficients of the slope.  The
floating oracle evaluates the printed formulas directly in high-precision
arithmetic (never through the series kernel), so the two routes are
independent.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd
from typing import Iterator, Optional, Sequence, Union

import mpmath as mp

from .arcs import (ArcPair, BehaviorClass, CriticalLambdas, InadmissiblePair,
                   InfeasibleArc, LimitBehavior, MonomialArc, QuantityId,
                   critical_lambdas, limit_along_arc)
from .model import Condition, Field, SurfaceParams

BASE_LAMBDAS = (Fraction(1), Fraction(-1), Fraction(2), Fraction(-2),
                Fraction(1, 2), Fraction(-1, 2))
PAIR_DELTAS = (Fraction(1), Fraction(-1))
PAIR_EXPONENTS = (Fraction(1, 2), Fraction(1), Fraction(2))

CONDITION_QUANTITIES = {
    Condition.WHITNEY_A: (QuantityId.A,),
    Condition.WHITNEY_B: (QuantityId.A, QuantityId.BPI),
    Condition.KUO_VERDIER_W: (QuantityId.W,),
    Condition.MOSTOWSKI_L: (QuantityId.W, QuantityId.L2, QuantityId.L3),
}

# classes that witness failure: (a)/(b) need "tends to 0", so any certified
# non-vanishing limit is a fault; (w)/(L) need boundedness
FAULT_CLASSES = {
    Condition.WHITNEY_A: (BehaviorClass.BOUNDED_NONZERO, BehaviorClass.UNBOUNDED),
    Condition.WHITNEY_B: (BehaviorClass.BOUNDED_NONZERO, BehaviorClass.UNBOUNDED),
    Condition.KUO_VERDIER_W: (BehaviorClass.UNBOUNDED,),
    Condition.MOSTOWSKI_L: (BehaviorClass.UNBOUNDED,),
}

RECERT_POINTS = (10, 16, 22)  # u = 2**-k


@dataclass(frozen=True)
class SearchBudget:
    max_height: int = 64
    max_arcs: int = 20000
    per_tuple_seconds: Optional[float] = None

    def __post_init__(self):
        if self.max_height < 2 or self.max_arcs < 1:
            raise ValueError("budget bounds must be positive")

    def to_json(self) -> dict:
        return {"max_height": self.max_height, "max_arcs": self.max_arcs,
                "per_tuple_seconds": self.per_tuple_seconds}


@dataclass(frozen=True)
class FaultWitness:
    params: SurfaceParams
    field: Field
    condition: Condition
    arc: Union[MonomialArc, ArcPair]
    behavior: LimitBehavior
    quantity: QuantityId

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "field": self.field.value,
            "condition": self.condition.value,
            "arc": self.arc.to_json(),
            "order": self.behavior.order_str(),
            "class": self.behavior.klass.value,
            "quantity": self.quantity.value,
        }


@dataclass(frozen=True)
class NoneFound:
    budget: SearchBudget
    stopped: str  # "height-exhausted" | "arc-limit" | "time-limit"
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {"witness": None, "stopped": self.stopped,
                "budget": self.budget.to_json(), "notes": list(self.notes)}


def _slopes(max_height: int) -> Iterator[tuple[int, int]]:
    for h in range(2, max_height + 1):
        for p in range(1, h):
            q = h - p
            if gcd(p, q) == 1:
                yield p, q


def _lambda_candidates(params: SurfaceParams, p: int, q: int,
                       max_height: int) -> tuple[list[Fraction], CriticalLambdas]:
    crit = critical_lambdas(params, (p, q))
    out = list(BASE_LAMBDAS)
    for lam in crit.candidates:
        if lam not in out and abs(lam.numerator) + lam.denominator <= max_height:
            out.append(lam)
    return out, crit


def _feasible_branches(params: SurfaceParams, p: int, q: int, sigma: int,
                       lam: Fraction) -> list[str]:
    a, b, c, d = params.as_tuple()
    terms: dict[int, Fraction] = {}
    terms[b * q + c * p] = Fraction(lam) ** b * sigma ** c
    terms[d * p] = terms.get(d * p, Fraction(0)) + sigma ** d
    nonzero = {e: co for e, co in terms.items() if co != 0}
    if not nonzero:
        return ["+"]  # exact cancellation: y = 0 on the arc
    lead = nonzero[min(nonzero)]
    if a % 2 == 0:
        return [] if lead < 0 else ["+", "-"]
    return ["+"]


def enumerate_arcs(params: SurfaceParams, budget: SearchBudget,
                   field: Field = Field.REAL) -> Iterator[MonomialArc]:
    """Deterministic arc stream; in the complex field, slopes admitting the
    surface-killing unimodular coefficient additionally yield the surrogate
    cancellation arc."""
    a, b, c, d = params.as_tuple()
    for p, q in _slopes(budget.max_height):
        lambdas, crit = _lambda_candidates(params, p, q, budget.max_height)
        for sigma in (1, -1):
            if field is Field.COMPLEX and crit.slope_matches:
                solvable = dict(crit.rhs_kill_real)[sigma]
                if not solvable:
                    yield MonomialArc(p, q, sigma, Fraction(1), "+",
                                      complex_cancel=True)
            for lam in lambdas:
                for branch in _feasible_branches(params, p, q, sigma, lam):
                    yield MonomialArc(p, q, sigma, lam, branch)


def _pairs_for(arc: MonomialArc, budget: SearchBudget) -> Iterator[ArcPair]:
    for delta in PAIR_DELTAS:
        for e in PAIR_EXPONENTS:
            if abs(delta.numerator) + delta.denominator > budget.max_height:
                continue
            if e.numerator + e.denominator > budget.max_height:
                continue
            yield ArcPair(arc, delta, e)


def find_fault(params: SurfaceParams, field: Field, condition: Condition,
               budget: Optional[SearchBudget] = None
               ) -> Union[FaultWitness, NoneFound]:
    """First certified fault witness in enumeration order, or NoneFound.

    Witnesses are re-certified by the independent floating oracle before
    being returned; Indeterminate evaluations are recorded and skipped.
    """
    budget = budget or SearchBudget()
    quantities = CONDITION_QUANTITIES[condition]
    fault_classes = FAULT_CLASSES[condition]
    deadline = None
    if budget.per_tuple_seconds is not None:
        deadline = time.monotonic() + budget.per_tuple_seconds
    notes: list[str] = []
    arcs_seen = 0
    stopped = "height-exhausted"
    for arc in enumerate_arcs(params, budget, field):
        if arcs_seen >= budget.max_arcs:
            stopped = "arc-limit"
            break
        if deadline is not None and time.monotonic() > deadline:
            stopped = "time-limit"
            break
        arcs_seen += 1
        if arc.branch == "-":
            # all six quantities are invariant under the y-branch flip (they
            # depend on y through even powers and norms only); the "+" twin
            # was already evaluated
            continue
        crit = critical_lambdas(params, (arc.p, arc.q))
        if crit.slope_matches and not crit.t1_modulus_rational:
            note = ("irrational cancellation modulus (d/c)^(1/b) at slope "
                    f"({arc.p},{arc.q}); not expressible by rational monomial arcs")
            if note not in notes:
                notes.append(note)
        for qid in quantities:
            probes: Sequence[Union[MonomialArc, ArcPair]]
            if qid in (QuantityId.L2, QuantityId.L3):
                if arc.complex_cancel:
                    continue
                probes = list(_pairs_for(arc, budget))
            else:
                probes = [arc]
            for probe in probes:
                if deadline is not None and time.monotonic() > deadline:
                    return NoneFound(budget, "time-limit", tuple(notes))
                try:
                    behavior = limit_along_arc(params, qid, probe)
                except (InfeasibleArc, InadmissiblePair):
                    continue
                if behavior.klass is BehaviorClass.INDETERMINATE:
                    note = f"indeterminate: {qid.value} on {probe}"
                    if note not in notes:
                        notes.append(note)
                    continue
                if behavior.klass in fault_classes:
                    if recertify_float(params, qid, probe, behavior.klass):
                        return FaultWitness(params, field, condition, probe,
                                            behavior, qid)
                    notes.append(f"recertification failed: {qid.value} on {probe}")
    return NoneFound(budget, stopped, tuple(notes))


# --- floating oracle -----------------------------------------------------------


def _mp_point(params: SurfaceParams, arc: MonomialArc, u) -> tuple:
    """(x, y, z) along the arc at parameter u, in mpmath arithmetic."""
    a, b, c, d = params.as_tuple()
    x = mp.mpf(arc.sigma_x) * u ** arc.p
    if arc.complex_cancel:
        zeta = mp.power(mp.mpc(-(arc.sigma_x ** (d - c))), mp.mpf(1) / b)
        z = zeta * u ** arc.q
    else:
        z = mp.mpf(arc.lam.numerator) / arc.lam.denominator * u ** arc.q
    rhs = z ** b * x ** c + x ** d
    if arc.complex_cancel:
        y = mp.power(rhs, mp.mpf(1) / a) if rhs != 0 else mp.mpc(0)
        if a == 1:
            y = rhs
        return x, y, z
    if a == 1:
        return x, rhs, z
    if rhs < 0:
        if a % 2 == 0:
            raise InfeasibleArc("negative rhs on arc")
        y = -mp.power(-rhs, mp.mpf(1) / a)
    else:
        y = mp.power(rhs, mp.mpf(1) / a)
        if a % 2 == 0 and arc.branch == "-":
            y = -y
    return x, y, z


def _mp_gradient(params: SurfaceParams, x, y, z) -> tuple:
    a, b, c, d = params.as_tuple()
    fx = -(c * z ** b * x ** (c - 1) + d * x ** (d - 1))
    fy = a * y ** (a - 1)
    fz = -(b * z ** (b - 1) * x ** c)
    return fx, fy, fz


def _mp_norm(*vals) -> "mp.mpf":
    return mp.sqrt(mp.fsum(abs(v) ** 2 for v in vals))


def float_quantity(params: SurfaceParams, qid: QuantityId,
                   probe: Union[MonomialArc, ArcPair], u) -> Optional["mp.mpf"]:
    """Printed-formula evaluation along the arc at u; None when undefined."""
    a, b, c, d = params.as_tuple()
    if isinstance(probe, ArcPair):
        arc = probe.base
        x, y, z = _mp_point(params, arc, u)
        fac = 1 + mp.mpf(probe.delta.numerator) / probe.delta.denominator \
            * u ** mp.mpf(float(probe.e))
        x2 = x * fac
        rhs2 = z ** b * x2 ** c + x2 ** d
        if a % 2 == 0 and rhs2 < 0:
            return None
        if a == 1:
            y2 = rhs2
        elif rhs2 < 0:
            y2 = -mp.power(-rhs2, mp.mpf(1) / a)
        else:
            y2 = mp.power(rhs2, mp.mpf(1) / a)
            if a % 2 == 0 and arc.branch == "-":
                y2 = -y2
        g1 = _mp_gradient(params, x, y, z)
        g2 = _mp_gradient(params, x2, y2, z)
        n1 = mp.fsum(v * v for v in g1)
        n2 = mp.fsum(v * v for v in g2)
        if n1 == 0 or n2 == 0:
            return None
        diff = _mp_norm(x - x2, y - y2)
        if diff == 0:
            return None

        def col(j):
            return [g2[i] * g2[j] / n2 - g1[i] * g1[j] / n1 for i in range(3)]

        if qid is QuantityId.L2:
            return _mp_norm(*col(2)) / diff
        if qid is QuantityId.L3:
            m = max(_mp_norm(*col(j)) for j in range(3))
            return m * _mp_norm(x, y) / diff
        raise ValueError(f"{qid} is not a pair quantity")

    arc = probe
    x, y, z = _mp_point(params, arc, u)
    fx, fy, fz = _mp_gradient(params, x, y, z)
    if qid is QuantityId.A:
        den = _mp_norm(fx, fy)
        return None if den == 0 else abs(fz) / den
    if qid is QuantityId.BPI:
        num = abs(x * fx + y * fy)
        den = _mp_norm(x, y) * _mp_norm(fx, fy, fz)
        return None if den == 0 else num / den
    if qid is QuantityId.W:
        rhs = z ** b * x ** c + x ** d
        t1 = abs(c * x ** (c - 1) * z ** b + d * x ** (d - 1))
        s1 = max(t1, abs(rhs) ** (mp.mpf(a - 1) / a))
        s2 = max(abs(x), abs(rhs) ** (mp.mpf(1) / a))
        return None if s1 == 0 or s2 == 0 else abs(z ** (b - 1) * x ** c) / (s1 * s2)
    if qid is QuantityId.Z:
        den = _mp_norm(fx, fy, fz) * _mp_norm(x, y)
        return None if den == 0 else abs(fz) / den
    raise ValueError(f"unknown quantity {qid}")


def recertify_float(params: SurfaceParams, qid: QuantityId,
                    probe: Union[MonomialArc, ArcPair],
                    klass: BehaviorClass) -> bool:
    """Three-point monotone consistency check of a certified class."""
    with mp.workprec(160):
        vals = []
        for k in RECERT_POINTS:
            try:
                v = float_quantity(params, qid, probe, mp.mpf(2) ** -k)
            except InfeasibleArc:
                return False
            if v is None:
                return False
            vals.append(v)
    v10, v16, v22 = vals
    if klass is BehaviorClass.UNBOUNDED:
        return v22 > v16 > v10 and v22 > 2 * v10
    if klass is BehaviorClass.BOUNDED_NONZERO:
        lo, hi = min(vals), max(vals)
        return lo > 0 and hi / lo < 5
    if klass is BehaviorClass.TENDS_TO_ZERO:
        return v22 < v16 < v10
    return False


# --- sampling oracle -------------------------------------------------------------


@dataclass(frozen=True)
class GridSpec:
    k_min: int = 6
    k_max: int = 26
    k_step: int = 2
    n_slopes: int = 48
    slope_max: float = 8.0

    def __post_init__(self):
        if self.k_min < 1 or self.k_max <= self.k_min or self.k_step < 1:
            raise ValueError("grid shells must be positive and increasing")
        if self.n_slopes < 2 or self.slope_max <= 0:
            raise ValueError("slope grid must be nontrivial")


@dataclass(frozen=True)
class EmpiricalReport:
    params: SurfaceParams
    quantity: QuantityId
    shell_maxima: tuple[tuple[int, float], ...]  # (k, max on shell 2^-k)
    fitted_exponent: float                       # growth exponent vs u
    max_value: float

    def to_json(self) -> dict:
        return {"params": self.params.to_json(), "quantity": self.quantity.value,
                "shell_maxima": [[k, v] for k, v in self.shell_maxima],
                "fitted_exponent": self.fitted_exponent, "max_value": self.max_value}


def _shell_points(u, spec: GridSpec):
    # slope grid geometric between ~1/slope_max and slope_max
    for i in range(spec.n_slopes):
        s = spec.slope_max ** (-1 + 2 * i / (spec.n_slopes - 1))
        us = u ** mp.mpf(s)
        for pt in ((us, u), (-us, u), (us, -u), (-us, -u), (u, us), (-u, us),
                   (u, -us), (-u, -us)):
            yield pt


def sample_grid(params: SurfaceParams, qid: QuantityId,
                spec: Optional[GridSpec] = None) -> EmpiricalReport:
    """Shell maxima of the floating quantity over a log-spaced (x, z) grid.

    Reports the per-shell maxima and the least-squares growth exponent of
    max vs shell radius (negative exponents indicate blow-up).
    """
    spec = spec or GridSpec()
    a, b, c, d = params.as_tuple()
    shells: list[tuple[int, float]] = []
    with mp.workprec(120):
        for k in range(spec.k_min, spec.k_max + 1, spec.k_step):
            u = mp.mpf(2) ** -k
            best = mp.mpf(0)
            for x, z in _shell_points(u, spec):
                rhs = z ** b * x ** c + x ** d
                if a % 2 == 0 and rhs < 0:
                    continue
                try:
                    v = _grid_quantity(params, qid, x, z, rhs)
                except ZeroDivisionError:
                    continue
                if v is not None and v > best:
                    best = v
            shells.append((k, float(best)))
    pts = [(math.log(2.0 ** -k), math.log(v)) for k, v in shells if v > 0]
    slope = _ls_slope(pts) if len(pts) >= 2 else float("nan")
    max_val = max((v for _, v in shells), default=0.0)
    return EmpiricalReport(params, qid, tuple(shells), slope, max_val)


def _grid_quantity(params: SurfaceParams, qid: QuantityId, x, z, rhs):
    a, b, c, d = params.as_tuple()
    if qid is QuantityId.W:
        t1 = abs(c * x ** (c - 1) * z ** b + d * x ** (d - 1))
        s1 = max(t1, abs(rhs) ** (mp.mpf(a - 1) / a))
        s2 = max(abs(x), abs(rhs) ** (mp.mpf(1) / a))
        if s1 == 0 or s2 == 0:
            return None
        return abs(z ** (b - 1) * x ** c) / (s1 * s2)
    # remaining quantities need a y: use the principal branch
    if a == 1:
        y = rhs
    elif rhs < 0:
        y = -mp.power(-rhs, mp.mpf(1) / a)
    else:
        y = mp.power(rhs, mp.mpf(1) / a)
    fx, fy, fz = _mp_gradient(params, x, y, z)
    if qid is QuantityId.A:
        den = _mp_norm(fx, fy)
        return None if den == 0 else abs(fz) / den
    if qid is QuantityId.BPI:
        den = _mp_norm(x, y) * _mp_norm(fx, fy, fz)
        return None if den == 0 else abs(x * fx + y * fy) / den
    if qid is QuantityId.Z:
        den = _mp_norm(fx, fy, fz) * _mp_norm(x, y)
        return None if den == 0 else abs(fz) / den
    raise ValueError(f"grid sampling does not support {qid}")


def _ls_slope(pts: Sequence[tuple[float, float]]) -> float:
    n = len(pts)
    sx = sum(p[0] for p in pts)
    sy = sum(p[1] for p in pts)
    sxx = sum(p[0] * p[0] for p in pts)
    sxy = sum(p[0] * p[1] for p in pts)
    denom = n * sxx - sx * sx
    return (n * sxy - sx * sy) / denom if denom else float("nan")


def float_loglog_slope(params: SurfaceParams, qid: QuantityId,
                       probe: Union[MonomialArc, ArcPair],
                       k_lo: int = 10, k_hi: int = 26) -> Optional[float]:
    """Slope of log(quantity) vs log(u) along an arc; the order oracle.

    Fitted over the deepest shells of [k_lo, k_hi]: slowly decaying
    subleading terms bias a fit that includes the shallow shells.
    """
    pts = []
    fit_from = max(k_lo, k_hi - 8)
    with mp.workprec(220):
        for k in range(k_lo, k_hi + 1, 2):
            u = mp.mpf(2) ** -k
            try:
                v = float_quantity(params, qid, probe, u)
            except InfeasibleArc:
                return None
            if v is None or v <= 0 or k < fit_from:
                continue
            pts.append((float(-k * mp.log(2)), float(mp.log(v))))
    if len(pts) < 3:
        return None
    return _ls_slope(pts)

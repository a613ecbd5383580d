"""Pointwise evaluation of the surface, its gradient, and the regularity ratios.

Polynomial quantities (the defining function and its gradient) accept exact
rationals and stay exact.  The regularity ratios involve roots and norms and
are evaluated in double precision; certified evaluation along arcs is the
job of the `arcs` module, which shares nothing with these floating paths, so
the two can serve as independent cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .model import Field, SurfaceParams

Scalar = Union[int, float, Fraction]

# admissibility window |q - q'| <= (1/(2*gamma)) * dist(q, Oz) with gamma = 2
GAMMA = 2.0


class DegenerateDenominator(ArithmeticError):
    """A regularity ratio was requested where its denominator vanishes."""


class InadmissiblePair(ValueError):
    """Point pair violates the chain-condition proximity window."""


def eval_f(params: SurfaceParams, x: Scalar, y: Scalar, z: Scalar) -> Scalar:
    a, b, c, d = params.as_tuple()
    return y ** a - z ** b * x ** c - x ** d


def gradient(params: SurfaceParams, x: Scalar, y: Scalar, z: Scalar) -> tuple:
    a, b, c, d = params.as_tuple()
    fx = -(c * z ** b * x ** (c - 1) + d * x ** (d - 1))
    fy = a * y ** (a - 1)
    fz = -(b * z ** (b - 1) * x ** c)
    return (fx, fy, fz)


def y_branches(params: SurfaceParams, x: float, z: float,
               field: Field = Field.REAL) -> list:
    """All y with y**a = z**b x**c + x**d over the requested field."""
    a = params.a
    rhs = float(z) ** params.b * float(x) ** params.c + float(x) ** params.d
    if field is Field.COMPLEX:
        if rhs == 0.0:
            return [0j]
        base = complex(rhs) ** (1.0 / a)
        return [base * complex(math.cos(2 * math.pi * k / a),
                               math.sin(2 * math.pi * k / a)) for k in range(a)]
    if rhs == 0.0:
        return [0.0]
    if a % 2 == 1:
        return [math.copysign(abs(rhs) ** (1.0 / a), rhs)]
    if rhs < 0.0:
        return []
    r = rhs ** (1.0 / a)
    return [r, -r]


def on_surface_residual(params: SurfaceParams, point: Sequence[float]) -> float:
    x, y, z = point
    return abs(eval_f(params, x, y, z)) / max(1.0, abs(y) ** params.a)


def _norm2(*vals: float) -> float:
    return math.sqrt(math.fsum(v * v for v in vals))


def quantity_a(params: SurfaceParams, point: Sequence[float]) -> float:
    """|f_z| / ||(f_x, f_y)||; (a)-regularity needs this to vanish at 0."""
    x, y, z = (float(v) for v in point)
    fx, fy, fz = gradient(params, x, y, z)
    den = _norm2(fx, fy)
    if den == 0.0:
        raise DegenerateDenominator("(f_x, f_y) vanishes at the evaluation point")
    return abs(fz) / den


def quantity_bpi(params: SurfaceParams, point: Sequence[float]) -> float:
    """|x f_x + y f_y| / (||(x, y)|| * ||grad f||), via the on-surface identity."""
    a, b, c, d = params.as_tuple()
    x, y, z = (float(v) for v in point)
    fx, fy, fz = gradient(params, x, y, z)
    num = abs((a - c) * z ** b * x ** c + (a - d) * x ** d)
    den = _norm2(x, y) * _norm2(fx, fy, fz)
    if den == 0.0:
        raise DegenerateDenominator("b-pi ratio undefined: zero gradient or (x,y)")
    return num / den


def quantity_w(params: SurfaceParams, x: float, z: float) -> float:
    """The printed two-sup form of the Kuo-Verdier bound, a function of (x, z)."""
    a, b, c, d = params.as_tuple()
    x, z = float(x), float(z)
    rhs = z ** b * x ** c + x ** d
    t1 = abs(c * x ** (c - 1) * z ** b + d * x ** (d - 1))
    s1 = max(t1, abs(rhs) ** ((a - 1) / a))
    s2 = max(abs(x), abs(rhs) ** (1 / a))
    if s1 == 0.0 or s2 == 0.0:
        raise DegenerateDenominator("both sup arguments vanish")
    return abs(z ** (b - 1) * x ** c) / (s1 * s2)


def quantity_w_projective(params: SurfaceParams, point: Sequence[float]) -> float:
    """|f_z| / (||grad f|| * ||(x, y)||): tangent-plane deviation over distance."""
    x, y, z = (float(v) for v in point)
    fx, fy, fz = gradient(params, x, y, z)
    den = _norm2(fx, fy, fz) * _norm2(x, y)
    if den == 0.0:
        raise DegenerateDenominator("projective ratio undefined at this point")
    return abs(fz) / den


def tangent_projection(params: SurfaceParams,
                       point: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    """(P, P_perp): orthogonal projections onto tangent plane and normal line."""
    x, y, z = (float(v) for v in point)
    g = np.array(gradient(params, x, y, z), dtype=float)
    n2 = float(g @ g)
    if n2 == 0.0:
        raise DegenerateDenominator("gradient vanishes; tangent plane undefined")
    p_perp = np.outer(g, g) / n2
    return np.eye(3) - p_perp, p_perp


def dist_to_axis(point: Sequence[float]) -> float:
    x, y, _ = (float(v) for v in point)
    return _norm2(x, y)


def _check_pair(params: SurfaceParams, q: Sequence[float], q2: Sequence[float]) -> float:
    diff = _norm2(*(float(u) - float(v) for u, v in zip(q, q2)))
    if diff == 0.0:
        return 0.0
    window = dist_to_axis(q) / (2.0 * GAMMA)
    if diff > window:
        raise InadmissiblePair(
            f"|q-q'| = {diff:.3g} exceeds admissibility window {window:.3g}")
    return diff


def quantity_L2(params: SurfaceParams, q: Sequence[float], q2: Sequence[float]) -> float:
    """||(P_q - P_q')(0,0,1)|| / |q - q'| over an admissible pair."""
    diff = _check_pair(params, q, q2)
    if diff == 0.0:
        return 0.0
    _, pp1 = tangent_projection(params, q)
    _, pp2 = tangent_projection(params, q2)
    v = (pp2 - pp1) @ np.array([0.0, 0.0, 1.0])
    return float(np.linalg.norm(v)) / diff


def quantity_L3(params: SurfaceParams, q: Sequence[float], q2: Sequence[float]) -> float:
    """max_i ||(P_q - P_q')(e_i)|| * dist(q, Oz) / |q - q'|."""
    diff = _check_pair(params, q, q2)
    if diff == 0.0:
        return 0.0
    _, pp1 = tangent_projection(params, q)
    _, pp2 = tangent_projection(params, q2)
    delta = pp2 - pp1
    col_norms = [float(np.linalg.norm(delta @ e)) for e in np.eye(3)]
    return max(col_norms) * dist_to_axis(q) / diff

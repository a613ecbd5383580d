"""Rational interval arithmetic: exactness and outward-rounded roots."""

import math
from fractions import Fraction as Fr

import pytest
from hypothesis import given, strategies as st

from stratreg.intervals import (RationalInterval, exact_nth_root, iroot_ceil,
                                iroot_floor)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=97)


def interval(lo, hi):
    return RationalInterval(Fr(lo), Fr(hi))


def test_point_and_queries():
    p = RationalInterval.point(Fr(3, 7))
    assert p.is_point() and not p.contains_zero()
    assert interval(-1, 2).contains_zero()
    assert interval(1, 2).is_certainly_positive()
    assert interval(-2, -1).is_certainly_negative()
    assert RationalInterval.point(0).is_certified_zero()
    with pytest.raises(ValueError):
        interval(2, 1)


@given(rationals, rationals, rationals, rationals)
def test_mul_soundness(a, b, c, d):
    i1 = RationalInterval(min(a, b), max(a, b))
    i2 = RationalInterval(min(c, d), max(c, d))
    prod = i1 * i2
    for x in (i1.lo, i1.hi):
        for y in (i2.lo, i2.hi):
            assert prod.contains(x * y)
    s = i1 + i2
    assert s.contains(i1.lo + i2.lo) and s.contains(i1.hi + i2.hi)


@given(rationals)
def test_div_by_nonzero(x):
    i = RationalInterval(Fr(1, 3), Fr(5, 2))
    if x == 0:
        return
    j = RationalInterval.point(x)
    q = j / i
    assert q.contains(x / Fr(1, 3)) or q.contains(x / Fr(5, 2))
    with pytest.raises(ZeroDivisionError):
        j / interval(-1, 1)


def test_integer_roots():
    assert iroot_floor(26, 3) == 2
    assert iroot_floor(27, 3) == 3
    assert iroot_ceil(28, 3) == 4
    assert iroot_floor(10 ** 30, 2) == 10 ** 15
    assert exact_nth_root(Fr(8, 27), 3) == Fr(2, 3)
    assert exact_nth_root(Fr(2), 2) is None


@given(st.fractions(min_value="1/1000", max_value=1000, max_denominator=1000),
       st.integers(min_value=2, max_value=6))
def test_nth_root_enclosure(x, k):
    enc = RationalInterval.point(x).nth_root(k, bits=64)
    true = float(x) ** (1.0 / k)
    assert float(enc.lo) <= true * (1 + 1e-12)
    assert float(enc.hi) >= true * (1 - 1e-12)
    assert enc.width <= Fr(1, 2 ** 48)  # outward rounding stays tight


def test_nth_root_tightens_with_bits():
    x = RationalInterval.point(Fr(2))
    w64 = x.nth_root(2, 64).width
    w256 = x.nth_root(2, 256).width
    assert w256 < w64
    assert w64 > 0  # sqrt(2) is irrational, some width is unavoidable


def test_pow_frac():
    v = RationalInterval.point(Fr(4)).pow_frac(Fr(3, 2))
    assert v.contains(8)
    assert v.is_point()  # 4^(3/2) is exactly 8


def test_abs_and_hull():
    assert interval(-3, 2).abs().hi == 3
    assert interval(-3, 2).abs().lo == 0
    h = interval(0, 1).hull(interval(5, 6))
    assert h.lo == 0 and h.hi == 6

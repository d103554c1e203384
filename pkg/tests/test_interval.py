import math
from fractions import Fraction

import pytest

from grhpsi.interval import Interval, as_interval, imax


def test_exact_fraction_encloses():
    x = Interval.exact(Fraction(1, 3))
    assert x.lo < x.hi
    assert x.contains(Fraction(1, 3))


def test_add_mul_outward():
    a = Interval(0.1)
    s = a + a + a
    assert s.contains(Fraction(3, 10)) or s.lo <= 0.3 <= s.hi
    p = Interval(-1, 2) * Interval(-3, 1)
    assert p.lo <= -6 and p.hi >= 3


def test_division_by_zero_interval():
    with pytest.raises(ZeroDivisionError):
        Interval(1) / Interval(-1, 1)


def test_log_exp_roundtrip():
    x = Interval(2.0)
    y = x.log().exp()
    assert y.contains(2.0)
    assert Interval(1.0).log().contains(0.0)


def test_sqrt_and_pow():
    assert Interval(2.0).sqrt().contains(math.sqrt(2))
    assert -1e-300 <= (Interval(-2, 1) ** 2).lo <= 0.0
    assert (Interval(-2, 1) ** 2).hi >= 4


def test_log_domain():
    with pytest.raises(ValueError):
        Interval(-1, 1).log()


def test_helpers():
    assert as_interval(3).contains(3)
    assert imax(Interval(1, 2), Interval(0, 3)).hi == 3
    assert Interval.hull(1.0, 5.0, 3.0) == Interval(1.0, 5.0)
    assert Interval(1, 3).intersect(Interval(2, 4)) == Interval(2, 3)
    assert Interval(-3, 1).max0().lo == 0
    assert abs(Interval(-3, 1)).hi == 3

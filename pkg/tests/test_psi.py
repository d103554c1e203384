import math

import pytest

from grhpsi import fields, psi


def test_small_values_Q():
    Q = fields.rational_field()
    assert psi.psi_m(Q, 0, 10) == pytest.approx(math.log(2520))
    # psi^(1)(x) = sum (x - n) Lambda(n)
    assert psi.psi_m(Q, 1, 5) == pytest.approx(3 * math.log(2) + 2 * math.log(3) + 1 * math.log(2))


def test_gaussian_includes_ramified_prime():
    K = fields.quadratic_field(-4)
    # Lambda(2) = log 2, Lambda(4) = log 2, Lambda(5) = 2 log 5
    assert psi.psi_m(K, 0, 5) == pytest.approx(2 * math.log(2) + 2 * math.log(5))


def test_cache_grows():
    K = fields.quadratic_field(5)
    a = psi.psi_m(K, 2, 100.0)
    psi.psi_m(K, 0, 50000.0)
    assert psi.psi_m(K, 2, 100.0) == a


def test_bad_args():
    Q = fields.rational_field()
    with pytest.raises(ValueError):
        psi.psi_m(Q, 3, 10)
    with pytest.raises(ValueError):
        psi.psi_m(Q, 1, 0.5)
    with pytest.raises(ValueError):
        psi.theorem_bound(Q, 1, 2.0)


def test_theorem_bounds_hold():
    for K in (fields.quadratic_field(-4), fields.quadratic_field(5), fields.quadratic_field(-3)):
        for m in (1, 2):
            for x in (3.0, 10.0, 345.6, 5000.0, 60000.0):
                assert psi.theorem_margin(K, m, x) > 0


def test_rational_m2_coefficient():
    Q = fields.rational_field()
    # the zero contribution is about 2 * 0.00144 x^(5/2) here; 0.0015 is not enough
    assert psi.theorem_margin(Q, 2, 9652.9) < 0
    assert psi.theorem_margin(Q, 2, 9652.9, corrected=True) > 0
    assert psi.theorem_bound(fields.quadratic_field(-4), 2, 100.0, corrected=True) == \
        psi.theorem_bound(fields.quadratic_field(-4), 2, 100.0)

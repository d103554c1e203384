import math

import mpmath
import pytest

from grhpsi import special


@pytest.mark.parametrize("x", [0.25, 0.5, 1.0, 1.75, 3.0, 17.5, 1000.0])
def test_digamma_encloses_mpmath(x):
    assert special.digamma(x).contains(float(mpmath.digamma(x)))


def test_digamma_domain():
    with pytest.raises(ValueError):
        special.digamma(0.0)


@pytest.mark.parametrize("x", [0.01, 0.3, 1.0, 2.5, 10.0, 60.0])
def test_e1(x):
    r = special.exp_integral_e1(x)
    v = float(mpmath.e1(x))
    assert r.contains(v)
    assert r.width <= 1e-12 * v
    assert special.e1_bracket(x).contains(v)


def test_kernel_derivatives_against_numeric():
    f = lambda t: 1 / (t * mpmath.log(t))
    for order in range(4):
        ref = float(mpmath.diff(f, 7.0, order))
        assert special.kernel_f_derivatives(7.0, order) == pytest.approx(ref, rel=1e-12)
    with pytest.raises(ValueError):
        special.kernel_f_derivatives(1.0)


@pytest.mark.parametrize("m,j", [(1, 1), (1, 2), (2, 1), (2, 2)])
@pytest.mark.parametrize("x", [3.0, 10.0, 100.0])
def test_closed_vs_series(m, j, x):
    assert abs(special.closed_f(m, j, x) - special.series_f(m, j, x)) <= 1e-12


def test_remainder_envelope():
    for m in (1, 2):
        for r1, r2 in ((1, 0), (2, 0), (0, 1), (3, 1), (0, 5)):
            n = r1 + 2 * r2
            for x in (3.0, 30.0, 1e4):
                assert abs(special.lemma_remainder_R(m, r1, r2, x)) <= special.lemma_remainder_bound(m, n, x) + 1e-9


def test_appendix_keys():
    assert len(special.APPENDIX_INTEGRALS) == 12
    with pytest.raises(KeyError):
        special.appendix_integral((9, 9, 9), 10.0)
    r = special.appendix_integral((1, 1, 2), 10.0)
    assert r.lo <= r.hi
    assert isinstance(special.appendix_integral((1, 0, 2), 10.0), float)

import math
from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from grhpsi import fields, prime_bounds, residue
from grhpsi.exact import RationalPoly, SturmChain, count_real_roots
from grhpsi.interval import Interval

fracs = st.fractions(min_value=-1000, max_value=1000, max_denominator=50)


@given(fracs, fracs, fracs, fracs)
def test_interval_ops_enclose(a, b, c, d):
    x, y = Interval.exact(a), Interval.exact(b)
    assert (x + y).contains(a + b)
    assert (x - y).contains(a - b)
    assert (x * y).contains(a * b)
    if b != 0:
        assert (x / y).contains(a / b)
    lo, hi = sorted((c, d))
    assert Interval.hull(float(lo), float(hi)).contains(float(lo))


@given(st.floats(min_value=1e-6, max_value=1e6), st.floats(min_value=-50, max_value=50))
def test_log_exp_enclose(v, w):
    from mpmath import exp, log, mp, mpf

    with mp.workdps(40):
        assert Interval(v).log().contains(Fraction(str(log(mpf(v)))))
        assert Interval(w).exp().contains(Fraction(str(exp(mpf(w)))))


@given(st.lists(fracs, min_size=1, max_size=5), st.lists(fracs, min_size=1, max_size=4))
def test_divmod_identity(ca, cb):
    a, b = RationalPoly(ca), RationalPoly(cb)
    assume(not b.is_zero())
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@settings(max_examples=50)
@given(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=7), min_size=1, max_size=6))
def test_sturm_counts_distinct_roots(roots):
    p = RationalPoly.from_roots(roots)
    assert count_real_roots(SturmChain.build(p)) == len(set(roots))


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=-400, max_value=400), st.integers(min_value=2, max_value=400))
def test_quadratic_lambda_is_zeta_times_L(D, n):
    assume(fields.is_fundamental_discriminant(D))
    K = fields.quadratic_field(D)
    pk = fields.prime_power(n)
    want = 0.0
    if pk:
        p, k = pk
        want = math.log(p) * (1 + fields.kronecker(D, p) ** k)
    assert math.isclose(fields.lambda_tilde(K, n), want, abs_tol=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=0, max_value=400), st.integers(min_value=2, max_value=50),
       st.integers(min_value=100, max_value=10**6))
def test_remainder_monotone_in_disc(L, n, N):
    lo, hi = residue.Signature(L, n), residue.Signature(L + 1, n)
    for v in residue.VARIANTS:
        assert residue.remainder(lo, v, N).hi <= residue.remainder(hi, v, N).hi


@given(st.floats(min_value=0, max_value=1e4), st.floats(min_value=0, max_value=100))
def test_norm_bound_monotone(L, kappa):
    a = prime_bounds.norm_bound(L, kappa).norm_bound
    assert a <= prime_bounds.norm_bound(L, kappa + 1).norm_bound
    assert a <= prime_bounds.norm_bound(L + 1, kappa).norm_bound

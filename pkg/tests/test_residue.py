import math

import pytest

from grhpsi import fields, residue
from grhpsi.residue import HALF_LOG2, Signature


def test_parse_variant():
    assert residue.parse_variant("imp2") == ("imp", 2)
    assert residue.parse_variant("bas", 1) == ("bas", 1)
    with pytest.raises(ValueError):
        residue.parse_variant("imp2", 1)
    with pytest.raises(ValueError):
        residue.parse_variant("fast")


def test_remainder_decreases():
    s = Signature(20 * math.log(10), 6)
    for v in residue.VARIANTS:
        a = residue.remainder(s, v, 1000).hi
        b = residue.remainder(s, v, 100000).hi
        assert b < a


def test_improved_beats_basic():
    s = Signature(50 * math.log(10), 10)
    for m in (1, 2):
        assert residue.least_n(s, m, "imp") < residue.least_n(s, m, "bas")


def test_least_n_is_minimal():
    s = Signature(10 * math.log(10), 2)
    for v in residue.VARIANTS:
        N = residue.least_n(s, variant=v)
        assert residue.remainder(s, v, N).hi <= HALF_LOG2
        assert residue.remainder(s, v, N - 1).hi > HALF_LOG2


def test_worst_r2_dominates():
    s = Signature(10 * math.log(10), 6)
    worst = residue.remainder_improved(s, 1, 2000).hi
    for r2 in range(4):
        assert residue.remainder_improved(Signature(s.log_disc, 6, r2), 1, 2000).hi <= worst


def test_bad_inputs():
    s = Signature(5.0, 2)
    with pytest.raises(ValueError):
        residue.remainder_basic(s, 1, 2)
    with pytest.raises(ValueError):
        residue.least_n(s, 1, "bas", target=0)
    with pytest.raises(ValueError):
        residue.weight_W(1, 1, 10)


def test_weight_positive():
    for m in (1, 2):
        for N in (10, 1000):
            for n in (2, 3, N // 2, N - 1):
                assert residue.weight_W_interval(m, n, N).lo > 0
            assert abs(residue.weight_W(m, N, N)) < 1e-15


def test_q_constants():
    rQ, rpQ, rppQ = residue.q_constants()
    assert rQ.contains(math.log(2 * math.pi))
    assert rQ.width < 1e-14 and rpQ.width < 1e-13


@pytest.mark.parametrize("D,h,w,R", [(-4, 1, 4, None), (-3, 1, 6, None), (-7, 1, 2, None), (-23, 3, 2, None),
                                     (5, 1, 2, math.log((1 + 5**0.5) / 2)), (13, 1, 2, math.log((3 + 13**0.5) / 2))])
def test_quadratic_residues(D, h, w, R):
    K = fields.quadratic_field(D)
    r1, r2 = K.r1, K.r2
    val = residue.class_number_formula(r1, r2, h, R if R else 1.0, w, D)
    for v in ("bas1", "imp1"):
        res = residue.log_residue(K, v)
        assert res.residue.contains(val)
        assert res.log_residue.width <= 2 * HALF_LOG2


def test_cubic_field():
    from conftest import FIELDS

    K = fields.load_field_file(FIELDS / "cubic-23.field")
    # h = 1, R = 0.2812... (log of the real root of x^3 - x - 1), w = 2
    R = math.log(1.324717957244746)
    val = residue.class_number_formula(1, 1, 1, R, 2, 23)
    assert residue.log_residue(K, "imp1").residue.contains(val)


def test_refine_r_K_narrows():
    K = fields.quadratic_field(-4)
    base = residue.default_ranges(K).r_K
    ref = residue.refine_r_K(K, 200)
    assert base.contains(ref) and ref.width < base.width
    a = residue.log_residue(K, "imp1")
    b = residue.log_residue(K, "imp1", refine_rk=True)
    assert b.N <= a.N


def test_refine_r_K_for_Q_contains_log_2pi():
    assert residue.refine_r_K(fields.rational_field(), 100).contains(math.log(2 * math.pi))


def test_r_prime_small_exceptions():
    # the two small fields where the generic range argument for r'_K does not apply
    from conftest import FIELDS

    for K in (fields.quadratic_field(-3), fields.load_field_file(FIELDS / "quartic-117.field")):
        assert 2 * K.log_disc - 3.4001 * K.degree + 4 < 0
        r = residue.r_prime_estimate(K)
        assert abs(r).hi <= K.log_disc - 1.415 * K.degree + 4
        assert residue.default_ranges(K).rp_K.contains(r)

import pytest

from grhpsi import fields, prime_bounds as pb


def test_norm_bound_values():
    assert pb.norm_bound(0.0, 0).norm_bound == pytest.approx(1.075**2 * 169, rel=1e-12)
    b = pb.norm_bound(1e5, 0).norm_bound
    assert b >= (1.075 * (1e5 + 13)) ** 2
    assert pb.norm_bound(10.0, 5).norm_bound > pb.norm_bound(10.0, 1).norm_bound
    with pytest.raises(ValueError):
        pb.norm_bound(1.0, -1)


@pytest.mark.parametrize("D", [-4, 5, -163, 8, -23])
@pytest.mark.parametrize("kappa", [0, 1, 3, 5])
def test_degree_one_primes_exist(D, kappa):
    K = fields.quadratic_field(D)
    assert pb.verify_degree_one(K, kappa).ok
    assert pb.verify_degree_one(K, kappa, unramified=True).ok


def test_too_small_bound_fails():
    K = fields.quadratic_field(-163)
    # all primes below 41 are inert in Q(sqrt(-163))
    r = pb.verify_degree_one(K, 0, bound=40)
    assert not r.ok and r.count == 0


def test_euler_phi():
    assert [pb.euler_phi(q) for q in (1, 2, 9, 10, 12, 97)] == [1, 1, 6, 4, 4, 96]


def test_cyclotomic():
    bound, primes = pb.cyclotomic_two_primes(7)
    assert primes == [29, 43] and primes[1] <= bound
    assert all(p % 101 == 1 for p in pb.cyclotomic_two_primes(101)[1])
    with pytest.raises(ValueError):
        pb.cyclotomic_two_primes(4)
    assert len(pb.cyclotomic_range(5, 60)) == 56

"""Norm bounds for small degree-one prime ideals, and the cyclotomic two-primes check."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._kernels import prime_sieve
from .fields import FieldDescriptor, _is_prime, split_prime
from .interval import Interval


class VerificationError(RuntimeError):
    pass


@dataclass(frozen=True)
class PrimeIdealBound:
    L_K: float
    kappa: float
    norm_bound: float


def _lk(log_disc: float) -> Interval:
    return Interval.exact(Fraction("1.075")) * (Interval(log_disc) + 13)


def norm_bound(log_disc: float, kappa: float) -> PrimeIdealBound:
    """(L + sqrt(8 kappa log(L + kappa^(1/3) log kappa)))^2 with L = 1.075 (log d + 13), rounded up."""
    if kappa < 0:
        raise ValueError(f"kappa must be nonnegative, got {kappa}")
    L = _lk(log_disc)
    if kappa == 0:
        b = L * L
    else:
        k = Interval(kappa)
        inner = L + (k.log() / 3).exp() * k.log()
        b = L + (8 * k * inner.log()).max0().sqrt()
        b = b * b
    return PrimeIdealBound(L.hi, float(kappa), b.hi)


def degree_one_bound(K: FieldDescriptor, kappa: float) -> PrimeIdealBound:
    return norm_bound(K.log_disc, kappa)


def unramified_degree_one_bound(K: FieldDescriptor, kappa: float) -> PrimeIdealBound:
    """Variant counting only unramified primes: kappa is replaced by kappa + log d_K."""
    pb = norm_bound(K.log_disc, kappa + K.log_disc)
    return PrimeIdealBound(pb.L_K, float(kappa), pb.norm_bound)


@dataclass(frozen=True)
class DegreeOneCheck:
    ok: bool
    count: int
    witnesses: list  # (p, number of degree-one primes above p)


def verify_degree_one(K: FieldDescriptor, kappa: float, bound: float | None = None,
                      unramified: bool = False) -> DegreeOneCheck:
    """Count degree-one prime ideals of norm <= bound; ok iff the count exceeds kappa."""
    if bound is None:
        f = unramified_degree_one_bound if unramified else degree_one_bound
        bound = f(K, kappa).norm_bound
    count = 0
    wit = []
    for p in prime_sieve(int(math.floor(bound))).tolist():
        rec = split_prime(K, p)
        c = sum(1 for e, f in rec.pairs if f == 1 and (e == 1 or not unramified))
        if c:
            count += c
            wit.append((p, c))
    return DegreeOneCheck(count > kappa, count, wit)


def euler_phi(q: int) -> int:
    if q < 1:
        raise ValueError("phi needs q >= 1")
    out, n, p = q, q, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            out -= out // p
        p += 1
    if n > 1:
        out -= out // n
    return out


def cyclotomic_bound(q: int) -> float:
    return (Interval.exact(Fraction("1.2")) * (Interval(euler_phi(q)) * Interval(q).log()) ** 2).hi


def cyclotomic_two_primes(q: int) -> tuple[float, list[int]]:
    """Bound 1.2 (phi(q) log q)^2 and the first two primes = 1 mod q, which must lie below it."""
    if q < 5:
        raise ValueError(f"q must be >= 5, got {q}")
    bound = cyclotomic_bound(q)
    found = []
    p = q + 1
    while p <= bound:
        if _is_prime(p):
            found.append(p)
            if len(found) == 2:
                return bound, found
        p += q
    raise VerificationError(f"q = {q}: fewer than two primes = 1 mod q below {bound:.6g}")


def cyclotomic_range(q0: int, q1: int):
    """(q, bound, primes) for q0 <= q <= q1."""
    return [(q,) + cyclotomic_two_primes(q) for q in range(q0, q1 + 1)]

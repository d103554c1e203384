"""Truncated sums for log res_{s=1} zeta_K(s) with explicit remainders.

The smoothed sums use the weights W^(m)(n, N), Taylor remainders of
f(x) = 1/(x log x) at N.  The remainder after truncation at N is bounded in
two ways: a basic bound depending on (log d_K, n_K) only, and an improved one
that also uses ranges for three field constants r_K, r'_K, r''_K.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .fields import FieldDescriptor, lambda_multiplicity
from .interval import EULER_GAMMA, LOG_2PI, Interval, as_interval
from .special import exp_integral_e1

HALF_LOG2 = 0.5 * math.log(2)
VARIANTS = ("bas1", "imp1", "bas2", "imp2")


def _c(s: str) -> Interval:
    return Interval.exact(Fraction(s))


@dataclass(frozen=True)
class Signature:
    """(log d_K, n_K) plus r2; r2 = None stands for the worst admissible r2."""

    log_disc: float
    degree: int
    r2: int | None = None

    @property
    def r1(self):
        return None if self.r2 is None else self.degree - 2 * self.r2


def _logdisc(s: Signature) -> Interval:
    # log_disc is itself a rounded float; allow a few ulps either way
    pad = 4 * math.ulp(s.log_disc)
    return Interval(max(0.0, s.log_disc - pad), s.log_disc + pad)


def _sig(field) -> Signature:
    if isinstance(field, Signature):
        return field
    return Signature(field.log_disc, field.degree, field.r2)


def parse_variant(variant: str, m: int | None = None) -> tuple[str, int]:
    """'imp1' -> ('imp', 1); 'imp' with m = 2 -> ('imp', 2)."""
    v = variant.strip().lower()
    if v in VARIANTS:
        kind, mm = v[:3], int(v[3])
        if m is not None and m != mm:
            raise ValueError(f"variant {variant} conflicts with m = {m}")
        return kind, mm
    if v in ("bas", "imp") and m in (1, 2):
        return v, m
    raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


# ---------------------------------------------------------------------------
# constants

@dataclass(frozen=True)
class BoundConstants:
    """Linear forms in (log d_K, n_K) bounding the psi^(m) error terms for K and Q together."""

    m: int
    alpha: Interval
    beta: Interval
    gamma_c: Interval
    delta: Interval
    eta: Interval | None = None


def bound_constants(field, m: int) -> BoundConstants:
    s = _sig(field)
    L, n = _logdisc(s), s.degree
    if m == 1:
        return BoundConstants(
            1,
            _c("0.5375") * L - _c("1.0355") * n + _c("5.4341"),
            Interval(n - 1),
            _c("1.0155") * L - _c("2.1041") * n + _c("10.1799"),
            L - _c("1.415") * n + 4,
        )
    if m == 2:
        return BoundConstants(
            2,
            _c("0.3526") * L - _c("0.8212") * n + _c("4.5007"),
            Interval(n - 1),
            _c("1.0155") * L - _c("2.6041") * n + _c("10.6799"),
            2 * L - _c("2.83") * n + 8,
            L - _c("0.9151") * n + 2,
        )
    raise ValueError(f"m must be 1 or 2, got {m}")


@functools.lru_cache(maxsize=None)
def q_constants() -> tuple[Interval, Interval, Interval]:
    """(r_Q, r'_Q, r''_Q)."""
    from mpmath import diff, mp, zeta

    with mp.workdps(40):
        z2 = float(diff(zeta, 2) / zeta(2))
        z3 = float(diff(zeta, 3) / zeta(3))
    rp = -Interval.around(z2, 4e-16) + EULER_GAMMA + LOG_2PI - 1
    rpp = -Interval.around(z3, 4e-16) + EULER_GAMMA + LOG_2PI - Interval(1.5)
    return LOG_2PI, rp, rpp


@dataclass(frozen=True)
class ParameterRanges:
    r_K: Interval
    rp_K: Interval
    rpp_K: Interval

    def endpoints(self):
        for a in (self.r_K.lo, self.r_K.hi):
            for b in (self.rp_K.lo, self.rp_K.hi):
                for c in (self.rpp_K.lo, self.rpp_K.hi):
                    yield Interval(a), Interval(b), Interval(c)

    def replace_r_K(self, r: Interval) -> "ParameterRanges":
        return ParameterRanges(r, self.rp_K, self.rpp_K)


def default_ranges(field) -> ParameterRanges:
    s = _sig(field)
    L, n = _logdisc(s), s.degree
    r = Interval.hull(-_c("1.0155") * L + _c("2.1042") * n - _c("8.3419"),
                      -_c("0.5") * L + _c("1.2076") * n + 1)
    rp = Interval.hull(-L + _c("1.415") * n, -L + _c("1.9851") * n)
    rpp = Interval.hull(-L + _c("0.9151") * n, -L + _c("1.08") * n)
    return ParameterRanges(r, rp, rpp)


# ---------------------------------------------------------------------------
# remainder bounds

def _check_N(N):
    if not N >= 3:
        raise ValueError(f"N must be >= 3, got {N}")


def _lead(m: int, alpha: Interval, N, y: Interval, sN: Interval, lN: Interval) -> Interval:
    E = exp_integral_e1(0.5 * math.log(N))
    if m == 1:
        return alpha * ((2.5 + y) / (sN * lN) + _c("0.75") * E)
    return alpha * ((_c("4.125") + _c("2.75") * y + y * y) / (sN * lN) + _c("0.9375") * E)


def _prep(N):
    _check_N(N)
    Ni = Interval(N)
    lN = Ni.log()
    return Ni, lN, 1 / lN, Ni.sqrt()


def remainder_basic(field, m: int, N) -> Interval:
    """Enclosure of the basic bound for |R^(m)(N)|; compare its upper end."""
    c = bound_constants(field, m)
    Ni, lN, y, sN = _prep(N)
    y2, y3 = y * y, y * y * y
    out = _lead(m, c.alpha, N, y, sN, lN)
    if m == 1:
        return (out + c.beta * (2 + 3 * y) / Ni + c.gamma_c * (2 * y + y2) / Ni
                + c.delta * (y + y2) / (Ni * Ni))
    return (out + c.beta * (3 + _c("5.5") * y + _c("1.5") * y2) / Ni
            + c.gamma_c * (3 * y + _c("2.5") * y2 + y3) / Ni
            + c.delta * (_c("1.5") * y + 2 * y2 + y3) / (Ni * Ni)
            + c.eta * (y + _c("1.5") * y2 + y3) / (Ni * Ni * Ni))


def _bracket(m, dK, r2, N, y, rr, rp, rpp):
    rQ, rpQ, rppQ = q_constants()
    y2, y3 = y * y, y * y * y
    N2 = N * N
    if m == 1:
        v = (dK * (2 + y - y2) / N + (rr - rQ) * (2 * y + y2) / N
             - r2 * (1 + _c("2.5") * y + y2) / N2 - (rp - rpQ) * (y + y2) / N2)
        return abs(v)
    v = (dK * (6 + 2 * y - _c("4.5") * y2 - 3 * y3) / N + (rr - rQ) * (6 * y + 5 * y2 + 2 * y3) / N
         - 2 * r2 * (3 + _c("5.5") * y + 3 * y2) / N2 - 2 * (rp - rpQ) * (3 * y + 4 * y2 + 2 * y3) / N2
         + dK * (2 + Interval.exact(Fraction(20, 3)) * y + _c("7.5") * y2 + 3 * y3) / (N2 * N)
         + (rpp - rppQ) * (2 * y + 3 * y2 + 2 * y3) / (N2 * N))
    return abs(v) / 2


def _improved_tail(s: Signature, m, r2, Ni, y, ranges):
    dK = s.degree - r2 - 1
    corr = (dK + r2 / (4 * Ni)) * y * y / Ni
    if m == 2:
        corr = corr * (1 + 5 / (y * Ni * Ni))
    worst = None
    for rr, rp, rpp in ranges.endpoints():
        b = _bracket(m, dK, r2, Ni, y, rr, rp, rpp)
        worst = b if worst is None or b.hi > worst.hi else worst
    return corr + worst


def remainder_improved(field, m: int, N, ranges: ParameterRanges | None = None) -> Interval:
    """Enclosure of the improved bound; the bracket is maximized over all range endpoints.

    With an unspecified r2 (a Signature without r2) the worst r2 in [0, n/2]
    is taken, which is what a bound for every field of that degree needs.
    """
    s = _sig(field)
    ranges = ranges or default_ranges(s)
    Ni, lN, y, sN = _prep(N)
    lead = _lead(m, bound_constants(s, m).alpha, N, y, sN, lN)
    r2s = range(s.degree // 2 + 1) if s.r2 is None else (s.r2,)
    best = None
    for r2 in r2s:
        v = _improved_tail(s, m, r2, Ni, y, ranges)
        best = v if best is None or v.hi > best.hi else best
    return lead + best


def remainder(field, variant: str, N, ranges: ParameterRanges | None = None, m: int | None = None) -> Interval:
    kind, m = parse_variant(variant, m)
    if kind == "bas":
        return remainder_basic(field, m, N)
    return remainder_improved(field, m, N, ranges)


def least_n(field, m: int | None = None, variant: str = "bas", target: float = HALF_LOG2,
            ranges: ParameterRanges | None = None, scan: int = 3) -> int:
    """Smallest N >= 3 with the selected remainder bound <= target.

    Exponential bracketing, bisection, and then a downward scan of ``scan``
    consecutive values, since the bound need not be monotone in N.
    """
    if not target > 0:
        raise ValueError("target must be positive")
    kind, m = parse_variant(variant, m)
    ok = lambda N: remainder(field, kind, N, ranges, m).hi <= target
    if ok(3):
        return 3
    hi = 6
    while not ok(hi):
        hi *= 2
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    best, k, misses = hi, hi - 1, 0
    while k >= 3 and misses < scan:
        if ok(k):
            best, misses = k, 0
        else:
            misses += 1
        k -= 1
    return best


# ---------------------------------------------------------------------------
# the truncated sums

def _f_interval(x: Interval, k: int) -> Interval:
    y = 1 / x.log()
    if k == 0:
        return y / x
    if k == 1:
        return -(y + y * y) / (x * x)
    return (2 * y + 3 * y * y + 2 * y * y * y) / (x * x * x)


def weight_W(m: int, n, N) -> float:
    """W^(m)(n, N) for f(x) = 1/(x log x)."""
    return weight_W_interval(m, n, N).mid


def weight_W_interval(m: int, n, N) -> Interval:
    if m not in (1, 2):
        raise ValueError(f"m must be 1 or 2, got {m}")
    if not 1 < n <= N:
        raise ValueError(f"weight needs 1 < n <= N, got n = {n}, N = {N}")
    ni, Ni = as_interval(n), as_interval(N)
    h = ni - Ni
    w = _f_interval(ni, 0) - _f_interval(Ni, 0) - h * _f_interval(Ni, 1)
    if m == 2:
        w = w - h * h * _f_interval(Ni, 2) / 2
    return w


def _weight_inv(n: int, N: int) -> Interval:
    # W for f(x) = 1/x
    ni, Ni = Interval(n), Interval(N)
    return 1 / ni - 1 / Ni + (ni - Ni) / (Ni * Ni)


def _smoothed_difference(K: FieldDescriptor, N: int, wfun) -> Interval:
    """sum_{n <= N} (Lambda_K(n) - Lambda(n)) w(n), ascending n, in intervals."""
    from ._kernels import prime_sieve

    tot = Interval(0.0)
    terms = []
    for p in prime_sieve(int(N)).tolist():
        lp = Interval(p).log()
        q, k = p, 1
        while q <= N:
            c = lambda_multiplicity(K, p, k) - 1
            if c:
                terms.append((q, c, lp))
            q *= p
            k += 1
    terms.sort()
    for q, c, lp in terms:
        tot = tot + c * lp * wfun(q)
    return tot


def r_prime_estimate(K: FieldDescriptor, X: int = 100000) -> Interval:
    """r'_K = -zeta_K'/zeta_K(2) - log d_K + (log 2 pi + gamma - 1) n_K, Dirichlet series cut at X.

    Sanity check only: the tail uses psi(x) <= 1.04 x, which is not proved here.
    """
    from .fields import lambda_table

    tab = lambda_table(K, X)
    n = np.arange(1, X + 1, dtype=np.float64)
    head = math.fsum((tab[1:] / (n * n)).tolist())
    tail = 2 * 1.04 * K.degree / X
    return Interval(head, head + tail) - _logdisc(_sig(K)) + (LOG_2PI + EULER_GAMMA - 1) * K.degree


class RangeInconsistencyError(ValueError):
    """The refined range for r_K misses the a-priori range: bad field data or a bug."""


def refine_r_K(K: FieldDescriptor, N_prime: int, m_inner: int = 1) -> Interval:
    """Enclosure of r_K from a smoothed sum with f(x) = 1/x, truncated at N'."""
    if m_inner != 1:
        raise ValueError("only m_inner = 1 is supported")
    if N_prime < 3:
        raise ValueError(f"N' must be >= 3, got {N_prime}")
    S = _smoothed_difference(K, N_prime, lambda n: _weight_inv(n, N_prime))
    c = bound_constants(K, 1)
    Np = Interval(N_prime)
    R = (4 * c.alpha / Np.sqrt() + 2 * c.beta * (Np.log() + 1) / Np + 2 * c.gamma_c / Np
         + c.delta / (Np * Np))
    R = Interval(-R.hi, R.hi)
    r = S + R - _logdisc(_sig(K)) + (EULER_GAMMA + LOG_2PI) * K.degree - EULER_GAMMA
    try:
        return r.intersect(default_ranges(K).r_K)
    except ValueError:
        raise RangeInconsistencyError(f"refined r_K {r} misses the a-priori range "
                                      f"{default_ranges(K).r_K}") from None


@dataclass(frozen=True)
class ResidueResult:
    N: int
    log_residue: Interval
    residue: Interval
    bound_variant: str
    remainder: float
    ranges: ParameterRanges | None = None


def log_residue(K: FieldDescriptor, variant: str = "imp1", target: float = HALF_LOG2,
                refine_rk: bool = False, m: int | None = None) -> ResidueResult:
    """Rigorous enclosure of log res_{s=1} zeta_K(s) (GRH assumed)."""
    kind, m = parse_variant(variant, m)
    ranges = None
    if kind == "imp":
        ranges = default_ranges(K)
        if refine_rk:
            N0 = least_n(K, m, kind, target, ranges)
            ranges = ranges.replace_r_K(refine_r_K(K, N0))
    N = least_n(K, m, kind, target, ranges)
    S = _smoothed_difference(K, N, lambda n: weight_W_interval(m, n, N))
    bound = remainder(K, kind, N, ranges, m).hi
    lr = S + Interval(-bound, bound)
    return ResidueResult(N, lr, lr.exp(), f"{kind}{m}", bound, ranges)


def class_number_formula(r1: int, r2: int, h: int, R: float, w: int, disc: int) -> float:
    """2^r1 (2 pi)^r2 h R / (w sqrt|d|)."""
    return 2**r1 * (2 * math.pi) ** r2 * h * R / (w * math.sqrt(abs(disc)))


__all__ = [
    "HALF_LOG2", "VARIANTS", "Signature", "BoundConstants", "ParameterRanges", "ResidueResult",
    "bound_constants", "default_ranges", "q_constants", "remainder_basic", "remainder_improved",
    "remainder", "least_n", "weight_W", "weight_W_interval", "refine_r_K", "log_residue",
    "RangeInconsistencyError", "class_number_formula", "parse_variant", "r_prime_estimate",
]

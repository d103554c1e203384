"""Digamma, E1, the kernel 1/(x log x) and a catalogue of its tail integrals."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .interval import EULER_GAMMA, Interval, as_interval

# Bernoulli-number coefficients B_2k / (2k) of the digamma asymptotic series
_DIGAMMA_ASYMPT = [
    Fraction(1, 12), Fraction(-1, 120), Fraction(1, 252), Fraction(-1, 240),
    Fraction(1, 132), Fraction(-691, 32760), Fraction(1, 12),
]
_DIGAMMA_TAIL = Fraction(3617, 8160)  # next coefficient, bounds the truncation
_DIGAMMA_SHIFT = 16.0


def _domain(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def digamma(x) -> Interval:
    """Enclosure of Gamma'/Gamma at x > 0.

    The argument is pushed above 16 with psi(x) = psi(x+1) - 1/x and the
    asymptotic series is summed in interval arithmetic; the first omitted
    term bounds the truncation error.
    """
    xi = as_interval(x)
    _domain(xi.lo > 0, f"digamma needs x > 0, got {x}")
    shift = Interval(0.0)
    z = xi
    while z.lo < _DIGAMMA_SHIFT:
        shift = shift + 1 / z
        z = z + 1
    z2 = z * z
    zp = z2
    acc = z.log() - 1 / (2 * z)
    for c in _DIGAMMA_ASYMPT:
        acc = acc - Interval.exact(c) / zp
        zp = zp * z2
    err = float(_DIGAMMA_TAIL) / zp.lo
    return acc - shift + Interval(-err, err)


def _e1_series(x: float) -> Interval:
    xi = Interval(x)
    acc = -EULER_GAMMA - xi.log()
    term = Interval(1.0)
    k = 1
    while True:
        term = term * xi / k
        t = term / k
        acc = acc + t if k % 2 else acc - t
        k += 1
        if t.hi < 1e-18 * abs(acc.lo):
            # alternating with decreasing terms: next term bounds the tail
            nxt = (term * xi / k / k).hi
            return acc + Interval(-nxt, nxt)


def _e1_cf(x: float) -> float:
    # modified Lentz on E1(x) e^x = 1/(x+1- 1/(x+3- 4/(x+5- ...)))
    tiny = 1e-300
    b = x + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 1000):
        an = -float(i * i)
        b += 2.0
        d = 1.0 / (an * d + b)
        c = b + an / c
        dl = c * d
        h *= dl
        if abs(dl - 1.0) < 1e-17:
            break
    return h * math.exp(-x)


def exp_integral_e1(x) -> Interval:
    """Enclosure of E1(x) = int_1^inf e^(-xt)/t dt for x > 0."""
    x = float(x)
    _domain(x > 0, f"E1 needs x > 0, got {x}")
    if x <= 1.0:
        return _e1_series(x)
    v = _e1_cf(x)
    # the continued fraction converges to full precision well inside this pad
    enc = Interval.around(v, 8e-15 * v)
    return enc.intersect(e1_bracket(x))


def e1_bracket(x: float) -> Interval:
    """Cheap rigorous bracket (1 - 1/x) e^-x / x <= E1(x) <= e^-x / x."""
    ex = Interval(-float(x)).exp() / x
    return Interval((ex * (1 - 1 / Interval(x))).max0().lo, ex.hi)


def kernel_f_derivatives(x: float, order: int = 0) -> float:
    """k-th derivative of f(x) = 1/(x log x), k <= 3, in closed form."""
    _domain(x > 1, f"f needs x > 1, got {x}")
    y = 1.0 / math.log(x)
    if order == 0:
        return y / x
    if order == 1:
        return -(y + y * y) / x**2
    if order == 2:
        return (2 * y + 3 * y**2 + 2 * y**3) / x**3
    if order == 3:
        return -(6 * y + 11 * y**2 + 12 * y**3 + 6 * y**4) / x**4
    raise ValueError(f"order must be 0..3, got {order}")


# -- auxiliary functions of the trivial-zero remainder

def _logs(x: float):
    u = 1.0 / x
    return math.log1p(-u * u), 2.0 * math.atanh(u)


def closed_f(m: int, j: int, x: float) -> float:
    _domain(x >= 1, f"x must be >= 1, got {x}")
    a, b = _logs(x)
    if (m, j) == (1, 1):
        return 0.5 * (x * a + b)
    if (m, j) == (1, 2):
        return 1.0 - 0.5 * (a + x * b)
    if (m, j) == (2, 1):
        return 1.5 - 0.5 * (x * x + 1) * a - x * b
    if (m, j) == (2, 2):
        return -x + x * a + 0.5 * (x * x + 1) * b
    raise ValueError(f"no auxiliary function f_{j}^({m})")


def series_f(m: int, j: int, x: float) -> float:
    """Same functions as closed_f by direct summation of their power series."""
    _domain(x >= 1, f"x must be >= 1, got {x}")
    if (m, j) == (1, 1):
        term = lambda r: x ** (1 - 2 * r) / (2 * r * (2 * r - 1))
        r0 = 1
    elif (m, j) == (1, 2):
        term = lambda r: x ** (2 - 2 * r) / ((2 * r - 1) * (2 * r - 2))
        r0 = 2
    elif (m, j) == (2, 1):
        term = lambda r: x ** (2 - 2 * r) / (r * (2 * r - 1) * (2 * r - 2))
        r0 = 2
    elif (m, j) == (2, 2):
        term = lambda r: x ** (1 - 2 * r) / ((2 * r + 1) * r * (2 * r - 1))
        r0 = 1
    else:
        raise ValueError(f"no auxiliary function f_{j}^({m})")
    terms = []
    r = r0
    while True:
        t = term(r)
        terms.append(t)
        if t < 1e-16 * terms[0] or t == 0.0 or r > 100000:
            break
        r += 1
    return math.fsum(terms)


def lemma_remainder_R(m: int, r1: int, r2: int, x: float) -> float:
    """Trivial-zero remainder R^(m)_{r1,r2}(x) for x >= 3, m in {1, 2}."""
    _domain(x >= 3, f"x must be >= 3, got {x}")
    _domain(r1 >= 0 and r2 >= 0 and r1 + r2 >= 1, f"bad signature ({r1}, {r2})")
    d = r1 + r2 - 1
    lx = math.log(x)
    if m == 1:
        return (-d * x * (lx - 1) + r2 * (lx + 1)
                - (r1 + r2) * closed_f(1, 1, x) - r2 * closed_f(1, 2, x))
    if m == 2:
        return (-d * x * x * (lx - 1.5) + 2 * r2 * x * lx - (r1 + r2) * (lx + 1.5)
                + (r1 + r2) * closed_f(2, 1, x) + r2 * closed_f(2, 2, x))
    raise ValueError(f"m must be 1 or 2, got {m}")


def lemma_remainder_bound(m: int, n: int, x: float) -> float:
    """The simple envelope for |R^(m)| depending only on the degree n."""
    lx = math.log(x)
    if m == 1:
        return (n - 1) * x * lx + (0.5097 / x if n == 1 else 0.0)
    return (n - 1) * x * x * (lx - 0.5) + (lx + 2 if n == 1 else 0.0)


# -- tail integrals of x^a (log x)^b f^(k)(x) over [N, inf)

@dataclass(frozen=True)
class ThetaBracket:
    """Range of an expression containing an unknown theta in (0, 1)."""

    value_at_theta0: float
    value_at_theta1: float

    @property
    def lo(self) -> float:
        return min(self.value_at_theta0, self.value_at_theta1)

    @property
    def hi(self) -> float:
        return max(self.value_at_theta0, self.value_at_theta1)

    def contains(self, v: float, rel: float = 0.0) -> bool:
        pad = rel * max(abs(self.lo), abs(self.hi))
        return self.lo - pad <= v <= self.hi + pad


def _integrals():
    def e1(N):
        return exp_integral_e1(0.5 * math.log(N)).mid

    return {
        (1.5, 0, 2): lambda N, y, t: (2.5 * y + y * y) / math.sqrt(N) + 0.75 * e1(N),
        (1, 0, 2): lambda N, y, t: (2 * y + y * y) / N,
        (0, 0, 2): lambda N, y, t: (y + y * y) / N**2,
        (1, 1, 2): lambda N, y, t: (2 + 3 * y - t * y * y) / N,
        (0, 1, 2): lambda N, y, t: (1 + 1.5 * y + t / 4 * y * y) / N**2,
        (2.5, 0, 3): lambda N, y, t: -(33 / 4 * y + 5.5 * y * y + 2 * y**3) / math.sqrt(N) - 15 / 8 * e1(N),
        (2, 0, 3): lambda N, y, t: -(6 * y + 5 * y * y + 2 * y**3) / N,
        (1, 0, 3): lambda N, y, t: -(3 * y + 4 * y * y + 2 * y**3) / N**2,
        (0, 0, 3): lambda N, y, t: -(2 * y + 3 * y * y + 2 * y**3) / N**3,
        (2, 1, 3): lambda N, y, t: (-6 - 11 * y - 3 * y * y + 2 * t * y * y) / N,
        (1, 1, 3): lambda N, y, t: (-3 - 5.5 * y - 3 * y * y - t / 4 * y * y) / N**2,
        (0, 1, 3): lambda N, y, t: (-2 - 11 / 3 * y - 3 * y * y + 2 * t / 9 * y * y) / N**3,
    }


APPENDIX_INTEGRALS = _integrals()
THETA_FREE = {k for k in APPENDIX_INTEGRALS if k[1] == 0}


def appendix_integral(key, N: float):
    """Value of int_N^inf x^a (log x)^b f^(k)(x) dx for key = (a, b, k).

    Keys with b = 0 have exact closed forms and return a float; the others
    are only known up to an unknown theta in (0, 1) and return a ThetaBracket.
    """
    key = tuple(key)
    if key not in APPENDIX_INTEGRALS:
        raise KeyError(f"unknown integral {key}; known: {sorted(APPENDIX_INTEGRALS)}")
    _domain(N >= 3, f"N must be >= 3, got {N}")
    fn = APPENDIX_INTEGRALS[key]
    y = 1.0 / math.log(N)
    if key in THETA_FREE:
        return fn(N, y, 0.0)
    return ThetaBracket(fn(N, y, 0.0), fn(N, y, 1.0))

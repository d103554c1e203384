"""Outward-rounded real intervals.

Python floats give no control over the FPU rounding mode, so every result is
widened after the fact: one ulp for the correctly rounded operations
(+, -, *, /, sqrt) and two ulps for libm transcendentals, which are only
faithfully rounded.
"""
from __future__ import annotations

import math
from fractions import Fraction

_INF = math.inf


def _down(x: float, k: int = 1) -> float:
    for _ in range(k):
        x = math.nextafter(x, -_INF)
    return x


def _up(x: float, k: int = 1) -> float:
    for _ in range(k):
        x = math.nextafter(x, _INF)
    return x


def _enclose_fraction(q: Fraction) -> tuple[float, float]:
    f = float(q)
    fq = Fraction(f)
    if fq == q:
        return f, f
    return (f, _up(f)) if fq < q else (_down(f), f)


class Interval:
    """Closed interval [lo, hi] of reals, lo <= hi."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        if isinstance(lo, Fraction) or isinstance(lo, int) and abs(lo) > 2**53:
            lo = _enclose_fraction(Fraction(lo))[0]
        if isinstance(hi, Fraction) or isinstance(hi, int) and abs(hi) > 2**53:
            hi = _enclose_fraction(Fraction(hi))[1]
        lo, hi = float(lo), float(hi)
        if math.isnan(lo) or math.isnan(hi) or lo > hi:
            raise ValueError(f"invalid interval [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi

    @classmethod
    def exact(cls, q) -> "Interval":
        """Tightest float interval containing the rational q."""
        return cls(*_enclose_fraction(Fraction(q)))

    @classmethod
    def around(cls, x: float, err: float) -> "Interval":
        return cls(_down(x - err), _up(x + err))

    @classmethod
    def hull(cls, *xs) -> "Interval":
        ivs = [as_interval(x) for x in xs]
        return cls(min(i.lo for i in ivs), max(i.hi for i in ivs))

    # -- queries
    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def width(self) -> float:
        return _up(self.hi - self.lo)

    def contains(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        if isinstance(x, Fraction):
            return Fraction(self.lo) <= x <= Fraction(self.hi)
        return self.lo <= x <= self.hi

    __contains__ = contains

    def intersect(self, other: "Interval") -> "Interval":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            raise ValueError(f"empty intersection of {self} and {other}")
        return Interval(lo, hi)

    def __repr__(self):
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __str__(self):
        return f"[{self.lo:.17g}, {self.hi:.17g}]"

    def __eq__(self, other):
        o = as_interval(other)
        return self.lo == o.lo and self.hi == o.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    # -- arithmetic
    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __pos__(self):
        return self

    def __abs__(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(0.0, max(-self.lo, self.hi))

    def __add__(self, other):
        o = as_interval(other)
        lo, hi = self.lo + o.lo, self.hi + o.hi
        return Interval(_down(lo), _up(hi))

    __radd__ = __add__

    def __sub__(self, other):
        o = as_interval(other)
        return Interval(_down(self.lo - o.hi), _up(self.hi - o.lo))

    def __rsub__(self, other):
        return as_interval(other) - self

    def __mul__(self, other):
        o = as_interval(other)
        p = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(_down(min(p)), _up(max(p)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = as_interval(other)
        if o.lo <= 0 <= o.hi:
            raise ZeroDivisionError(f"division by interval containing 0: {o}")
        p = (self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi)
        return Interval(_down(min(p)), _up(max(p)))

    def __rtruediv__(self, other):
        return as_interval(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out = Interval(1.0)
        base = self
        if k % 2 == 0 and self.lo < 0 < self.hi:
            base = abs(self)
        for _ in range(k):
            out = out * base
        return out

    def sqrt(self) -> "Interval":
        if self.lo < 0:
            raise ValueError("sqrt of negative interval")
        return Interval(max(0.0, _down(math.sqrt(self.lo))), _up(math.sqrt(self.hi)))

    def log(self) -> "Interval":
        if self.lo <= 0:
            raise ValueError("log of nonpositive interval")
        return Interval(_down(math.log(self.lo), 2), _up(math.log(self.hi), 2))

    def exp(self) -> "Interval":
        return Interval(max(0.0, _down(math.exp(self.lo), 2)), _up(math.exp(self.hi), 2))

    def max0(self) -> "Interval":
        return Interval(max(self.lo, 0.0), max(self.hi, 0.0))


def as_interval(x) -> Interval:
    if isinstance(x, Interval):
        return x
    if isinstance(x, Fraction):
        return Interval.exact(x)
    if isinstance(x, int):
        return Interval.exact(Fraction(x))
    return Interval(float(x))


def imax(*xs) -> Interval:
    """Interval enclosing max of the enclosed reals."""
    ivs = [as_interval(x) for x in xs]
    return Interval(max(i.lo for i in ivs), max(i.hi for i in ivs))


LOG_2PI = Interval(_down(math.log(2 * math.pi), 2), _up(math.log(2 * math.pi), 2))
EULER_GAMMA = Interval(_down(0.5772156649015329), _up(0.5772156649015329))

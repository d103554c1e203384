"""Exact rational arithmetic: polynomials, Sturm chains, linear systems.

Rationals are :class:`fractions.Fraction` (always stored reduced).  Polynomials
keep their coefficients in ascending order and never carry trailing zeros.
Sturm chains are stored as primitive integer polynomials; every element is a
positive rational multiple of the classical negated remainder, which leaves
all sign counts unchanged while keeping coefficient growth in check.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, inf
from typing import Iterable, Sequence

try:  # GMP integers make the big Sturm chains an order of magnitude faster
    from gmpy2 import gcd as _bgcd, mpz as _big
except ImportError:  # pragma: no cover
    _bgcd, _big = gcd, int


class SingularMatrixError(ArithmeticError):
    """Raised when an exact linear system has no unique solution."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class RationalPoly:
    """Univariate polynomial with rational coefficients (ascending degree)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "RationalPoly":
        p = cls([lead])
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, RationalPoly):
            other = RationalPoly([other])
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RationalPoly({[str(c) for c in self.coeffs]})"

    def __call__(self, x):
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self):
        return RationalPoly(-c for c in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, RationalPoly):
            other = RationalPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RationalPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, RationalPoly):
            other = RationalPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return RationalPoly([other]) - self

    def __mul__(self, other):
        if not isinstance(other, RationalPoly):
            other = _frac(other)
            return RationalPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = RationalPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other: "RationalPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return RationalPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        db = other.degree
        for k in range(dq, -1, -1):
            c = rem[k + db] / lead
            quot[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[i + k] -= c * b
        return RationalPoly(quot), RationalPoly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self) -> "RationalPoly":
        return RationalPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "RationalPoly":
        return self * (1 / self.lc) if self.coeffs else self

    def compose_linear(self, a, b) -> "RationalPoly":
        """Return p(a*t + b)."""
        out = RationalPoly()
        lin = RationalPoly([b, a])
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def primitive(self) -> tuple[Fraction, list[int]]:
        """Split into (positive content, primitive integer coefficients)."""
        if not self.coeffs:
            return Fraction(0), []
        den = reduce(_lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(gcd, ints, 0)
        return Fraction(g, den), [v // g for v in ints]


def poly_gcd(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    """Monic gcd over Q."""
    while b:
        a, b = b, a % b
    return a.monic() if a else a


# ---------------------------------------------------------------------------
# integer-coefficient helpers used by the Sturm machinery

def _iprim(c: list[int]) -> list[int]:
    g = 0
    for v in c:
        g = _bgcd(g, v)
        if g == 1:
            return c
    return [v // g for v in c] if g > 1 else c


def _ineg_prem(a: list[int], b: list[int]) -> list[int]:
    """Positive multiple of -(a mod b), primitive, for integer polys."""
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    s = 1 if lb > 0 else -1
    mag = abs(lb)
    while len(a) - 1 >= db and a:
        la = a[-1]
        k = len(a) - 1 - db
        a = [mag * v for v in a]
        f = s * la
        for i in range(db + 1):
            a[i + k] -= f * b[i]
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return _iprim([-v for v in a]) if a else []


@dataclass(frozen=True)
class SturmChain:
    """Sturm sequence of a nonzero polynomial (primitive integer form)."""

    sequence: tuple[RationalPoly, ...]
    ints: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, p: RationalPoly) -> "SturmChain":
        if p.is_zero():
            raise ValueError("Sturm chain of the zero polynomial")
        _, c0 = p.primitive()
        c0 = [_big(v) for v in c0]
        chain = [c0]
        if len(c0) > 1:
            chain.append(_iprim([i * v for i, v in enumerate(c0)][1:]))
            while len(chain[-1]) > 1:
                r = _ineg_prem(chain[-2], chain[-1])
                if not r:
                    break
                chain.append(r)
        chain = [[int(v) for v in c] for c in chain]
        return cls(tuple(RationalPoly(c) for c in chain), tuple(tuple(c) for c in chain))

    def __len__(self):
        return len(self.ints)


def _sign_at(c: Sequence[int], x) -> int:
    """Sign of the integer polynomial c at x (rational, inf or -inf)."""
    if not c:
        return 0
    lead = (c[-1] > 0) - (c[-1] < 0)
    if x == inf:
        return lead
    if x == -inf:
        return lead if (len(c) - 1) % 2 == 0 else -lead
    x = _frac(x)
    num, den = x.numerator, x.denominator
    # den > 0, so clearing den^deg keeps the sign: sum c_i num^i den^(d-i)
    acc = c[-1]
    dpow = 1
    for v in reversed(c[:-1]):
        acc = acc * num + v * dpow * den
        dpow *= den
    return (acc > 0) - (acc < 0)


def sturm_sign_changes(chain: SturmChain, at) -> int:
    """Number of sign changes of the chain evaluated at ``at``.

    ``at`` is a rational number or ``math.inf`` / ``-math.inf``.  Zeros are
    skipped, as usual.
    """
    prev = 0
    changes = 0
    for c in chain.ints:
        s = _sign_at(c, at)
        if s == 0:
            continue
        if prev and s != prev:
            changes += 1
        prev = s
    return changes


def count_real_roots(chain: SturmChain, lo=-inf, hi=inf) -> int:
    """Distinct real roots of ``chain.sequence[0]`` in the half-open (lo, hi]."""
    return sturm_sign_changes(chain, lo) - sturm_sign_changes(chain, hi)


def squarefree_decompose(p: RationalPoly) -> list[tuple[RationalPoly, int]]:
    """Yun's square-free decomposition over Q.

    Returns monic, pairwise coprime, square-free factors with multiplicities;
    their product equals ``p`` up to the leading constant.
    """
    if p.is_zero():
        raise ValueError("square-free decomposition of the zero polynomial")
    if p.degree == 0:
        return []
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b // a
        c = d // a if a.degree >= 0 else d
        if a.degree > 0:
            out.append((a.monic(), i))
        i += 1
        d = c - b.derivative()
    return out


def cauchy_root_bound(p: RationalPoly) -> Fraction:
    """Every real root r of p satisfies |r| < the returned bound."""
    lead = abs(p.lc)
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class Certificate:
    """Outcome of an exact nonnegativity decision."""

    ok: bool
    witness: Fraction | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def _negative_point(p: RationalPoly, chain: SturmChain, lo: Fraction, hi: Fraction) -> Fraction:
    """Bisect (lo, hi] (which contains an odd root of p) to a point with p < 0."""
    while True:
        mid = (lo + hi) / 2
        for t in (mid, (lo + mid) / 2, (mid + hi) / 2):
            if p(t) < 0:
                return t
        if count_real_roots(chain, lo, mid) > 0:
            hi = mid
        else:
            lo = mid


def _odd_part(p: RationalPoly) -> tuple[RationalPoly, SturmChain | None]:
    """Product of the odd-multiplicity square-free factors of p, with its Sturm chain."""
    chain = SturmChain.build(p)
    if len(chain.ints[-1]) == 1:
        # gcd(p, p') is constant: p is already square-free
        return p, chain
    odd = RationalPoly([1])
    for f, m in squarefree_decompose(p):
        if m % 2:
            odd = odd * f
    return odd, (SturmChain.build(odd) if odd.degree > 0 else None)


def certify_nonnegative_on_halfline(p: RationalPoly) -> Certificate:
    """Decide exactly whether p(t) >= 0 for every t >= 0.

    The odd-multiplicity part of p must have no root in (0, inf), p(0) must be
    nonnegative and the leading coefficient positive.  On failure the returned
    certificate carries a rational witness t >= 0 with p(t) < 0.
    """
    if p.is_zero():
        return Certificate(True, reason="zero polynomial")
    if p.degree > 0:
        odd, chain = _odd_part(p)
        if chain is not None:
            n_pos = count_real_roots(chain, Fraction(0), inf)
            if n_pos:
                t = _negative_point(p, chain, Fraction(0), cauchy_root_bound(odd))
                return Certificate(False, t, f"{n_pos} odd-multiplicity root(s) in (0, inf)")
    if p(0) < 0:
        return Certificate(False, Fraction(0), "negative at t = 0")
    if p.lc < 0:
        return Certificate(False, cauchy_root_bound(p) + 1, "negative at infinity")
    return Certificate(True, reason="no sign change on [0, inf)")


def certify_positive_on_halfline(p: RationalPoly) -> Certificate:
    """Decide exactly whether p(t) > 0 for every t >= 0."""
    if p.is_zero():
        return Certificate(False, Fraction(0), "zero polynomial")
    if p(0) <= 0:
        return Certificate(False, Fraction(0), "not positive at t = 0")
    chain = SturmChain.build(p)
    if count_real_roots(chain, Fraction(0), inf):
        t = _negative_or_zero_point(p, chain)
        return Certificate(False, t, "root in (0, inf)")
    if p.lc < 0:
        return Certificate(False, cauchy_root_bound(p) + 1, "negative at infinity")
    return Certificate(True, reason="no root on [0, inf)")


def _negative_or_zero_point(p: RationalPoly, chain: SturmChain) -> Fraction:
    lo, hi = Fraction(0), cauchy_root_bound(p)
    while count_real_roots(chain, lo, hi) and hi - lo > Fraction(1, 10**30):
        mid = (lo + hi) / 2
        if p(mid) <= 0:
            return mid
        if count_real_roots(chain, lo, mid):
            hi = mid
        else:
            lo = mid
    return hi


# ---------------------------------------------------------------------------
# linear systems

def solve_linear_system(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Exact solution of a square rational system.

    Rows are scaled to integers and reduced by fraction-free (Bareiss)
    elimination with partial pivoting on exact magnitude; the solution is
    recovered by exact back-substitution and checked against the input.
    """
    n = len(matrix)
    if len(rhs) != n or any(len(r) != n for r in matrix):
        raise ValueError("matrix must be square and match the right-hand side")
    rows = []
    for r, b in zip(matrix, rhs):
        r = [_frac(v) for v in r] + [_frac(b)]
        den = reduce(_lcm, (v.denominator for v in r), 1)
        rows.append([int(v * den) for v in r])
    prev = 1
    for k in range(n):
        piv = max(range(k, n), key=lambda i: abs(rows[i][k]))
        if rows[piv][k] == 0:
            raise SingularMatrixError(f"singular system (no pivot in column {k})")
        rows[k], rows[piv] = rows[piv], rows[k]
        rk = rows[k]
        pk = rk[k]
        for i in range(k + 1, n):
            ri = rows[i]
            a = ri[k]
            for j in range(k + 1, n + 1):
                ri[j] = (pk * ri[j] - a * rk[j]) // prev
            ri[k] = 0
        prev = pk
    x: list[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(rows[i][n]) - sum((rows[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        x[i] = s / rows[i][i]
    for r, b in zip(matrix, rhs):
        if sum((_frac(a) * v for a, v in zip(r, x)), Fraction(0)) != _frac(b):
            raise ArithmeticError("nonzero residual in exact solve")
    return x

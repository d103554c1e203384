"""Majorants of zero weights by Poisson kernels, and their exact certification.

For s > 1/2 put f(s, gamma) = 4(2s - 1)/((2s - 1)^2 + 4 gamma^2).  Given an
even weight g, a table of (s_j, a_j) with g <= F = sum_j a_j f(s_j, .) on the
real line bounds sum over zeros of g by sum_j a_j f_K(s_j), which is explicit
in log d_K, the signature and zeta_K'/zeta_K(s_j).

Everything below is done in the variable t = gamma^2, where F is a rational
function with denominator prod_j ((2 s_j - 1)^2 + 4 t).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import (Certificate, RationalPoly, SingularMatrixError, certify_nonnegative_on_halfline,
                    certify_positive_on_halfline, solve_linear_system)
from .interval import EULER_GAMMA, Interval

SCALE = 10**7  # a_j are rounded up to multiples of 1/SCALE


@dataclass(frozen=True)
class WeightSpec:
    """g(gamma) = sqrt(num / prod_c (c + 4 gamma^2))."""

    tag: str
    num: int
    den: tuple[int, ...]
    lim_gamma2: Fraction | None  # lim gamma^2 g(gamma), when finite and nonzero
    rational: bool  # g itself (not only g^2) is rational in gamma

    def g(self, gamma: float) -> float:
        t = gamma * gamma
        return math.sqrt(self.num / math.prod(c + 4 * t for c in self.den))

    def g_mp(self, gamma):
        from mpmath import sqrt

        t = gamma * gamma
        p = 1
        for c in self.den:
            p = p * (c + 4 * t)
        return sqrt(self.num / p)

    def dg_mp(self, gamma):
        t = gamma * gamma
        return -4 * gamma * self.g_mp(gamma) * sum(1 / (c + 4 * t) for c in self.den)

    def g_exact(self, gamma: Fraction) -> Fraction:
        if not self.rational:
            raise ValueError(f"weight {self.tag} is irrational")
        return Fraction(2) / (1 + 4 * gamma * gamma)

    def dg_exact(self, gamma: Fraction) -> Fraction:
        if not self.rational:
            raise ValueError(f"weight {self.tag} is irrational")
        return Fraction(-16) * gamma / (1 + 4 * gamma * gamma) ** 2


WEIGHTS = {
    "inv_rho": WeightSpec("inv_rho", 4, (1, 1), Fraction(1, 2), True),
    "inv_rho_rho1": WeightSpec("inv_rho_rho1", 16, (1, 9), Fraction(1), False),
    "inv_rho_rho1_rho2": WeightSpec("inv_rho_rho1_rho2", 64, (1, 9, 25), None, False),
}


def weight(tag: str) -> WeightSpec:
    try:
        return WEIGHTS[tag]
    except KeyError:
        raise ValueError(f"unknown weight {tag!r}; expected one of {sorted(WEIGHTS)}") from None


@dataclass(frozen=True)
class ContactScheme:
    """Contact conditions: value at 0 and on upsilon, derivative on upsilon, tail."""

    q: int
    J: int
    upsilon: tuple[Fraction, ...]
    match_at_zero: bool = True
    match_asymptotic: bool = False

    def __post_init__(self):
        if len(self.upsilon) != self.q - 1:
            raise ValueError(f"need q - 1 = {self.q - 1} contact points, got {len(self.upsilon)}")
        n = int(self.match_at_zero) + 2 * len(self.upsilon) + int(self.match_asymptotic)
        if n != self.J:
            raise ValueError(f"{n} conditions for {self.J} unknowns")
        if any(u <= 0 for u in self.upsilon):
            raise ValueError("contact points must be positive")

    @property
    def s(self) -> tuple[Fraction, ...]:
        return tuple(1 + Fraction(j, 2) for j in range(1, self.J + 1))

    @property
    def strictly_increasing(self) -> bool:
        return all(a < b for a, b in zip(self.upsilon, self.upsilon[1:]))


def geometric_scheme(q: int, v, shift, asymptotic: bool) -> ContactScheme:
    """upsilon = {v^i - v + shift : 1 <= i <= q - 1}."""
    v, shift = Fraction(str(v)), Fraction(str(shift))
    ups = tuple(v**i - v + shift for i in range(1, q))
    J = 2 * q if asymptotic else 2 * q - 1
    return ContactScheme(q, J, ups, True, asymptotic)


def default_scheme(tag: str) -> ContactScheme:
    if tag == "inv_rho_rho1":
        return geometric_scheme(40, "1.21", 1, True)
    if tag == "inv_rho_rho1_rho2":
        # 1.27, not 1.21: the published coefficients only fit this ratio
        return geometric_scheme(20, "1.27", "0.75", False)
    if tag == "inv_rho":
        ups = tuple(Fraction(x) for x in ("0.84", "2.04", "4.01", "9.61"))
        return ContactScheme(5, 10, ups, True, True)
    raise ValueError(f"no default scheme for {tag!r}")


@dataclass(frozen=True)
class CoefficientTable:
    weight: str
    s: tuple[Fraction, ...]
    scaled: tuple[int, ...]  # a_j * SCALE
    exact: tuple | None = field(default=None, compare=False)

    @property
    def a(self) -> list[Fraction]:
        return [Fraction(v, SCALE) for v in self.scaled]

    def __len__(self):
        return len(self.scaled)


def kernel_f(s, gamma):
    """f(s, gamma) = 4(2s-1)/((2s-1)^2 + 4 gamma^2); exact for rational input."""
    if not s > 0.5:
        raise ValueError(f"f(s, gamma) needs s > 1/2, got {s}")
    w = 2 * s - 1
    return 4 * w / (w * w + 4 * gamma * gamma)


def _dkernel_f(s, gamma):
    w = 2 * s - 1
    return -32 * w * gamma / (w * w + 4 * gamma * gamma) ** 2


def _ceil_scaled(x: Fraction) -> int:
    return -((-x.numerator * SCALE) // x.denominator)


def _contact_rows(wt: WeightSpec, sch: ContactScheme, conv, g, dg):
    s = [conv(v) for v in sch.s]
    rows, rhs = [], []
    zero = conv(0)
    if sch.match_at_zero:
        rows.append([kernel_f(sj, zero) for sj in s])
        rhs.append(g(zero))
    for u in sch.upsilon:
        u = conv(u)
        rows.append([kernel_f(sj, u) for sj in s])
        rhs.append(g(u))
        rows.append([_dkernel_f(sj, u) for sj in s])
        rhs.append(dg(u))
    if sch.match_asymptotic:
        if wt.lim_gamma2 is None:
            raise ValueError(f"weight {wt.tag} has no finite nonzero gamma^2 limit")
        rows.append([2 * sj - 1 for sj in s])
        rhs.append(conv(wt.lim_gamma2))
    return rows, rhs


def generate_coefficients(wt: WeightSpec | str, sch: ContactScheme, dps: int | None = None) -> CoefficientTable:
    """Solve the contact system and round each a_j up to a multiple of 1e-7.

    Rational weights are solved exactly.  For the others the right-hand side
    is irrational, so the system is solved with mpmath at ``dps`` digits and
    the rounded integers are accepted only once a solve at higher precision
    reproduces them.
    """
    wt = weight(wt) if isinstance(wt, str) else wt
    if len(set(sch.upsilon)) != len(sch.upsilon):
        raise SingularMatrixError("duplicated contact point makes the system singular")
    if wt.rational:
        rows, rhs = _contact_rows(wt, sch, Fraction, wt.g_exact, wt.dg_exact)
        sol = solve_linear_system(rows, rhs)
        return CoefficientTable(wt.tag, sch.s, tuple(_ceil_scaled(x) for x in sol), tuple(sol))
    from mpmath import ceil, lu_solve, matrix, mp, mpf

    def solve(prec):
        with mp.workdps(prec):
            conv = lambda q: mpf(Fraction(q).numerator) / Fraction(q).denominator
            rows, rhs = _contact_rows(wt, sch, conv, wt.g_mp, wt.dg_mp)
            try:
                sol = lu_solve(matrix(rows), matrix(rhs))
            except ZeroDivisionError as e:
                raise SingularMatrixError(str(e)) from None
            return tuple(int(ceil(sol[i] * SCALE)) for i in range(sch.J))

    prec = dps or 60 + 2 * sch.J
    cur = solve(prec)
    for _ in range(6):
        nxt = solve(prec + 60)
        if nxt == cur:
            return CoefficientTable(wt.tag, sch.s, cur)
        prec += 60
        cur = nxt
    raise ArithmeticError("rounded coefficients did not stabilize with increasing precision")


# ---------------------------------------------------------------------------
# exact certification in t = gamma^2, on integer coefficient lists

def _imul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _iprod(polys):
    polys = list(polys) or [[1]]
    while len(polys) > 1:
        polys = [_imul(polys[i], polys[i + 1]) if i + 1 < len(polys) else polys[i]
                 for i in range(0, len(polys), 2)]
    return polys[0]


def _iadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    return [x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)]


def _kernel_factor(s: Fraction):
    """(numerator weight, linear factor) with f(s, .) = weight / factor(t)."""
    w = 2 * s - 1
    p, q = w.numerator, w.denominator
    return 4 * p * q, [p * p, 4 * q * q]


def majorant_polynomials(table: CoefficientTable):
    """Integer polynomials (Nf, D) with F(t) = Nf(t) / (SCALE * D(t))."""
    facs = [_kernel_factor(s) for s in table.s]
    lins = [lf for _, lf in facs]
    D = _iprod(lins)
    Nf = [0]
    for j, ((wj, _), A) in enumerate(zip(facs, table.scaled)):
        if A:
            others = _iprod(lins[:j] + lins[j + 1:])
            Nf = _iadd(Nf, [wj * A * c for c in others])
    while len(Nf) > 1 and Nf[-1] == 0:
        Nf.pop()
    return Nf, D, lins


def certification_polynomial(wt: WeightSpec, table: CoefficientTable) -> tuple[list[int], list[int] | None]:
    """P with g <= F  <=>  P(t) >= 0 on [0, inf) (plus Nf > 0 for square-root weights).

    Returns (P, Nf) where Nf is None for rational weights.
    """
    Nf, D, lins = majorant_polynomials(table)
    if wt.rational:
        # 2/(1+4t) <= Nf/(SCALE D)  <=>  Nf (1+4t) - 2 SCALE D >= 0
        P = _iadd(_imul(Nf, [1, 4]), [-2 * SCALE * c for c in D])
        return P, None
    # Nf^2 prod(c+4t) >= SCALE^2 num D^2, cancelling factors shared by both sides
    den = list(wt.den)
    sq = lins + lins
    for c in list(den):
        for i, lf in enumerate(sq):
            if lf == [c, 4]:
                den.remove(c)
                del sq[i]
                break
    left = _imul(_imul(Nf, Nf), _iprod([[c, 4] for c in den]))
    right = [SCALE * SCALE * wt.num * c for c in _iprod(sq)]
    P = _iadd(left, [-c for c in right])
    while len(P) > 1 and P[-1] == 0:
        P.pop()
    return P, Nf


@dataclass(frozen=True)
class MajorizationCertificate:
    ok: bool
    weight: str
    degree: int
    witness_t: Fraction | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok

    @property
    def witness_gamma(self) -> float | None:
        return None if self.witness_t is None else math.sqrt(float(self.witness_t))


def certify_majorization(wt: WeightSpec | str, table: CoefficientTable) -> MajorizationCertificate:
    """Exact proof (or refutation) of g(gamma) <= F(gamma) for all real gamma."""
    wt = weight(wt) if isinstance(wt, str) else wt
    if not len(table):
        raise ValueError("empty coefficient table")
    P, Nf = certification_polynomial(wt, table)
    if Nf is not None:
        pos = certify_positive_on_halfline(RationalPoly(Nf))
        if not pos.ok:
            return MajorizationCertificate(False, wt.tag, len(P) - 1, pos.witness, "F is not positive: " + pos.reason)
    cert: Certificate = certify_nonnegative_on_halfline(RationalPoly(P))
    return MajorizationCertificate(cert.ok, wt.tag, len(P) - 1, cert.witness, cert.reason)


# ---------------------------------------------------------------------------
# positivity of S(n) = sum_j a_j n^(-s_j)

@dataclass(frozen=True)
class SPositivityReport:
    ok: bool
    alternating: bool
    analytic_threshold: int | None  # all pairs positive for n >= this
    checked_up_to: int  # S(n) > 0 verified exactly for 2 <= n < checked_up_to
    first_failure: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def _s_sign(scaled: Sequence[int], n: int) -> int:
    """Exact sign of sum_j A_j n^(-j/2) (A_j indexed from j = 1)."""
    J = len(scaled)
    H = (J + 1) // 2
    pw = [1]
    for _ in range(H):
        pw.append(pw[-1] * n)
    # n^H * sum = E + O sqrt(n)
    E = sum(A * pw[H - j // 2] for j, A in enumerate(scaled, 1) if j % 2 == 0)
    O = sum(A * pw[H - (j + 1) // 2] for j, A in enumerate(scaled, 1) if j % 2)
    if E >= 0 and O >= 0:
        return 1 if (E or O) else 0
    if E <= 0 and O <= 0:
        return -1
    lhs, rhs = E * E, O * O * n
    if E > 0:
        return (lhs > rhs) - (lhs < rhs)
    return (rhs > lhs) - (rhs < lhs)


def s_value(table: CoefficientTable, n: int) -> float:
    from mpmath import mp, mpf

    with mp.workdps(80):
        return float(sum(mpf(A) / SCALE * mpf(n) ** (-(1 + mpf(j) / 2))
                         for j, A in enumerate(table.scaled, 1)))


def check_S_positivity(table: CoefficientTable, numeric_threshold: int = 10**6) -> SPositivityReport:
    """Decide S(n) > 0 for every integer n >= 2.

    Consecutive pairs a_{2i-1} n^(-s_{2i-1}) + a_{2i} n^(-s_{2i}) are positive
    once sqrt(n) > |a_{2i}| / a_{2i-1}; below that threshold S(n) is checked
    one n at a time, with exact integer arithmetic.
    """
    for j, s in enumerate(table.s, 1):
        if s != 1 + Fraction(j, 2):
            raise ValueError("S(n) pairing needs s_j = 1 + j/2")
    A = table.scaled
    alternating = all((v > 0) if j % 2 else (v < 0) for j, v in enumerate(A, 1))
    thr = 2
    for i in range(0, len(A) - 1, 2):
        p, q = A[i], A[i + 1]
        if p <= 0:
            return SPositivityReport(False, alternating, None, 0, None,
                                     f"pair ({i + 1}, {i + 2}) has nonpositive leading term")
        if q < 0:
            # n > (q/p)^2
            thr = max(thr, (q * q) // (p * p) + 1)
    if len(A) % 2 and A[-1] <= 0:
        return SPositivityReport(False, alternating, None, 0, None, "unpaired last coefficient is not positive")
    if thr > numeric_threshold:
        return SPositivityReport(False, alternating, thr, 0, None,
                                 f"analytic threshold {thr} exceeds the numeric range {numeric_threshold}")
    for n in range(2, thr):
        if _s_sign(A, n) <= 0:
            return SPositivityReport(False, alternating, thr, n, n, f"S({n}) <= 0")
    return SPositivityReport(True, alternating, thr, thr)


# ---------------------------------------------------------------------------
# the linear bound in log d_K and n_K

@dataclass(frozen=True)
class LinearBound:
    c_disc: float
    c_deg: float
    c_const: float

    def __call__(self, log_disc: float, n: int) -> float:
        return self.c_disc * log_disc + self.c_deg * n + self.c_const


# psi(b/4) = rational + c_gamma*gamma + c_pi*pi + c_log2*log 2 for b = 1..4
_PSI_QUARTER = {
    1: (Fraction(0), Fraction(-1), Fraction(-1, 2), Fraction(-3)),
    2: (Fraction(0), Fraction(-1), Fraction(0), Fraction(-2)),
    3: (Fraction(0), Fraction(-1), Fraction(1, 2), Fraction(-3)),
    4: (Fraction(0), Fraction(-1), Fraction(0), Fraction(0)),
}


def digamma_quarter(x: Fraction) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Exact form of psi(x) for x in (1/4) Z, x > 0, as (rat, c_gamma, c_pi, c_log2)."""
    k = x * 4
    if k.denominator != 1 or k <= 0:
        raise ValueError(f"{x} is not a positive multiple of 1/4")
    k = int(k)
    b = (k - 1) % 4 + 1
    rat, cg, cp, cl = _PSI_QUARTER[b]
    base = Fraction(b, 4)
    for i in range((k - b) // 4):
        rat += 1 / (base + i)
    return rat, cg, cp, cl


def _quarter_combination(coeffs, xs, dps: int = 120) -> Interval:
    """Enclosure of sum a_i psi(x_i).

    The a_i are huge with cancelling signs, so the exact coordinates are
    combined in mpmath interval arithmetic before dropping to doubles.
    """
    from mpmath import iv

    tot = [Fraction(0)] * 4
    for a, x in zip(coeffs, xs):
        for i, v in enumerate(digamma_quarter(x)):
            tot[i] += a * v
    old = iv.dps
    iv.dps = dps
    try:
        q = lambda f: iv.mpf(f.numerator) / f.denominator
        v = q(tot[0]) + q(tot[1]) * iv.euler + q(tot[2]) * iv.pi + q(tot[3]) * iv.log(2)
        lo, hi = float(v.a), float(v.b)
    finally:
        iv.dps = old
    # float() rounds to nearest; one step outward restores the enclosure
    return Interval(math.nextafter(lo, -math.inf), math.nextafter(hi, math.inf))


@dataclass(frozen=True)
class DerivedBound:
    bound: LinearBound
    sum_a: Fraction
    sum_poles: Fraction
    sum_digamma_half: Interval  # sum a_j psi(s_j / 2)
    sum_digamma_half1: Interval  # sum a_j psi((s_j + 1) / 2)


def _round_up(x: float, digits: int) -> float:
    k = 10**digits
    return math.ceil(x * k - 1e-9) / k


def derived_linear_bound(table: CoefficientTable, s_report: SPositivityReport | None = None,
                         digits: int = 4) -> DerivedBound:
    """Coefficients of log d_K, n_K and 1 in the bound sum_j a_j f_K(s_j).

    The zeta_K'/zeta_K(s_j) terms are dropped, which needs S(n) > 0; the
    signature enters through (n - r2) psi(s/2) + r2 psi((s+1)/2) and the worst
    r2 in [0, n/2] is taken.
    """
    rep = s_report if s_report is not None else check_S_positivity(table)
    if not rep.ok:
        raise ValueError(f"S(n) positivity not established ({rep.reason}); refusing to drop the zeta'/zeta terms")
    a = table.a
    sum_a = sum(a, Fraction(0))
    sum_poles = sum((aj * (2 / s + 2 / (s - 1)) for aj, s in zip(a, table.s)), Fraction(0))
    A = _quarter_combination(a, [s / 2 for s in table.s])
    B = _quarter_combination(a, [(s + 1) / 2 for s in table.s])
    logpi = Interval(math.log(math.pi)) + Interval(-4.5e-16, 4.5e-16)
    worst = Interval(max(A.hi, ((A + B) / 2).hi))
    c_deg = (worst - Interval.exact(sum_a) * logpi).hi
    lb = LinearBound(_round_up(Interval.exact(sum_a).hi, digits), _round_up(c_deg, digits),
                     _round_up(Interval.exact(sum_poles).hi, digits))
    return DerivedBound(lb, sum_a, sum_poles, A, B)


def zeta_majorant_value(table: CoefficientTable, dps: int = 90) -> float:
    """sum_j a_j f_Q(s_j), the bound the table gives for the Riemann zeta function."""
    from mpmath import digamma, diff, log, mp, mpf, pi, zeta

    with mp.workdps(dps):
        tot = mpf(0)
        for A, s in zip(table.scaled, table.s):
            sm = mpf(s.numerator) / s.denominator
            fq = 2 * diff(zeta, sm) / zeta(sm) - log(pi) + 2 / sm + 2 / (sm - 1) + digamma(sm / 2)
            tot += mpf(A) / SCALE * fq
        return float(tot)


# ---------------------------------------------------------------------------
# sums over the zeros of the Riemann zeta function

def zero_count_error(t: float) -> float:
    """Bound for |N(t) - t/(2 pi) log(t/(2 pi e)) - 7/8|, valid for t >= e.

    Coefficientwise maximum of the published Rosser and Trudgian bounds.
    """
    return 0.137 * math.log(t) + 0.443 * math.log(math.log(t)) + 2.510 + 0.2 / t


def _smooth_count(t):
    from mpmath import e, log, pi

    return t / (2 * pi) * log(t / (2 * pi * e)) + 0.875


@dataclass(frozen=True)
class ZeroSum:
    partial: float
    tail: Interval
    count: int
    T: float

    @property
    def total(self) -> Interval:
        return Interval(self.partial) + self.tail


def zeta_zero_sum(zeros, wt: WeightSpec | str) -> ZeroSum:
    """sum over all nontrivial zeros rho of g(Im rho), from the zeros with Im > 0.

    ``zeros`` must be the complete list of the first ordinates.  Beyond the
    last one, T, partial summation against N(t) = (t/2pi) log(t/2pi e) + 7/8
    +- zero_count_error(t), anchored at the exact count N(T) = len(zeros),
    bounds the rest.
    """
    from mpmath import diff, inf, mp, mpf, quad

    wt = weight(wt) if isinstance(wt, str) else wt
    zs = [float(z) for z in zeros]
    if any(z <= 0 for z in zs) or any(b <= a for a, b in zip(zs, zs[1:])):
        raise ValueError("zeros must be positive and strictly ascending")
    partial = 2.0 * math.fsum(wt.g(z) for z in zs)
    n = len(zs)
    T = zs[-1] if zs else 14.0
    with mp.workdps(30):
        h = lambda t: 2 * wt.g_mp(t)
        dh = lambda t: 2 * wt.dg_mp(t)
        Tm = mpf(T)
        pts = [Tm, 2 * Tm, 10 * Tm, 100 * Tm, inf]
        dM = lambda t: mp.log(t / (2 * mp.pi)) / (2 * mp.pi)
        main = h(Tm) * (_smooth_count(Tm) - n) + quad(lambda t: h(t) * dM(t), pts)
        err = quad(lambda t: zero_count_error(t) * (-dh(t)), pts)
    main, err = float(main), float(err)
    # pad for quadrature error, far below the count error term
    pad = 1e-9 * abs(err) + 1e-18
    return ZeroSum(partial, Interval(main - err - pad, main + err + pad), n, T)


# ---------------------------------------------------------------------------
# table files: "j s_j a_j*1e7" per line, header "# weight <tag>"

def format_table(table: CoefficientTable) -> str:
    out = [f"# weight {table.weight}"]
    out += [f"{j} {s} {A}" for j, (s, A) in enumerate(zip(table.s, table.scaled), 1)]
    return "\n".join(out) + "\n"


def parse_table(text: str, default_weight: str | None = None) -> CoefficientTable:
    wtag = default_weight
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "weight":
                wtag = parts[1]
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 'j s_j a_j*1e7', got {raw!r}")
        try:
            rows.append((int(parts[0]), Fraction(parts[1]), int(parts[2])))
        except ValueError:
            raise ValueError(f"line {lineno}: bad number in {raw!r}") from None
    if wtag is None:
        raise ValueError("table has no '# weight <tag>' header")
    weight(wtag)
    rows.sort()
    if [r[0] for r in rows] != list(range(1, len(rows) + 1)):
        raise ValueError("table indices must be 1..J without gaps")
    return CoefficientTable(wtag, tuple(r[1] for r in rows), tuple(r[2] for r in rows))


def read_table(path, default_weight: str | None = None) -> CoefficientTable:
    with open(path) as fh:
        return parse_table(fh.read(), default_weight)


def write_table(path, table: CoefficientTable) -> None:
    with open(path, "w") as fh:
        fh.write(format_table(table))


def reference_table(tag: str) -> CoefficientTable:
    """The published coefficient table for a weight, shipped as package data."""
    from importlib.resources import files

    name = {"inv_rho_rho1": "rho_rho1", "inv_rho_rho1_rho2": "rho_rho1_rho2", "inv_rho": "inv_rho"}[tag]
    return parse_table(files("grhpsi.data").joinpath(f"{name}.coef").read_text())

"""Number field descriptors and the generalized von Mangoldt function.

A field is described by its degree, discriminant and signature plus one source
of splitting data: the rationals, a quadratic field given by its fundamental
discriminant, a monic defining polynomial (Dedekind-Kummer), or an explicit
table of (e, f) pairs per prime.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

SOURCES = ("rational", "quadratic", "monogenic", "table")


class FieldError(ValueError):
    """Invalid or inconsistent field data."""


class IndexDivisorError(FieldError):
    """p may divide the index [O_K : Z[theta]]; its splitting must be tabulated."""

    def __init__(self, p: int):
        super().__init__(f"prime {p} may divide the index of the defining polynomial; "
                         f"supply an explicit table entry for {p}")
        self.p = p


@dataclass(frozen=True)
class SplittingRecord:
    p: int
    pairs: tuple[tuple[int, int], ...]  # (e, f) for each prime above p

    @property
    def degree(self) -> int:
        return sum(e * f for e, f in self.pairs)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, k) with n = p^k, or None."""
    if n < 2:
        return None
    for k in range(n.bit_length(), 0, -1):
        r = round(n ** (1.0 / k))
        for c in (r - 1, r, r + 1):
            if c >= 2 and c**k == n and _is_prime(c):
                return c, k
    return None


def kronecker(D: int, p: int) -> int:
    """Kronecker symbol (D | p) for a prime p."""
    if p == 2:
        if D % 2 == 0:
            return 0
        return 1 if D % 8 in (1, 7) else -1
    r = pow(D % p, (p - 1) // 2, p)
    return 0 if r == 0 else (1 if r == 1 else -1)


def is_fundamental_discriminant(D: int) -> bool:
    if D in (0, 1):
        return False
    if D % 4 == 1:
        return _squarefree(D)
    if D % 4 == 0:
        return D // 4 % 4 in (2, 3) and _squarefree(D // 4)
    return False


def _squarefree(n: int) -> bool:
    n = abs(n)
    q = 2
    while q * q <= n:
        if n % (q * q) == 0:
            return False
        while n % q == 0:
            n //= q
        q += 1
    return True


# ---------------------------------------------------------------------------
# polynomials over F_p as ascending coefficient lists, no trailing zeros

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, p):
    return _trim([c % p for c in a])


def _pdivmod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 1)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        k = len(a) - 1 - db
        q[k] = c
        for i, v in enumerate(b):
            a[i + k] = (a[i + k] - c * v) % p
        _trim(a)
    return _trim(q), a


def _pmonic(a, p):
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _pgcd(a, b, p):
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    return _pmonic(a, p) if a else a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, p)


def _psub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _pderiv(a, p):
    return _trim([i * c % p for i, c in enumerate(a)][1:])


def _powmod(a, e, g, p):
    result = [1]
    base = _pdivmod(a, g, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, p), g, p)[1]
        base = _pdivmod(_pmul(base, base, p), g, p)[1]
        e >>= 1
    return result


def squarefree_mod_p(f, p) -> list[tuple[list[int], int]]:
    """Square-free decomposition of a monic f over F_p as (factor, multiplicity)."""
    out = []
    c = _pgcd(f, _pderiv(f, p), p) if _pderiv(f, p) else list(f)
    w = _pdivmod(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = _pgcd(w, c, p)
        fac = _pdivmod(w, y, p)[0]
        if len(fac) > 1:
            out.append((_pmonic(fac, p), i))
        i += 1
        w = y
        c = _pdivmod(c, y, p)[0]
    if len(c) > 1:
        # c is a p-th power: take the p-th root of each coefficient (Frobenius is the identity on F_p)
        root = c[::p]
        out.extend((g, m * p) for g, m in squarefree_mod_p(_pmonic(root, p), p))
    return out


def distinct_degree_degrees(g, p) -> list[int]:
    """Degrees of the irreducible factors of a square-free monic g over F_p."""
    degs = []
    i = 1
    h = [0, 1]
    while len(g) - 1 >= 2 * i:
        h = _powmod(h, p, g, p)
        d = _pgcd(g, _psub(h, [0, 1], p), p)
        if len(d) > 1:
            degs.extend([i] * ((len(d) - 1) // i))
            g = _pdivmod(g, d, p)[0]
            h = _pdivmod(h, g, p)[1]
        i += 1
    if len(g) > 1:
        degs.append(len(g) - 1)
    return degs


def poly_discriminant(coeffs: Iterable[int]) -> int:
    import sympy

    x = sympy.Symbol("x")
    return int(sympy.discriminant(sympy.Poly(list(reversed(list(coeffs))), x)))


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldDescriptor:
    degree: int
    log_disc: float
    r1: int
    r2: int
    source: str = "rational"
    disc: int | None = None
    D: int | None = None
    poly: tuple[int, ...] | None = None
    table: dict = field(default_factory=dict, compare=False)
    name: str = ""
    _memo: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if self.source not in SOURCES:
            raise FieldError(f"unknown source {self.source!r}; expected one of {SOURCES}")
        if self.degree < 1:
            raise FieldError(f"degree must be positive, got {self.degree}")
        if self.r1 < 0 or self.r2 < 0:
            raise FieldError("r1 and r2 must be nonnegative")
        if self.r1 + 2 * self.r2 != self.degree:
            raise FieldError(f"signature violates r1 + 2*r2 = degree ({self.r1} + 2*{self.r2} != {self.degree})")
        if self.log_disc < 0:
            raise FieldError("log_disc must be nonnegative")
        if self.disc is not None:
            if self.disc <= 0:
                raise FieldError("disc must be the positive absolute discriminant")
            ld = math.log(self.disc)
            if abs(ld - self.log_disc) > 4 * math.ulp(max(ld, 1.0)):
                raise FieldError(f"log_disc {self.log_disc} != log(disc) = {ld}")
        if self.source == "rational":
            if self.degree != 1 or self.log_disc != 0:
                raise FieldError("rational source needs degree 1 and disc 1")
        elif self.source == "quadratic":
            if self.degree != 2 or self.D is None:
                raise FieldError("quadratic source needs degree 2 and a discriminant D")
            if not is_fundamental_discriminant(self.D):
                raise FieldError(f"D = {self.D} is not a fundamental discriminant")
            if (self.D > 0) != (self.r1 == 2):
                raise FieldError(f"signature ({self.r1}, {self.r2}) inconsistent with sign of D = {self.D}")
            if self.disc is not None and self.disc != abs(self.D):
                raise FieldError(f"disc {self.disc} != |D| = {abs(self.D)}")
        elif self.source == "monogenic":
            if not self.poly or len(self.poly) != self.degree + 1:
                raise FieldError("monogenic source needs a polynomial of the field degree")
            if self.poly[-1] != 1:
                raise FieldError("the defining polynomial must be monic")
            pd = abs(poly_discriminant(self.poly))
            if pd == 0:
                raise FieldError("the defining polynomial is not separable")
            if self.disc is not None:
                q, r = divmod(pd, self.disc)
                if r or math.isqrt(q) ** 2 != q:
                    raise FieldError(f"disc(poly)/disc = {pd}/{self.disc} is not a square integer")
            self._memo["poly_disc"] = pd
        for p, pairs in self.table.items():
            if sum(e * f for e, f in pairs) != self.degree:
                raise FieldError(f"table entry for {p}: sum of e*f != degree {self.degree}")

    @property
    def d_K(self) -> int:
        return self.r1 + self.r2 - 1

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def index_suspect(self, p: int) -> bool:
        pd = self._memo.get("poly_disc")
        if pd is None:
            return False
        q = pd // self.disc if self.disc is not None else pd
        return q % (p * p) == 0


def rational_field() -> FieldDescriptor:
    return FieldDescriptor(1, 0.0, 1, 0, "rational", disc=1, name="Q")


def quadratic_field(D: int, name: str = "") -> FieldDescriptor:
    r1, r2 = (2, 0) if D > 0 else (0, 1)
    return FieldDescriptor(2, math.log(abs(D)), r1, r2, "quadratic", disc=abs(D), D=D,
                           name=name or f"Q(sqrt({D}))")


def split_prime(K: FieldDescriptor, p: int) -> SplittingRecord:
    """(e, f) pairs of the primes of K above the rational prime p."""
    memo = K._memo.setdefault("split", {})
    rec = memo.get(p)
    if rec is None:
        rec = SplittingRecord(p, tuple(sorted(_split(K, p))))
        memo[p] = rec
    return rec


def _split(K: FieldDescriptor, p: int):
    if p in K.table:
        return [tuple(t) for t in K.table[p]]
    if K.source == "rational":
        return [(1, 1)]
    if K.source == "quadratic":
        k = kronecker(K.D, p)
        return [(1, 1), (1, 1)] if k == 1 else ([(1, 2)] if k == -1 else [(2, 1)])
    if K.source == "monogenic":
        if K.index_suspect(p):
            raise IndexDivisorError(p)
        f = _pmod(list(K.poly), p)
        pairs = []
        for g, mult in squarefree_mod_p(f, p):
            pairs.extend((mult, d) for d in distinct_degree_degrees(g, p))
        return pairs
    raise FieldError(f"no splitting data for p = {p} in the table")


def lambda_tilde(K: FieldDescriptor, n: int) -> float:
    """Coefficient of n^-s in -zeta_K'/zeta_K."""
    if n < 1:
        raise ValueError("n must be positive")
    pk = prime_power(n)
    if pk is None:
        return 0.0
    p, k = pk
    return sum(f for _, f in split_prime(K, p).pairs if k % f == 0) * math.log(p)


def lambda_multiplicity(K: FieldDescriptor, p: int, k: int) -> int:
    """Lambda_K(p^k) / log p."""
    return sum(f for _, f in split_prime(K, p).pairs if k % f == 0)


def lambda_table(K: FieldDescriptor, X: int, primes=None) -> np.ndarray:
    """Array L with L[n] = Lambda_K(n) for 0 <= n <= X."""
    from ._kernels import prime_sieve

    out = np.zeros(X + 1, dtype=np.float64)
    if primes is None:
        primes = prime_sieve(X)
    for p in primes.tolist():
        lp = math.log(p)
        rec = split_prime(K, p)
        q, k = p, 1
        while q <= X:
            c = sum(f for _, f in rec.pairs if k % f == 0)
            if c:
                out[q] = c * lp
            q *= p
            k += 1
    return out


def von_mangoldt_table(X: int) -> np.ndarray:
    return lambda_table(rational_field(), X)


# ---------------------------------------------------------------------------
# descriptor files

def _ints(s: str) -> tuple[int, ...]:
    return tuple(int(t) for t in s.replace(" ", "").split(",") if t)


def load_field(text: str) -> FieldDescriptor:
    """Parse a field descriptor record (see README for the grammar)."""
    kv: dict[str, str] = {}
    table: dict[int, list[tuple[int, int]]] = {}
    in_table = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if in_table and ":" in line and "=" not in line:
            ps, rest = line.split(":", 1)
            try:
                p = int(ps)
                pairs = []
                for item in rest.split(","):
                    e, f = item.strip().split("^")
                    pairs.append((int(e), int(f)))
            except ValueError:
                raise FieldError(f"line {lineno}: bad table entry {raw!r}") from None
            if not _is_prime(p):
                raise FieldError(f"line {lineno}: table key {p} is not prime")
            table[p] = pairs
            continue
        if line.rstrip(":").strip() == "table":
            in_table = True
            continue
        if "=" not in line:
            raise FieldError(f"line {lineno}: expected key = value, got {raw!r}")
        k, v = (s.strip() for s in line.split("=", 1))
        kv[k.lower()] = v
    try:
        degree = int(kv["degree"])
        r1 = int(kv["r1"])
        r2 = int(kv["r2"])
    except KeyError as e:
        raise FieldError(f"missing key {e.args[0]!r}") from None
    except ValueError as e:
        raise FieldError(f"bad integer: {e}") from None
    source = kv.get("source", "table" if table else "")
    if not source:
        raise FieldError("missing key 'source'")
    disc = None
    if "disc" in kv:
        d = int(kv["disc"])
        if d < 0 and r2 % 2 == 0:
            raise FieldError(f"negative discriminant needs r2 odd (r2 = {r2})")
        if d > 0 and r2 % 2 == 1:
            raise FieldError(f"positive discriminant needs r2 even (r2 = {r2})")
        disc = abs(d)
        log_disc = math.log(disc)
    elif "log_disc" in kv:
        log_disc = float(kv["log_disc"])
    else:
        raise FieldError("need 'disc' or 'log_disc'")
    D = int(kv["d"]) if "d" in kv else None
    poly = _ints(kv["poly"]) if "poly" in kv else None
    return FieldDescriptor(degree, log_disc, r1, r2, source, disc=disc, D=D, poly=poly,
                           table=table, name=kv.get("name", ""))


def load_field_file(path) -> FieldDescriptor:
    with open(path) as fh:
        return load_field(fh.read())

"""Hot loops, compiled with numba when available.

Set GRHPSI_DISABLE_NUMBA=1 to force the pure numpy implementations (also used
automatically when numba cannot be imported).  Both paths are always defined
under the ``nb_`` / ``np_`` prefixes so they can be compared directly.
"""
from __future__ import annotations

import math
import os

import numpy as np

JIT_OPTIONS = {"nogil": True, "cache": True}

_disabled = os.environ.get("GRHPSI_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")
try:
    if _disabled:
        raise ImportError
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

BACKEND = "numba" if HAVE_NUMBA else "numpy"
TWO_PI = 2.0 * math.pi


# -- prime sieve -------------------------------------------------------------

@njit(**JIT_OPTIONS)
def _nb_sieve_mask(n):
    mark = np.ones(n + 1, dtype=np.bool_)
    mark[0] = False
    if n >= 1:
        mark[1] = False
    i = 2
    while i * i <= n:
        if mark[i]:
            for j in range(i * i, n + 1, i):
                mark[j] = False
        i += 1
    return mark


def np_prime_sieve(n: int) -> np.ndarray:
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    mark = np.ones(n + 1, dtype=bool)
    mark[:2] = False
    mark[4::2] = False
    for i in range(3, math.isqrt(n) + 1, 2):
        if mark[i]:
            mark[i * i::2 * i] = False
    return np.flatnonzero(mark).astype(np.int64)


def nb_prime_sieve(n: int) -> np.ndarray:
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    return np.flatnonzero(_nb_sieve_mask(n)).astype(np.int64)


# -- smoothed prime sums -----------------------------------------------------

@njit(**JIT_OPTIONS)
def nb_power_weighted_sum(idx, vals, x, m):
    """Neumaier-compensated sum of vals[i] * (x - idx[i])^m in index order."""
    s = 0.0
    c = 0.0
    for i in range(idx.shape[0]):
        n = idx[i]
        if n > x:
            break
        t = vals[i] * (x - n) ** m
        u = s + t
        if abs(s) >= abs(t):
            c += (s - u) + t
        else:
            c += (t - u) + s
        s = u
    return s + c


def np_power_weighted_sum(idx, vals, x, m):
    k = int(np.searchsorted(idx, x, side="right"))
    terms = vals[:k] * (x - idx[:k]) ** m
    return math.fsum(terms.tolist())


# -- Riemann-Siegel Z --------------------------------------------------------

@njit(**JIT_OPTIONS)
def _nb_theta(t):
    return (t / 2.0 * math.log(t / TWO_PI) - t / 2.0 - math.pi / 8.0
            + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t**3) + 31.0 / (80640.0 * t**5))


@njit(**JIT_OPTIONS)
def _nb_z1(t, coef):
    tau = math.sqrt(t / TWO_PI)
    m = int(tau)
    th = _nb_theta(t)
    s = 0.0
    for n in range(1, m + 1):
        s += math.cos(th - t * math.log(n)) / math.sqrt(n)
    s *= 2.0
    x = tau - m - 0.5
    r = 0.0
    tk = 1.0
    for k in range(coef.shape[0]):
        acc = 0.0
        for i in range(coef.shape[1] - 1, -1, -1):
            acc = acc * x + coef[k, i]
        r += acc * tk
        tk /= tau
    sign = 1.0 if (m - 1) % 2 == 0 else -1.0
    return s + sign * r / math.sqrt(tau)


@njit(**JIT_OPTIONS)
def nb_siegel_z(ts, coef):
    out = np.empty(ts.shape[0])
    for i in range(ts.shape[0]):
        out[i] = _nb_z1(ts[i], coef)
    return out


def np_theta(t):
    t = np.asarray(t, dtype=np.float64)
    return (t / 2 * np.log(t / TWO_PI) - t / 2 - math.pi / 8
            + 1 / (48 * t) + 7 / (5760 * t**3) + 31 / (80640 * t**5))


def np_siegel_z(ts, coef, chunk: int = 2048):
    ts = np.asarray(ts, dtype=np.float64)
    out = np.empty(ts.shape[0])
    for a in range(0, ts.shape[0], chunk):
        t = ts[a:a + chunk]
        tau = np.sqrt(t / TWO_PI)
        m = tau.astype(np.int64)
        th = np_theta(t)
        M = int(m.max()) if m.size else 0
        n = np.arange(1, M + 1, dtype=np.float64)
        ph = th[:, None] - t[:, None] * np.log(n)[None, :]
        terms = np.cos(ph) / np.sqrt(n)[None, :]
        terms[n[None, :] > m[:, None]] = 0.0
        s = 2.0 * terms.sum(axis=1)
        x = tau - m - 0.5
        r = np.zeros_like(t)
        tk = np.ones_like(t)
        for k in range(coef.shape[0]):
            r += np.polyval(coef[k, ::-1], x) * tk
            tk = tk / tau
        sign = np.where((m - 1) % 2 == 0, 1.0, -1.0)
        out[a:a + chunk] = s + sign * r / np.sqrt(tau)
    return out


@njit(**JIT_OPTIONS)
def nb_refine_roots(lo, hi, flo, fhi, coef, tol):
    """Illinois regula falsi on each sign-change bracket [lo[i], hi[i]]."""
    out = np.empty(lo.shape[0])
    for i in range(lo.shape[0]):
        a, b, fa, fb = lo[i], hi[i], flo[i], fhi[i]
        side = 0
        for _ in range(200):
            c = (a * fb - b * fa) / (fb - fa)
            if not (a < c < b):
                c = 0.5 * (a + b)
            fc = _nb_z1(c, coef)
            if fc == 0.0:
                a = b = c
                break
            if (fc > 0) == (fb > 0):
                b, fb = c, fc
                if side == -1:
                    fa *= 0.5
                side = -1
            else:
                a, fa = c, fc
                if side == 1:
                    fb *= 0.5
                side = 1
            if b - a < max(tol, 4e-16 * b):
                break
        out[i] = 0.5 * (a + b)
    return out


def np_refine_roots(lo, hi, flo, fhi, coef, tol):
    a, b = lo.astype(np.float64).copy(), hi.astype(np.float64).copy()
    fa, fb = flo.astype(np.float64).copy(), fhi.astype(np.float64).copy()
    side = np.zeros(a.shape[0], dtype=np.int64)
    for _ in range(200):
        live = (b - a) >= np.maximum(tol, 4e-16 * b)
        if not live.any():
            break
        c = (a * fb - b * fa) / (fb - fa)
        bad = ~((a < c) & (c < b))
        c[bad] = 0.5 * (a[bad] + b[bad])
        fc = np.zeros_like(c)
        fc[live] = np_siegel_z(c[live], coef)
        same_b = (fc > 0) == (fb > 0)
        upd_b = live & same_b
        upd_a = live & ~same_b
        fa = np.where(upd_b & (side == -1), 0.5 * fa, fa)
        fb = np.where(upd_a & (side == 1), 0.5 * fb, fb)
        b = np.where(upd_b, c, b)
        fb = np.where(upd_b, fc, fb)
        a = np.where(upd_a, c, a)
        fa = np.where(upd_a, fc, fa)
        side = np.where(upd_b, -1, np.where(upd_a, 1, side))
        exact = live & (fc == 0.0)
        a[exact] = c[exact]
        b[exact] = c[exact]
    return 0.5 * (a + b)


if HAVE_NUMBA:
    prime_sieve = nb_prime_sieve
    power_weighted_sum = nb_power_weighted_sum
    siegel_z = nb_siegel_z
    refine_roots = nb_refine_roots
else:
    prime_sieve = np_prime_sieve
    power_weighted_sum = np_power_weighted_sum
    siegel_z = np_siegel_z
    refine_roots = np_refine_roots

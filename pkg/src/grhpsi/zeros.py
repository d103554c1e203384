"""Imaginary parts of the first zeros of the Riemann zeta function.

Z(t) is evaluated by the Riemann-Siegel formula with four correction terms;
zeros are isolated between Gram points (Rosser blocks are subdivided until
the count matches the Gram index) and then refined by regula falsi.  Zeros
below ``POLISH_BELOW`` are re-polished with mpmath, where the asymptotic
formula is least accurate.
"""
from __future__ import annotations

import functools
import math

import numpy as np

from . import _kernels

POLISH_BELOW = 60.0
TERMS = 40  # Taylor terms of each correction polynomial in p - 1/2


class ZeroSearchError(RuntimeError):
    pass


@functools.lru_cache(maxsize=None)
def rs_coefficients(terms: int = TERMS, dps: int = 60) -> np.ndarray:
    """Taylor coefficients (in p - 1/2) of the corrections C0..C4."""
    from mpmath import cos, factorial, mp, mpf, pi, taylor

    with mp.workdps(dps):
        psi = lambda p: cos(2 * pi * (p * p - p - mpf(1) / 16)) / cos(2 * pi * p)
        c = taylor(psi, mpf(1) / 2, terms + 12)

        def d(k):
            return [c[n] * factorial(n) / factorial(n - k) for n in range(k, k + terms)]

        D = [d(k) for k in range(13)]
        p2 = pi**2
        rows = [
            D[0],
            [-D[3][i] / (96 * p2) for i in range(terms)],
            [D[2][i] / (64 * p2) + D[6][i] / (18432 * p2**2) for i in range(terms)],
            [-D[1][i] / (64 * p2) - D[5][i] / (3840 * p2**2) - D[9][i] / (5308416 * p2**3)
             for i in range(terms)],
            [D[0][i] / (128 * p2) + 19 * D[4][i] / (24576 * p2**2)
             + 11 * D[8][i] / (5898240 * p2**3) + D[12][i] / (2038431744 * p2**4)
             for i in range(terms)],
        ]
        return np.array([[float(v) for v in r] for r in rows], dtype=np.float64)


def theta(t):
    return _kernels.np_theta(t)


def siegel_z(t) -> np.ndarray:
    """Hardy's Z function on an array of t (mpmath below POLISH_BELOW)."""
    t = np.atleast_1d(np.asarray(t, dtype=np.float64))
    out = np.empty_like(t)
    small = t < POLISH_BELOW
    if small.any():
        from mpmath import siegelz

        out[small] = [float(siegelz(v)) for v in t[small]]
    if (~small).any():
        out[~small] = _kernels.siegel_z(t[~small], rs_coefficients())
    return out


def gram_points(n0: int, n1: int) -> np.ndarray:
    """Gram points g_n for n0 <= n < n1 (theta(g_n) = n pi), n0 >= -1."""
    n = np.arange(n0, n1, dtype=np.float64)
    target = n * math.pi
    # theta(t) ~ t/2 log(t/(2 pi e)); start from the inverse of the leading term
    g = 2 * math.pi * math.e * np.exp(np.real(_lambertw((n + 0.125) / math.e)))
    for _ in range(8):
        g = g - (theta(g) - target) / (0.5 * np.log(g / (2 * math.pi)))
    return g


def _lambertw(x):
    from scipy.special import lambertw

    return lambertw(x)


def _sign_changes(ts, zs):
    s = np.signbit(zs)
    k = np.flatnonzero(s[1:] != s[:-1])
    return ts[k], ts[k + 1], zs[k], zs[k + 1]


def find_zeros(count: int, tol: float = 1e-11, max_refine: int = 8) -> np.ndarray:
    """Ordinates of the first ``count`` zeros of zeta on the critical line."""
    if count <= 0:
        return np.zeros(0)
    # N(g_n) = n + 1 at good Gram points; overshoot a little to close the last block
    M = count + 64
    g = gram_points(-1, M)
    zg = siegel_z(g)
    idx = np.arange(-1, M)
    good = np.flatnonzero((np.where(idx % 2 == 0, 1.0, -1.0) * zg) > 0)
    # blocks of a single Gram interval hold exactly one sign change
    a_all, b_all = good[:-1], good[1:]
    single = (b_all - a_all) == 1
    sa = a_all[single]
    pieces = [(sa, g[sa], g[sa + 1], zg[sa], zg[sa + 1])]
    for a, b in zip(a_all[~single], b_all[~single]):
        expected = b - a
        ts, zs = g[a:b + 1], zg[a:b + 1]
        found = _sign_changes(ts, zs)
        k = 1
        while len(found[0]) < expected and k <= max_refine:
            sub = 2**k
            ts = np.concatenate([np.linspace(g[i], g[i + 1], sub, endpoint=False) for i in range(a, b)]
                                + [g[b:b + 1]])
            zs = siegel_z(ts)
            found = _sign_changes(ts, zs)
            k += 1
        if len(found[0]) != expected:
            raise ZeroSearchError(f"found {len(found[0])} sign changes between Gram points "
                                  f"g_{a - 1} and g_{b - 1}, expected {expected}")
        pieces.append((np.full(expected, a),) + found)
    order = np.concatenate([p[0] for p in pieces])
    perm = np.argsort(order, kind="stable")
    los, his, flo, fhi = ([np.concatenate([p[i] for p in pieces])[perm]] for i in range(1, 5))
    lo, hi, fl, fh = (np.concatenate(x) for x in (los, his, flo, fhi))
    # the first good Gram point is g_-1 only if Z(g_-1) < 0, which holds
    if good[0] != 0:
        raise ZeroSearchError("Gram point g_-1 is not good; cannot anchor the count")
    if lo.shape[0] < count:
        raise ZeroSearchError(f"only {lo.shape[0]} zeros isolated, wanted {count}")
    lo, hi, fl, fh = lo[:count], hi[:count], fl[:count], fh[:count]
    big = lo >= POLISH_BELOW
    roots = np.empty(count)
    if big.any():
        roots[big] = _kernels.refine_roots(lo[big], hi[big], fl[big], fh[big], rs_coefficients(), tol)
    if (~big).any():
        from mpmath import findroot, mp, siegelz

        with mp.workdps(18):
            roots[~big] = [float(findroot(siegelz, (a, b), solver="anderson"))
                           for a, b in zip(lo[~big], hi[~big])]
    if np.any(np.diff(roots) <= 0):
        raise ZeroSearchError("zeros not strictly increasing after refinement")
    return roots


def write_zeros(path, zeros) -> None:
    with open(path, "w") as fh:
        for z in zeros:
            fh.write(f"{z:.11f}\n")


def read_zeros(path) -> np.ndarray:
    vals = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            s = line.strip()
            if not s or s.startswith("#"):
                continue
            try:
                vals.append(float(s.split()[-1]))
            except ValueError:
                raise ValueError(f"{path}:{lineno}: not a number: {s!r}") from None
    return np.array(vals, dtype=np.float64)

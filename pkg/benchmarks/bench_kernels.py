"""Time the numba kernels against their numpy twins.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--quick]

Both implementations are always importable as nb_* / np_*, so one process
times both; the first numba call (compilation or cache load) is excluded.
"""
import argparse
import time

import numpy as np

from grhpsi import _kernels as k
from grhpsi.fields import lambda_table, quadratic_field
from grhpsi.zeros import gram_points, rs_coefficients


def best_of(fn, repeat):
    fn()
    ts = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        ts.append(time.perf_counter() - t0)
    return min(ts)


def cases(quick):
    n_sieve = 10**6 if quick else 10**7
    X = 10**5 if quick else 10**6
    tab = lambda_table(quadratic_field(-4), X)
    idx = np.flatnonzero(tab).astype(np.float64)
    vals = tab[idx.astype(np.int64)]
    coef = rs_coefficients()
    ts = np.linspace(1e4, 2e4, 2000 if quick else 20000)
    g = gram_points(10000, 10000 + (300 if quick else 3000))
    zg = k.np_siegel_z(g, coef)
    s = np.flatnonzero(np.signbit(zg[1:]) != np.signbit(zg[:-1]))
    br = (g[s], g[s + 1], zg[s], zg[s + 1], coef, 1e-11)
    return [
        (f"prime_sieve({n_sieve:.0e})", lambda: k.nb_prime_sieve(n_sieve), lambda: k.np_prime_sieve(n_sieve)),
        (f"power_weighted_sum(m=2, {len(idx)} terms)",
         lambda: k.nb_power_weighted_sum(idx, vals, float(X), 2),
         lambda: k.np_power_weighted_sum(idx, vals, float(X), 2)),
        (f"siegel_z({len(ts)} points)", lambda: k.nb_siegel_z(ts, coef), lambda: k.np_siegel_z(ts, coef)),
        (f"refine_roots({len(s)} brackets)", lambda: k.nb_refine_roots(*br), lambda: k.np_refine_roots(*br)),
    ]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--quick", action="store_true")
    a = ap.parse_args()
    if not k.HAVE_NUMBA:
        print("numba unavailable (or GRHPSI_DISABLE_NUMBA set): nb_* are the plain python loops")
    print(f"{'kernel':<42}{'numba [s]':>12}{'numpy [s]':>12}{'speedup':>10}")
    for name, fnb, fnp in cases(a.quick):
        tn, tp = best_of(fnb, a.repeat), best_of(fnp, a.repeat)
        print(f"{name:<42}{tn:>12.4f}{tp:>12.4f}{tp / tn:>9.1f}x")


if __name__ == "__main__":
    main()

"""numba and numpy backends must agree; both are always importable as nb_* / np_*."""
import os
import subprocess
import sys

import numpy as np
import pytest

from grhpsi import _kernels as k
from grhpsi.zeros import gram_points, rs_coefficients


def test_sieve_agrees():
    for n in (0, 1, 2, 3, 10, 97, 1000, 65536):
        assert np.array_equal(k.nb_prime_sieve(n), k.np_prime_sieve(n))
    assert k.np_prime_sieve(30).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("m", [0, 1, 2])
def test_power_weighted_sum_agrees(m):
    rng = np.random.default_rng(m)
    idx = np.sort(rng.choice(np.arange(1, 5000), 800, replace=False)).astype(np.float64)
    vals = rng.uniform(0, 10, idx.shape[0])
    for x in (1.0, 17.5, 2500.0, 4999.9):
        a = k.nb_power_weighted_sum(idx, vals, x, m)
        b = k.np_power_weighted_sum(idx, vals, x, m)
        assert a == pytest.approx(b, rel=1e-13, abs=1e-12)


def test_siegel_z_agrees():
    t = np.linspace(100.0, 5000.0, 777)
    coef = rs_coefficients()
    np.testing.assert_allclose(k.nb_siegel_z(t, coef), k.np_siegel_z(t, coef, chunk=100), rtol=1e-10, atol=1e-10)


def test_siegel_z_vs_mpmath():
    from mpmath import siegelz

    coef = rs_coefficients()
    # truncating after C4 leaves an error of order t^(-11/4)
    for t in (61.0, 80.0, 1234.5, 98765.4):
        ref = float(siegelz(t))
        assert k.np_siegel_z(np.array([t]), coef)[0] == pytest.approx(ref, abs=0.05 * t**-2.75 + 1e-10)


def test_refine_roots_agrees():
    coef = rs_coefficients()
    g = gram_points(100, 160)
    z = k.np_siegel_z(g, coef)
    s = np.flatnonzero(np.signbit(z[1:]) != np.signbit(z[:-1]))
    args = (g[s], g[s + 1], z[s], z[s + 1], coef, 1e-11)
    a = k.nb_refine_roots(*args)
    b = k.np_refine_roots(*args)
    np.testing.assert_allclose(a, b, atol=1e-9)
    assert np.all(np.abs(k.np_siegel_z(a, coef)) < 1e-8)


def test_env_flag_selects_numpy():
    env = dict(os.environ, GRHPSI_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", "import grhpsi; print(grhpsi.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"

import numpy as np
import pytest

from grhpsi import zeros

ODLYZKO_FIRST = [14.134725141734693, 21.022039638771555, 25.010857580145688, 30.424876125859513,
                 32.935061587739189]


def test_first_zeros():
    z = zeros.find_zeros(50)
    np.testing.assert_allclose(z[:5], ODLYZKO_FIRST, atol=1e-9)
    assert np.all(np.diff(z) > 0)


def test_zero_count_against_backlund():
    # N(T) from the Riemann-von Mangoldt main term, exact at this height up to S(T)
    z = zeros.find_zeros(2000)
    T = 0.5 * (z[-1] + z[-2])
    approx = zeros.theta(np.array([T]))[0] / np.pi + 1
    assert abs(approx - 1999) < 3


def test_gram_points():
    g = zeros.gram_points(0, 5)
    th = zeros.theta(g)
    np.testing.assert_allclose(th, np.pi * np.arange(5), atol=1e-9)
    assert g[0] == pytest.approx(17.8455995405, abs=1e-8)


def test_roundtrip(tmp_path):
    z = zeros.find_zeros(20)
    p = tmp_path / "z.txt"
    zeros.write_zeros(p, z)
    np.testing.assert_allclose(zeros.read_zeros(p), z, atol=1e-11)


def test_read_rejects_garbage(tmp_path):
    p = tmp_path / "z.txt"
    p.write_text("14.1347\nabc\n")
    with pytest.raises(Exception):
        zeros.read_zeros(p)


def test_cached_1e5(zeros_1e5):
    assert len(zeros_1e5) >= 100000
    assert zeros_1e5[99999] == pytest.approx(74920.827498994, abs=1e-6)

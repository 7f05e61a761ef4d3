import math

import numpy as np
import pytest
from scipy.special import gamma

from sphereflow import random_data as rd
from sphereflow import spectral


def test_shell_gaussians_reproducible_and_keyed():
    a = rd.shell_gaussians(7, 5, 100)
    b = rd.shell_gaussians(7, 5, 100)
    assert np.array_equal(a, b)
    assert a.shape == (100, 11)
    # different shells and seeds give independent streams
    assert not np.array_equal(a[:, :7], rd.shell_gaussians(7, 3, 100))
    assert not np.array_equal(a, rd.shell_gaussians(8, 5, 100))


def test_unit_variance():
    g = rd.shell_gaussians(0, 20, 4000)
    assert np.mean(np.abs(g) ** 2) == pytest.approx(1.0, abs=0.05)


def test_sample_data_shell_weights():
    spec = rd.RandomDataSpec(alpha=1.5, cutoff=12, seed=0)
    f = rd.sample_data(spec)
    for n in (0, 5, 12):
        lam = math.sqrt(n * n + n + 1)
        expected = lam ** (-1.5) * rd.shell_gaussians(0, n)
        assert np.allclose(f.shell(n), expected)
    with pytest.raises(ValueError):
        rd.RandomDataSpec(alpha=1.0, cutoff=4, seed=0)


def test_band_degrees():
    ns = rd.band_degrees(8.0)
    lam = np.sqrt(ns * ns + ns + 1.0)
    assert np.all((lam > 4.0) & (lam <= 8.0))
    # bands tile the degrees without overlap
    all_ns = np.concatenate([rd.band_degrees(2.0 ** k) for k in range(1, 6)])
    assert np.array_equal(np.unique(all_ns), all_ns)


def test_expected_shell_mass():
    ns = [2, 3]
    val = rd.expected_shell_mass(1.5, ns)
    assert val == pytest.approx(5 * 7.0 ** -1.5 + 7 * 13.0 ** -1.5)


def test_shell_moments_are_standard_gaussian():
    # Weyl identity: e_n at any point is standard complex Gaussian, so
    # the p-th root moment is Gamma(p/2 + 1)^{1/p}
    for p in (2.0, 4.0, 6.0):
        est = rd.shell_moment_check(24, 0.9, 2.0, p, 20000, seed=1)
        target = gamma(p / 2 + 1) ** (1 / p)
        assert abs(est.estimate - target) < 4 * est.half_width + 0.02


def test_projected_moment_closed_form():
    spec = rd.RandomDataSpec(alpha=1.5, cutoff=32, seed=2)
    est = rd.projected_moment_check(spec, 16.0, 2.0, 1.0, 0.7, 0.3, 20000)
    closed = math.sqrt(rd.expected_shell_mass(1.5, rd.band_degrees(16.0)))
    assert abs(est.estimate - closed) < 4 * est.half_width


def test_shell_sum_table_consistency():
    table = rd.shell_sum_table(3, 8, 1.1, 0.4, 50)
    b = spectral.basis_row(8, 1.1, 0.4)
    manual = rd.shell_gaussians(3, 5, 50) @ b[spectral.shell_slice(5)]
    assert np.allclose(table[5], manual)


def test_khinchine_gaussian_exact():
    # a Gaussian linear combination is Gaussian: moment = ||c|| Gamma(p/2+1)^{1/p}
    c = np.array([3.0, 4.0])
    est = rd.khinchine_check(c, 4.0, 40000, seed=5)
    assert est.estimate == pytest.approx(5.0 * 2.0 ** 0.25, rel=0.03)
    assert est.estimate <= 2.0 * 5.0   # sqrt(p) ||c||_2


def test_tail_check_log_linear():
    c = np.ones(8)
    lam = np.sqrt(np.linspace(0.5, 4.0, 5)) * math.sqrt(8.0)
    tab = rd.tail_check(c, lam, 50000, seed=6)
    assert tab.shape == (5, 2)
    # exact tail exp(-lam^2 / ||c||^2)
    expected = np.exp(-lam ** 2 / 8.0)
    assert np.allclose(tab[:, 1], expected, atol=0.02)


def test_wiener_chaos_bounds():
    rng = np.random.default_rng(0)
    for k, m in ((1, 16), (2, 8), (3, 5)):
        coeffs = rng.standard_normal((m,) * k)
        for p in (4.0, 6.0):
            ratio = rd.wiener_chaos_check(coeffs, k, p, 40000, seed=7)
            assert 1.0 <= ratio <= (p - 1) ** (k / 2)
    with pytest.raises(ValueError):
        rd.wiener_chaos_check(np.ones((2, 2)), 1, 4.0, 10)


def test_linear_convergence_monotone():
    spec = rd.RandomDataSpec(alpha=1.5, cutoff=16, seed=0)
    taus, cols = rd.linear_convergence_experiment(spec, [0.1, 0.01, 0.001])
    assert np.all(np.diff(taus) < 0)
    assert np.all(np.diff(cols) <= 0)
    assert cols[-1] < cols[0]

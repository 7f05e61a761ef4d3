import math
import warnings

import numpy as np
import pytest

from sphereflow import spectral
from sphereflow.spectral import SpectralField, SphereQuadrature


def random_field(cutoff, seed=0):
    rng = np.random.default_rng(seed)
    m = spectral.num_modes(cutoff)
    return SpectralField(cutoff, rng.standard_normal(m) + 1j * rng.standard_normal(m))


def test_flat_layout():
    assert spectral.num_modes(0) == 1
    assert spectral.num_modes(3) == 16
    assert spectral.flat_index(2, -2) == 4
    assert spectral.flat_index(2, 0) == 6
    assert spectral.flat_index(2, 2) == 8
    assert spectral.shell_slice(3) == slice(9, 16)
    assert list(spectral.mode_degrees(2)) == [0, 1, 1, 1, 2, 2, 2, 2, 2]


def test_eigenvalues():
    lam, laplace = spectral.eigenvalue(3)
    assert laplace == 12.0
    assert lam == math.sqrt(13.0)
    assert np.allclose(spectral.lambda_sq(2)[4:], 7.0)


def test_low_degree_closed_forms():
    # explicit first-degree harmonics under unit-mass measure
    theta, phi = 0.9, 2.3
    ct, st = math.cos(theta), math.sin(theta)
    assert spectral.eval_basis(0, 0, theta, phi) == pytest.approx(1.0)
    assert spectral.eval_basis(1, 0, theta, phi) == pytest.approx(math.sqrt(3) * ct)
    assert spectral.eval_basis(1, 1, theta, phi) == pytest.approx(
        math.sqrt(3) * st * math.cos(phi))
    assert spectral.eval_basis(1, -1, theta, phi) == pytest.approx(
        math.sqrt(3) * st * math.sin(phi))
    assert spectral.eval_basis(2, 0, theta, phi) == pytest.approx(
        math.sqrt(5) * 0.5 * (3 * ct * ct - 1))


def test_zonal_matches_legendre_polynomial():
    # b_{n,0} = sqrt(2n+1) P_n(cos theta), P_n from numpy's Legendre module
    x = np.linspace(-1, 1, 21)
    tab = spectral.legendre_table(8, x)
    for n in range(9):
        ref = math.sqrt(2 * n + 1) * np.polynomial.legendre.Legendre.basis(n)(x)
        assert np.allclose(tab[0][n], ref, atol=1e-12)


def test_weyl_identity():
    rng = np.random.default_rng(1)
    for _ in range(5):
        theta = math.acos(rng.uniform(-1, 1))
        phi = rng.uniform(0, 2 * math.pi)
        for n in (0, 1, 7, 40):
            assert spectral.weyl_sum(n, theta, phi) == pytest.approx(
                2 * n + 1, abs=1e-10)


def test_quadrature_unit_mass_and_exactness():
    q = SphereQuadrature.for_degree(12)
    assert q.polar_weights.sum() == pytest.approx(1.0)
    assert q.exact_degree >= 12
    # integrates b_{3,2}^2 to exactly 1
    f = SpectralField.single_mode(6, 3, 2)
    g = spectral.synthesize(f, q)
    assert spectral.lp_norm(g, 2.0, q) == pytest.approx(1.0, abs=1e-13)


def test_transform_round_trip():
    f = random_field(16, seed=2)
    q = SphereQuadrature.for_degree(32)
    back = spectral.analyze(spectral.synthesize(f, q), q, 16)
    assert np.allclose(back.coeffs, f.coeffs, atol=1e-12)


def test_parseval():
    f = random_field(10)
    q = SphereQuadrature.for_degree(20)
    g = spectral.synthesize(f, q)
    assert spectral.lp_norm(g, 2.0, q) == pytest.approx(f.l2_norm())


def test_aliasing_warning():
    f = random_field(16)
    q = SphereQuadrature.for_degree(8)
    with pytest.warns(spectral.AliasingWarning):
        spectral.synthesize(f, q)


def test_linear_flow_unitary_and_phases():
    f = random_field(6)
    for shifted in (False, True):
        moved = spectral.linear_flow(f, 0.37, shifted=shifted)
        assert moved.l2_norm() == pytest.approx(f.l2_norm())
    one = spectral.linear_flow(SpectralField.single_mode(3, 2, 1), 0.5, True)
    assert one.coeffs[spectral.flat_index(2, 1)] == pytest.approx(
        np.exp(-0.5j * 7.0))


def test_sobolev_norm():
    f = SpectralField.single_mode(4, 3, -2, 2.0)
    assert spectral.sobolev_norm(f, 0.5) == pytest.approx(2.0 * 13.0 ** 0.25)


def test_truncation():
    f = random_field(8)
    t = f.truncated(4)
    assert t.cutoff == 4
    assert np.array_equal(t.coeffs, f.coeffs[: spectral.num_modes(4)])
    up = t.truncated(8)
    assert up.coeffs[spectral.num_modes(4):].sum() == 0


def test_highest_weight_l2_closed_form():
    # ||sin^n theta||^2 = (1/2) int (1-x^2)^n dx, against direct quadrature
    x, w = np.polynomial.legendre.leggauss(64)
    for n in (1, 5, 20):
        direct = 0.5 * np.sum(w * (1 - x * x) ** n)
        assert spectral.highest_weight_l2_sq(n) == pytest.approx(direct)


def test_sogge_ratios_degree_one():
    # |phi_1| = sin(theta): L^4 and L^2 norms are elementary integrals
    hw4, _ = spectral.sogge_sharpness(1, 4.0)
    l2 = math.sqrt(2.0 / 3.0)
    l4 = (8.0 / 15.0) ** 0.25
    assert hw4 == pytest.approx(l4 / l2)


def test_orthonormality_gram_matrix():
    # all pairs with degrees <= 8 integrate to the identity
    q = SphereQuadrature.for_degree(16)
    m = spectral.num_modes(8)
    rows = np.empty((m, q.n_polar, q.n_azimuth))
    for i in range(m):
        f = SpectralField.zeros(8)
        f.coeffs[i] = 1.0
        rows[i] = spectral.synthesize(f, q).values.real
    w = q.weight_grid
    gram = np.einsum("ipa,jpa,pa->ij", rows, rows, w)
    assert np.max(np.abs(gram - np.eye(m))) < 1e-10


def test_north_pole_only_zonal():
    # at theta = 0 only the k = 0 member of each shell survives
    row = spectral.basis_row(3, 0.0, 0.4)
    for n in range(4):
        shell = row[spectral.shell_slice(n)]
        assert shell[n] == pytest.approx(math.sqrt(2 * n + 1))
        mask = np.ones(2 * n + 1, bool)
        mask[n] = False
        assert np.max(np.abs(shell[mask]), initial=0.0) < 1e-12


def test_max_degree_guard():
    with pytest.raises(ValueError):
        spectral.legendre_table(spectral.MAX_DEGREE + 1, np.array([0.0]))

"""Gaussian randomized initial data and Monte-Carlo probabilistic checks.

Coefficients are c_{n,k} = lambda_n^{-alpha} g_{n,k} with i.i.d. standard
complex Gaussians (E|g|^2 = 1).  Sampling is counter-based: shell n of
sample stream `seed` is drawn from a Philox generator keyed by (seed, n),
so fields are bitwise reproducible and shells can be sampled independently
and in parallel.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import spectral
from .spectral import SpectralField, SphereQuadrature, GridField


@dataclass(frozen=True)
class RandomDataSpec:
    alpha: float
    cutoff: int
    seed: int

    def __post_init__(self):
        if self.alpha <= 1.0:
            raise ValueError("alpha must be > 1")


def shell_gaussians(seed: int, n: int, samples: int | None = None) -> np.ndarray:
    """Standard complex Gaussians g_{n,k} for shell n, shape (samples, 2n+1).

    Real and imaginary parts are independent N(0, 1/2), so E|g|^2 = 1.
    Deterministic in (seed, n).
    """
    rng = np.random.Generator(np.random.Philox(key=[seed, n]))
    shape = (2 * n + 1,) if samples is None else (samples, 2 * n + 1)
    z = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    return z / math.sqrt(2.0)


def sample_data(spec: RandomDataSpec) -> SpectralField:
    """Draw phi_alpha^omega truncated at the cutoff."""
    f = SpectralField.zeros(spec.cutoff)
    for n in range(spec.cutoff + 1):
        lam_n = math.sqrt(n * n + n + 1)
        f.coeffs[spectral.shell_slice(n)] = (
            lam_n ** (-spec.alpha) * shell_gaussians(spec.seed, n)
        )
    return f


def expected_shell_mass(alpha: float, ns) -> float:
    """E ||projection||_{L^2}^2 = sum_shells lambda_n^{-2 alpha} (2n+1)."""
    ns = np.asarray(ns, dtype=float)
    return float(np.sum((ns * ns + ns + 1.0) ** (-alpha) * (2.0 * ns + 1.0)))


def band_degrees(N: float) -> np.ndarray:
    """Degrees n whose lambda_n lies in the dyadic band (N/2, N]."""
    n = np.arange(0, int(N) + 1)
    lam = np.sqrt(n * n + n + 1.0)
    return n[(lam > N / 2.0) & (lam <= N)]


# ---------------------------------------------------------------------------
# moment estimation

@dataclass
class MomentEstimate:
    p: float
    samples: int
    estimate: float
    half_width: float   # 95% CI on the p-th root of the raw moment


def _pth_root_moment(values: np.ndarray, p: float) -> MomentEstimate:
    """(E |X|^p)^{1/p} with a delta-method normal CI."""
    a = np.abs(values) ** p
    m = float(np.mean(a))
    se = float(np.std(a, ddof=1) / math.sqrt(a.size))
    est = m ** (1.0 / p)
    hw = 1.96 * se / p * m ** (1.0 / p - 1.0)
    return MomentEstimate(p=p, samples=a.size, estimate=est, half_width=hw)


def shell_moment_check(
    n: int, theta: float, phi: float, p: float, samples: int, seed: int = 0
) -> MomentEstimate:
    """p-th moment of |e_n^omega(x)| = |(2n+1)^{-1/2} sum_k g_{n,k} b_{n,k}(x)|.

    The Weyl identity makes e_n^omega(x) a standard complex Gaussian at
    every point, so the estimate must match Gamma(p/2+1)^{1/p} and grow
    no faster than C sqrt(p).
    """
    b = spectral.basis_row(n, theta, phi)[spectral.shell_slice(n)]
    g = shell_gaussians(seed, n, samples)
    vals = (g @ b) / math.sqrt(2 * n + 1)
    return _pth_root_moment(vals, p)


def projected_samples_at_point(
    spec: RandomDataSpec, N: float, theta: float, phi: float,
    t: float, samples: int,
    shell_sums: np.ndarray | None = None,
) -> np.ndarray:
    """Samples of P_N(e^{it(Delta_g - 1)} phi_alpha^omega)(x), shape (samples,).

    shell_sums, if given, is the (nmax+1, samples) table from
    shell_sum_table and is reused across alpha, N and t.
    """
    ns = band_degrees(N)
    lam2 = ns * ns + ns + 1.0
    if shell_sums is None:
        shell_sums = shell_sum_table(spec.seed, int(np.max(ns)), theta, phi, samples)
    weights = lam2 ** (-spec.alpha / 2.0) * np.exp(-1j * t * lam2)
    return weights @ shell_sums[ns]


def shell_sum_table(
    seed: int, nmax: int, theta: float, phi: float, samples: int
) -> np.ndarray:
    """S_n = sum_k g_{n,k} b_{n,k}(x) for n = 0..nmax, shape (nmax+1, samples)."""
    brow = spectral.basis_row(nmax, theta, phi)
    out = np.empty((nmax + 1, samples), dtype=complex)
    for n in range(nmax + 1):
        b = brow[spectral.shell_slice(n)]
        out[n] = shell_gaussians(seed, n, samples) @ b
    return out


def projected_moment_check(
    spec: RandomDataSpec, N: float, p: float, theta: float, phi: float,
    t: float, samples: int, shell_sums: np.ndarray | None = None,
) -> MomentEstimate:
    """Monte-Carlo p-th moment of the dyadic-band linear flow at a point."""
    vals = projected_samples_at_point(spec, N, theta, phi, t, samples, shell_sums)
    return _pth_root_moment(vals, p)


# ---------------------------------------------------------------------------
# Khinchine / large deviation / Wiener chaos

def khinchine_check(c, p: float, samples: int, seed: int = 0) -> MomentEstimate:
    """p-th moment of sum_n c_n g_n; bounded by C sqrt(p) ||c||_{l^2}."""
    c = np.asarray(c, dtype=complex)
    if not np.any(np.abs(c) > 0):
        raise ValueError("coefficient sequence must be nonzero")
    rng = np.random.Generator(np.random.Philox(key=[seed, 0]))
    g = (rng.standard_normal((samples, c.size))
         + 1j * rng.standard_normal((samples, c.size))) / math.sqrt(2.0)
    return _pth_root_moment(g @ c, p)


def tail_check(c, lambdas, samples: int, seed: int = 0) -> np.ndarray:
    """Empirical tail P(|sum c_n g_n| > lam) at each threshold.

    Returns an array of shape (len(lambdas), 2) with columns (lam, prob);
    log-prob must be concave-linear in lam^2 with negative slope.
    """
    c = np.asarray(c, dtype=complex)
    rng = np.random.Generator(np.random.Philox(key=[seed, 1]))
    g = (rng.standard_normal((samples, c.size))
         + 1j * rng.standard_normal((samples, c.size))) / math.sqrt(2.0)
    mags = np.abs(g @ c)
    lambdas = np.asarray(lambdas, dtype=float)
    probs = np.array([np.mean(mags > lam) for lam in lambdas])
    return np.column_stack([lambdas, probs])


def wiener_chaos_check(
    coeffs: np.ndarray, k: int, p: float, samples: int, seed: int = 0
) -> float:
    """||S_k||_{L^p} / ||S_k||_{L^2} for S_k = sum c(n) prod_i g_{n_i}.

    Bounded by (p-1)^{k/2}.  coeffs has shape (m,)*k; k in {1, 2, 3}.
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    if coeffs.ndim != k:
        raise ValueError(f"coefficient array must be {k}-dimensional")
    m = coeffs.shape[0]
    rng = np.random.Generator(np.random.Philox(key=[seed, 2]))
    g = (rng.standard_normal((samples, m))
         + 1j * rng.standard_normal((samples, m))) / math.sqrt(2.0)
    if k == 1:
        s = g @ coeffs
    elif k == 2:
        s = np.einsum("si,ij,sj->s", g, coeffs, g)
    elif k == 3:
        s = np.einsum("si,sj,sk,ijk->s", g, g, g, coeffs)
    else:
        raise ValueError("k must be 1, 2 or 3")
    mp = _pth_root_moment(s, p).estimate
    m2 = _pth_root_moment(s, 2.0).estimate
    return mp / m2


# ---------------------------------------------------------------------------
# linear convergence experiment

def oversampled_quadrature(cutoff: int, factor: int = 4) -> SphereQuadrature:
    """Grid oversampled relative to the band limit, for sup-norm estimates."""
    return SphereQuadrature.build(factor * (cutoff + 1) // 2, factor * cutoff + 4)


def shell_sup_profile(spec: RandomDataSpec, bands, quad: SphereQuadrature):
    """||P_N phi||_{L^infty(grid)} for each dyadic band N in bands."""
    f = sample_data(spec)
    out = []
    for N in bands:
        g = SpectralField.zeros(spec.cutoff)
        for n in band_degrees(N):
            g.coeffs[spectral.shell_slice(n)] = f.coeffs[spectral.shell_slice(n)]
        grid = spectral.synthesize(g, quad)
        out.append(float(np.max(np.abs(grid.values))))
    return np.asarray(out)


def linear_convergence_experiment(
    spec: RandomDataSpec,
    time_scales,
    quad: SphereQuadrature | None = None,
    points_per_decade: int = 4,
):
    """sup over |t| <= tau (t-grid) and the grid of |e^{it(Delta_g-1)} phi - phi|.

    Returns (taus, sup_norms); the column is nonincreasing by construction
    (nested suprema over a shared geometric time grid).
    """
    taus = np.sort(np.asarray(time_scales, dtype=float))[::-1]
    if quad is None:
        quad = oversampled_quadrature(spec.cutoff)
    f = sample_data(spec)
    base = spectral.synthesize(f, quad).values
    t_lo = taus[-1] / 10.0
    n_pts = max(2, int(math.ceil(points_per_decade
                                 * math.log10(taus[0] / t_lo))) + 1)
    tgrid = np.geomspace(t_lo, taus[0], n_pts)
    tgrid = np.concatenate([-tgrid, tgrid])
    sups = np.empty(tgrid.size)
    for i, t in enumerate(tgrid):
        moved = spectral.synthesize(spectral.linear_flow(f, t, shifted=True), quad)
        sups[i] = np.max(np.abs(moved.values - base))
    cols = np.array([np.max(sups[np.abs(tgrid) <= tau]) for tau in taus])
    return taus, cols

"""Spectral Galerkin solver for the truncated Wick-ordered cubic NLS on S^2.

The evolved equation is

    i d/dt u + (Delta_g - 1) u = P_{<=N} (|u|^2 - 2 ||u||_{L^2}^2) u,

integrated with an interaction-picture (Lawson) RK4: the stiff linear
phases e^{-i t lambda_n^2} are applied exactly, only the bounded cubic
term is stepped.  All cubic products are evaluated on a quadrature exact
to degree 4N, so the projection of the nonlinearity is alias-free and the
semi-discrete flow conserves mass exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import spectral
from .spectral import SpectralField, SphereQuadrature

RESONANCE_MAX_CUTOFF = 64


def dealiased_quadrature(cutoff: int, factor: int = 2) -> SphereQuadrature:
    """Product rule exact to degree 2*factor*cutoff (factor 2 covers cubics)."""
    return SphereQuadrature.for_degree(2 * factor * cutoff)


@dataclass
class EvolutionConfig:
    dt: float
    final_time: float
    oversampling: int = 2
    save_every: int = 1

    def __post_init__(self):
        if self.oversampling < 2:
            raise ValueError("oversampling factor must be >= 2 for exact cubics")
        if self.dt <= 0:
            raise ValueError("dt must be positive")


@dataclass
class Trajectory:
    times: np.ndarray
    states: list            # SpectralField per saved time
    masses: np.ndarray      # ||u||_{L^2} per saved time

    def final(self) -> SpectralField:
        return self.states[-1]


# ---------------------------------------------------------------------------
# nonlinearity

def wick_nonlinearity(
    u: SpectralField, quad: SphereQuadrature | None = None
) -> SpectralField:
    """P_{<=N} [(|u|^2 - 2 ||u||_{L^2}^2) u] by synthesis / product / analysis."""
    if quad is None:
        quad = dealiased_quadrature(u.cutoff)
    quad.check_exact(4 * u.cutoff, "wick_nonlinearity")
    g = spectral.synthesize(u, quad).values
    mass = np.sum(np.abs(u.coeffs) ** 2)
    w = (np.abs(g) ** 2 - 2.0 * mass) * g
    return spectral.analyze(spectral.GridField(w), quad, u.cutoff)


def resonance_split(
    u: SpectralField, quad: SphereQuadrature | None = None
) -> tuple[SpectralField, SpectralField, SpectralField]:
    """Split the Wick nonlinearity by shell-index coincidence patterns.

    With u_n the shell components and M_n = ||u_n||_{L^2}^2:

      term1: n2 distinct from both neighbors,
             sum_{n1 != n2, n2 != n3} u_{n1} conj(u_{n2}) u_{n3}
      term2: 2 sum_{n1 != n2} (|u_{n2}|^2 - M_{n2}) u_{n1}
      term3: sum_n (|u_n|^2 - 2 M_n) u_n

    term1 + term2 + term3 = wick_nonlinearity(u) after projection.  (The
    diagonal term3 carries the full Wick subtraction 2 M_n; with only M_n
    the three terms would not sum to the Wick product.)
    """
    N = u.cutoff
    if N > RESONANCE_MAX_CUTOFF:
        raise ValueError(
            f"resonance split limited to cutoff {RESONANCE_MAX_CUTOFF}"
        )
    if quad is None:
        quad = dealiased_quadrature(N)
    quad.check_exact(4 * N, "resonance_split")
    shells = []
    for n in range(N + 1):
        f = SpectralField.zeros(N)
        f.coeffs[spectral.shell_slice(n)] = u.shell(n)
        shells.append(spectral.synthesize(f, quad).values)
    shells = np.array(shells)                      # (N+1, Lp, La)
    masses = np.array([np.sum(np.abs(u.shell(n)) ** 2) for n in range(N + 1)])
    total = shells.sum(axis=0)
    abs2 = np.abs(shells) ** 2
    d_point = abs2.sum(axis=0)                    # sum_n |u_n(x)|^2
    e_point = (abs2 * shells).sum(axis=0)         # sum_n |u_n|^2 u_n
    f_point = np.tensordot(masses, shells, axes=1)  # sum_n M_n u_n
    m_total = masses.sum()

    g1 = np.abs(total) ** 2 * total - 2.0 * d_point * total + e_point
    g2 = 2.0 * ((d_point - m_total) * total - (e_point - f_point))
    g3 = e_point - 2.0 * f_point

    project = lambda g: spectral.analyze(spectral.GridField(g), quad, N)
    return project(g1), project(g2), project(g3)


# ---------------------------------------------------------------------------
# time stepping

def _rhs(coeffs: np.ndarray, cutoff: int, quad: SphereQuadrature,
         wick: bool, mass0: float) -> np.ndarray:
    """-i * nonlinearity, in coefficient space."""
    u = SpectralField(cutoff, coeffs)
    if wick:
        nl = wick_nonlinearity(u, quad)
    else:
        g = spectral.synthesize(u, quad).values
        nl = spectral.analyze(spectral.GridField(np.abs(g) ** 2 * g), quad, cutoff)
    return -1j * nl.coeffs


def evolve(
    u0: SpectralField,
    cfg: EvolutionConfig,
    wick: bool = True,
    quad: SphereQuadrature | None = None,
) -> Trajectory:
    """Integrate the truncated flow with interaction-picture RK4.

    wick=True evolves the Wick-ordered equation (linear phases -lambda_n^2);
    wick=False evolves the plain truncated NLS i u_t + Delta_g u = P|u|^2 u
    (linear phases n(n+1)), used for the gauge-equivalence check.
    """
    N = u0.cutoff
    if quad is None:
        quad = dealiased_quadrature(N, cfg.oversampling)
    n = spectral.mode_degrees(N).astype(float)
    lin = -(n * n + n + 1.0) if wick else -n * (n + 1.0)

    n_steps = int(round(cfg.final_time / cfg.dt))
    dt = cfg.final_time / n_steps if n_steps else cfg.dt
    e_half = np.exp(1j * lin * dt / 2.0)
    e_full = e_half * e_half

    c = u0.coeffs.copy()
    mass0 = float(np.sum(np.abs(c) ** 2))
    times = [0.0]
    states = [SpectralField(N, c.copy())]
    masses = [math.sqrt(mass0)]
    for step in range(n_steps):
        # Lawson RK4 relative to the current time
        k1 = _rhs(c, N, quad, wick, mass0)
        k2 = np.conj(e_half) * _rhs(e_half * (c + dt / 2 * k1), N, quad, wick, mass0)
        k3 = np.conj(e_half) * _rhs(e_half * (c + dt / 2 * k2), N, quad, wick, mass0)
        k4 = np.conj(e_full) * _rhs(e_full * (c + dt * k3), N, quad, wick, mass0)
        c = e_full * (c + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4))
        mass = float(np.sum(np.abs(c) ** 2))
        if mass > 100.0 * mass0 + 1e-12:
            raise RuntimeError(
                f"norm blow-up at step {step}: mass {mass:.3e} vs {mass0:.3e}; "
                "reduce dt"
            )
        if (step + 1) % cfg.save_every == 0 or step == n_steps - 1:
            times.append((step + 1) * dt)
            states.append(SpectralField(N, c.copy()))
            masses.append(math.sqrt(mass))
    return Trajectory(np.asarray(times), states, np.asarray(masses))


def gauge_transform(traj: Trajectory, mass_sq: float,
                    inverse: bool = False) -> Trajectory:
    """Scalar gauge u -> u e^{-i t + 2 i t ||phi||^2} mapping plain NLS
    trajectories to Wick-ordered ones (inverse=True maps back)."""
    sign = -1.0 if inverse else 1.0
    states = []
    for t, st in zip(traj.times, traj.states):
        phase = np.exp(sign * 1j * t * (2.0 * mass_sq - 1.0))
        states.append(SpectralField(st.cutoff, st.coeffs * phase))
    return Trajectory(traj.times.copy(), states, traj.masses.copy())


def dyadic_increment(
    phi: SpectralField, N: int, cfg: EvolutionConfig
) -> SpectralField:
    """v_N(T) = u_N(T) - u_{N/2}(T), both truncations evolved from phi."""
    if N < 2:
        raise ValueError("N must be >= 2")
    hi = evolve(phi.truncated(N), cfg).final()
    lo = evolve(phi.truncated(N // 2), cfg).final()
    return SpectralField(N, hi.coeffs - lo.truncated(N).coeffs)


# ---------------------------------------------------------------------------
# second Picard iterate

def second_picard(
    phi: SpectralField,
    t: float,
    n_nodes: int = 64,
    quad: SphereQuadrature | None = None,
    check_tol: float | None = None,
) -> SpectralField:
    """Duhamel integral -i int_0^t e^{i(t-s)(Delta_g-1)} Wick(e^{is(...)} phi) ds.

    Gauss-Legendre in s.  With check_tol set, the node count is doubled and
    the relative change returned must stay below the tolerance (raises
    RuntimeError otherwise).
    """
    if t == 0.0:
        return SpectralField.zeros(phi.cutoff)
    if quad is None:
        quad = dealiased_quadrature(phi.cutoff)

    def integral(nodes: int) -> np.ndarray:
        x, w = np.polynomial.legendre.leggauss(nodes)
        s_nodes = t / 2.0 * (x + 1.0)
        s_w = w * t / 2.0
        acc = np.zeros_like(phi.coeffs)
        for s, ws in zip(s_nodes, s_w):
            u_s = spectral.linear_flow(phi, s, shifted=True)
            nl = wick_nonlinearity(u_s, quad)
            back = spectral.linear_flow(nl, t - s, shifted=True)
            acc = acc + ws * back.coeffs
        return -1j * acc

    val = integral(n_nodes)
    if check_tol is not None:
        ref = integral(2 * n_nodes)
        rel = np.linalg.norm(ref - val) / max(np.linalg.norm(ref), 1e-300)
        if rel > check_tol:
            raise RuntimeError(
                f"oscillatory s-quadrature unresolved: relative change {rel:.2e}"
            )
        val = ref
    return SpectralField(phi.cutoff, val)


# ---------------------------------------------------------------------------
# pointwise-convergence experiment

def nls_pointwise_experiment(
    phi: SpectralField,
    time_scales,
    cfg: EvolutionConfig,
    quad_grid: SphereQuadrature | None = None,
    truncations=(),
):
    """Evolve the truncated Wick flow and track |u(t,x) - phi(x)| on the grid.

    Returns a dict with:
      taus / sup_median / sup_l2: per-scale stats of the windowed sup
        (median and L^2 over the grid of sup_{0 < t <= tau} |u - phi|);
      truncations / truncation_sup_l2: for each M, the grid L^2 norm of
        sup_t |u_N(t) - u_M(t)| over the full window.
    """
    taus = np.sort(np.asarray(time_scales, dtype=float))[::-1]
    if quad_grid is None:
        quad_grid = spectral.SphereQuadrature.for_degree(2 * phi.cutoff + 8)
    w = quad_grid.weight_grid
    base = spectral.synthesize(phi, quad_grid).values

    traj = evolve(phi, cfg)
    sup_grid = {tau: np.zeros(base.shape) for tau in taus}
    trunc_traj = {
        M: evolve(phi.truncated(M), cfg) for M in truncations
    }
    trunc_sup = {M: np.zeros(base.shape) for M in truncations}
    for i, t in enumerate(traj.times):
        if t == 0.0:
            continue
        g = spectral.synthesize(traj.states[i], quad_grid).values
        diff = np.abs(g - base)
        for tau in taus:
            if t <= tau:
                np.maximum(sup_grid[tau], diff, out=sup_grid[tau])
        for M in truncations:
            gm = spectral.synthesize(
                trunc_traj[M].states[i].truncated(phi.cutoff), quad_grid
            ).values
            np.maximum(trunc_sup[M], np.abs(g - gm), out=trunc_sup[M])
    sup_median = np.array([float(np.median(sup_grid[tau])) for tau in taus])
    sup_l2 = np.array(
        [float(np.sqrt(np.sum(w * sup_grid[tau] ** 2))) for tau in taus]
    )
    trunc_l2 = np.array(
        [float(np.sqrt(np.sum(w * trunc_sup[M] ** 2))) for M in truncations]
    )
    return {
        "taus": taus,
        "sup_median": sup_median,
        "sup_l2": sup_l2,
        "truncations": np.asarray(list(truncations)),
        "truncation_sup_l2": trunc_l2,
    }

"""Deterministic maximal-estimate counterexample on S^2.

The scan family is f_N = sum_n phi(n/N) (x1 + i x2)^n, whose linear flow
in polar coordinates (lam, theta) is the oscillatory sum

    S_N(t, theta, lam) = sum_n phi(n/N) e^{i t n(n+1)} e^{i n theta} lam^n.

At rational times t = 2 pi / p and angles theta = 2 pi q / p (p odd, q
even, coprime) Poisson summation splits S_N into a Gauss-sum main term of
size ~ N^{3/4} lam^N and a small dual-frequency remainder.  The union of
small arcs around those rationals is the exceptional set on which the
maximal function is uniformly large.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import arithmetic
from .spectral import highest_weight_l2_sq


class QuadratureWarning(UserWarning):
    """Oscillatory quadrature did not reach the requested tolerance."""


# ---------------------------------------------------------------------------
# smooth bump profile

def _smooth01(x: np.ndarray) -> np.ndarray:
    """C^infinity ramp: 0 for x<=0, 1 for x>=1, exp(-1/x)-based in between."""
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        a = np.where(x > 0.0, np.exp(-1.0 / np.maximum(x, 1e-300)), 0.0)
        b = np.where(x < 1.0, np.exp(-1.0 / np.maximum(1.0 - x, 1e-300)), 0.0)
    return a / (a + b)


@dataclass(frozen=True)
class BumpProfile:
    """Smooth cutoff: support (lo, hi), identically 1 on [flat_lo, flat_hi]."""

    lo: float = 0.5
    flat_lo: float = 0.75
    flat_hi: float = 2.25
    hi: float = 2.5

    def __call__(self, y) -> np.ndarray:
        y = np.asarray(y, dtype=float)
        up = _smooth01((y - self.lo) / (self.flat_lo - self.lo))
        down = _smooth01((self.hi - y) / (self.hi - self.flat_hi))
        return up * down


DEFAULT_PROFILE = BumpProfile()


@dataclass(frozen=True)
class RationalPoint:
    """Scan point t = 2 pi / p, theta = 2 pi q / p with p odd, q even, coprime."""

    p: int
    q: int

    def __post_init__(self):
        if self.p % 2 == 0 or self.p < 3:
            raise ValueError("p must be odd and >= 3")
        if self.q % 2 != 0:
            raise ValueError("q must be even")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError("p and q must be coprime")

    @property
    def t(self) -> float:
        return 2.0 * math.pi / self.p

    @property
    def theta(self) -> float:
        return 2.0 * math.pi * self.q / self.p


# ---------------------------------------------------------------------------
# the oscillatory sum

def _support_degrees(N: int) -> np.ndarray:
    return np.arange(N // 2, 5 * N // 2 + 1)


def schrodinger_sum(N, t, theta, lam, profile: BumpProfile = DEFAULT_PROFILE):
    """S_N(t, theta, lam); theta and lam broadcast against each other.

    Kernel-exact direct summation over the profile support (N/2, 5N/2).
    lam^n and e^{i n theta} are fused into a single exponential in
    z = log(lam) + i theta.
    """
    n = _support_degrees(N)
    w = profile(n / N) * np.exp(1j * t * n * (n + 1.0))
    theta = np.asarray(theta, dtype=float)
    lam = np.asarray(lam, dtype=float)
    shape = np.broadcast_shapes(theta.shape, lam.shape)
    th = np.broadcast_to(theta, shape).ravel()
    lm = np.broadcast_to(lam, shape).ravel()
    with np.errstate(divide="ignore"):
        z = np.where(lm > 0.0, np.log(np.maximum(lm, 1e-300)), -np.inf) + 1j * th
    out = np.where(
        np.isneginf(z.real),
        0.0,
        np.exp(np.outer(np.where(np.isneginf(z.real), 0.0, z), n)) @ w,
    )
    out = out.reshape(shape)
    return complex(out[()]) if out.ndim == 0 else out


# ---------------------------------------------------------------------------
# Poisson split

@lru_cache(maxsize=64)
def _gl_nodes(count: int):
    x, w = np.polynomial.legendre.leggauss(count)
    return x, w


def profile_transform(
    profile: BumpProfile, N: int, lam: float, xi: float, tol: float = 1e-10
) -> complex:
    """G_hat(xi) = int profile(y) lam^{N y} e^{-2 pi i y xi} dy over the support.

    Adaptive Gauss-Legendre: node count doubles until the value is stable
    to the tolerance; warns on failure to converge.
    """
    lo, hi = profile.lo, profile.hi
    half, mid = (hi - lo) / 2.0, (hi + lo) / 2.0
    loglam = math.log(lam) if lam > 0 else -math.inf

    def eval_at(count: int) -> complex:
        x, w = _gl_nodes(count)
        y = mid + half * x
        vals = profile(y) * np.exp(N * loglam * y - 2j * np.pi * y * xi)
        return complex(half * np.sum(w * vals))

    count = max(48, int(8 * abs(xi)) + 16)
    prev = eval_at(count)
    for _ in range(8):
        count *= 2
        cur = eval_at(count)
        if abs(cur - prev) <= tol * max(abs(cur), 1.0):
            return cur
        prev = cur
    warnings.warn(
        f"profile transform did not stabilize at xi={xi}", QuadratureWarning
    )
    return prev


def poisson_split(
    N: int,
    rp: RationalPoint,
    lam: float,
    profile: BumpProfile = DEFAULT_PROFILE,
    xi_max: int = 64,
    tol: float = 1e-10,
) -> tuple[complex, complex]:
    """Split S_N(2 pi/p, 2 pi q/p, lam) into (main, remainder).

    main = (N/p) G_hat(0) * GaussSum(p, q+1); remainder sums the dual
    frequencies xi != 0, each weighted by a Gauss sum of shifted linear
    coefficient.  main + remainder reproduces the direct sum exactly
    (Poisson summation), up to quadrature error in G_hat.
    """
    p, q = rp.p, rp.q
    scale = N / p
    main = scale * profile_transform(profile, N, lam, 0.0, tol) * (
        arithmetic.gauss_sum_direct(p, q + 1)
    )
    remainder = 0.0 + 0.0j
    floor = tol * max(abs(main), 1e-30)
    for xi in range(1, xi_max + 1):
        term = 0.0 + 0.0j
        for sgn in (+1, -1):
            ghat = profile_transform(profile, N, lam, N * sgn * xi / p, tol)
            term += scale * ghat * arithmetic.gauss_sum_direct(p, q + 1 + sgn * xi)
        remainder += term
        if abs(term) < floor:
            break
    else:
        warnings.warn("poisson_split: dual-frequency tail not exhausted",
                      QuadratureWarning)
    return main, remainder


# ---------------------------------------------------------------------------
# exceptional set

@dataclass
class ExceptionalSet:
    """Disjoint arcs E(N,p,q) around the rationals 2 pi q / p, p ~ sqrt(N)."""

    N: int
    C0: int
    ps: np.ndarray        # odd denominators, one per interval
    qs: np.ndarray        # even numerators
    radius: float

    @property
    def centers(self) -> np.ndarray:
        return 2.0 * np.pi * self.qs / self.ps

    @property
    def count(self) -> int:
        return self.ps.size

    @property
    def measure(self) -> float:
        return 2.0 * self.radius * self.count

    def is_disjoint(self) -> bool:
        c = np.sort(self.centers)
        return bool(np.all(np.diff(c) > 2.0 * self.radius))


def build_exceptional_set(N: int, C0: int = 4) -> ExceptionalSet:
    """All arcs E(N,p,q): p odd in (sqrt(N)/C0, C0 sqrt(N)), q even coprime,
    2 pi q/p in (0, pi), radius 1/(10 C0^2 pi N)."""
    if C0 < 2:
        raise ValueError("C0 must be >= 2")
    lo, hi = math.sqrt(N) / C0, C0 * math.sqrt(N)
    p_first = int(math.floor(lo)) + 1
    if p_first % 2 == 0:
        p_first += 1
    p_first = max(p_first, 3)
    ps_win = np.arange(p_first, math.ceil(hi), 2)
    ps_win = ps_win[ps_win < hi]
    if ps_win.size == 0:
        raise ValueError(f"empty denominator window for N={N}, C0={C0}")
    all_p, all_q = [], []
    for p in ps_win:
        q = np.arange(2, (p - 1) // 2 + 1, 2)
        if q.size == 0:
            continue
        q = q[np.gcd(q, int(p)) == 1]
        all_p.append(np.full(q.size, p))
        all_q.append(q)
    if not all_p:
        raise ValueError(f"no admissible arcs for N={N}, C0={C0}")
    ps = np.concatenate(all_p)
    qs = np.concatenate(all_q)
    return ExceptionalSet(N=N, C0=C0, ps=ps, qs=qs,
                          radius=1.0 / (10.0 * C0 * C0 * math.pi * N))


# ---------------------------------------------------------------------------
# maximal scans

@dataclass
class MaximalScanResult:
    N: int
    lam: np.ndarray                 # radii scanned, shape (L,)
    values: np.ndarray              # MS_N at interval centers, shape (count, L)
    certificate_min: float          # min over entries of MS / (N^{3/4} lam^N)
    mode: str


def _certificate(N: int, lam: np.ndarray, values: np.ndarray) -> float:
    ref = N**0.75 * lam ** N
    return float(np.min(values / ref[None, :]))


def maximal_scan(
    N: int,
    escn: ExceptionalSet,
    radii,
    time_mode: str = "rational",
    profile: BumpProfile = DEFAULT_PROFILE,
    grid_points: int | None = None,
) -> MaximalScanResult:
    """Evaluate the maximal function at the exceptional-set centers.

    rational mode: each arc is paired with its own certified time 2 pi / p.
    grid mode: brute-force sup over uniform times in [0, 2 pi] (the window
    of the maximal estimate; it contains every 2 pi / p).
    """
    lam = np.atleast_1d(np.asarray(radii, dtype=float))
    values = np.empty((escn.count, lam.size))
    if time_mode == "rational":
        for p in np.unique(escn.ps):
            sel = escn.ps == p
            th = 2.0 * np.pi * escn.qs[sel] / p
            s = schrodinger_sum(N, 2.0 * np.pi / p, th[:, None], lam[None, :],
                                profile)
            values[sel] = np.abs(s)
    elif time_mode == "grid":
        if grid_points is None:
            grid_points = 10 * int(np.max(escn.ps)) ** 2
        times = np.linspace(0.0, 2.0 * np.pi, grid_points, endpoint=False)
        th = escn.centers
        best = np.zeros((escn.count, lam.size))
        for t in times:
            s = np.abs(schrodinger_sum(N, t, th[:, None], lam[None, :], profile))
            np.maximum(best, s, out=best)
        values = best
    else:
        raise ValueError(f"unknown time_mode {time_mode!r}")
    return MaximalScanResult(
        N=N, lam=lam, values=values,
        certificate_min=_certificate(N, lam, values), mode=time_mode,
    )


def f_hs_norm(N: int, s: float, profile: BumpProfile = DEFAULT_PROFILE) -> float:
    """H^s norm of the scan family f_N (closed-form shell norms)."""
    n = _support_degrees(N)
    w = profile(n / N) ** 2
    lam2 = (n * n + n + 1.0) ** s
    return float(np.sqrt(np.sum(w * lam2 * highest_weight_l2_sq(n))))


def maximal_lr_norm(
    N: int,
    r: float,
    C0: int = 4,
    eps: float = 0.01,
    n_radial: int = 24,
    profile: BumpProfile = DEFAULT_PROFILE,
    escn: ExceptionalSet | None = None,
) -> float:
    """L^r norm of MS_N over the region (exceptional set) x (1 - N^{-1-eps}, 1).

    The polar surface density 2 lam / sqrt(1 - lam^2) is integrable via the
    substitution lam = 1 - u^2, which removes the sqrt singularity at the
    equator lam = 1.
    """
    if escn is None:
        escn = build_exceptional_set(N, C0)
    u_max = N ** (-(1.0 + eps) / 2.0)
    x, w = _gl_nodes(n_radial)
    u = u_max * (x + 1.0) / 2.0
    wu = w * u_max / 2.0
    lam = 1.0 - u * u
    density = 2.0 * lam / np.sqrt(2.0 - u * u)   # (lam/sqrt(1-lam^2)) dlam -> du
    scan = maximal_scan(N, escn, lam, "rational", profile)
    arc = 2.0 * escn.radius
    total = 2.0 * arc * np.sum(scan.values**r * (wu * density)[None, :])
    return float(total ** (1.0 / r))


def maximal_norm_ratio(
    N: int,
    r: float,
    s: float,
    C0: int = 4,
    eps: float = 0.01,
    profile: BumpProfile = DEFAULT_PROFILE,
) -> float:
    """||MS_N||_{L^r(region)} / ||f_N||_{H^s}; grows in N when s < 1/2 - 1/(2r)."""
    return maximal_lr_norm(N, r, C0, eps, profile=profile) / f_hs_norm(N, s, profile)

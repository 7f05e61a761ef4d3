"""Real spherical-harmonic basis, quadrature and the linear propagator on S^2.

The surface measure is normalized to total mass 1 (not 4*pi).  With that
normalization the constant basis function is identically 1, the basis is
orthonormal under the plain quadrature inner product, and the pointwise
Weyl identity reads

    sum_{|k|<=n} b_{n,k}(x)^2 = 2n + 1   for every x.

Coefficient layout: a field with cutoff N stores (N+1)^2 complex
coefficients, shell n occupying the slice [n^2, (n+1)^2) with order k
running from -n to n.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

#: largest degree the normalized Legendre recurrence is certified for
MAX_DEGREE = 4096


class AliasingWarning(UserWarning):
    """The supplied quadrature is not exact for the requested operation."""


# ---------------------------------------------------------------------------
# mode bookkeeping

def num_modes(cutoff: int) -> int:
    return (cutoff + 1) ** 2


def flat_index(n: int, k: int) -> int:
    """Position of mode (n, k) in the flat coefficient array."""
    if abs(k) > n:
        raise ValueError(f"order |k|={abs(k)} exceeds degree n={n}")
    return n * n + n + k


def shell_slice(n: int) -> slice:
    """Slice of the flat coefficient array holding shell n."""
    return slice(n * n, (n + 1) * (n + 1))


def mode_degrees(cutoff: int) -> np.ndarray:
    """Degree n of every flat coefficient index, shape ((cutoff+1)^2,)."""
    return np.repeat(np.arange(cutoff + 1), 2 * np.arange(cutoff + 1) + 1)


def eigenvalue(n: int) -> tuple[float, float]:
    """Return (lambda_n, n(n+1)) for degree n.

    lambda_n = sqrt(n^2+n+1) is the spectrum of sqrt(-Delta_g + 1);
    n(n+1) is the Laplace-Beltrami eigenvalue of -Delta_g.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return math.sqrt(n * n + n + 1), float(n * (n + 1))


def lambda_sq(cutoff: int) -> np.ndarray:
    """lambda_n^2 = n^2+n+1 per flat mode index."""
    n = mode_degrees(cutoff).astype(float)
    return n * n + n + 1.0


# ---------------------------------------------------------------------------
# normalized associated Legendre functions

def legendre_table(nmax: int, x: np.ndarray) -> list[np.ndarray]:
    """Fully normalized associated Legendre functions at abscissae x.

    Returns a list ``tab`` with ``tab[m]`` of shape (nmax - m + 1, len(x)),
    holding Q_n^m(x) for n = m..nmax, normalized so that the real basis

        b_{n,0} = Q_n^0,  b_{n,k} = Q_n^k cos(k phi),  b_{n,-k} = Q_n^k sin(k phi)

    is orthonormal under the unit-mass measure.  Forward recurrence in the
    degree; stable for nmax up to MAX_DEGREE.
    """
    if nmax > MAX_DEGREE:
        raise ValueError(f"degree {nmax} exceeds supported maximum {MAX_DEGREE}")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    s = np.sqrt(np.maximum(0.0, 1.0 - x * x))
    tab: list[np.ndarray] = []
    # sectoral seeds Q_m^m
    sect = [np.ones_like(x)]
    if nmax >= 1:
        sect.append(math.sqrt(3.0) * s)
    for m in range(2, nmax + 1):
        sect.append(math.sqrt((2 * m + 1) / (2 * m)) * s * sect[m - 1])
    for m in range(nmax + 1):
        block = np.empty((nmax - m + 1, x.size))
        block[0] = sect[m]
        if nmax >= m + 1:
            block[1] = math.sqrt(2 * m + 3) * x * sect[m]
        for n in range(m + 2, nmax + 1):
            a = math.sqrt((2 * n - 1) * (2 * n + 1) / ((n - m) * (n + m)))
            b = math.sqrt(
                (2 * n + 1) * (n + m - 1) * (n - m - 1)
                / ((n - m) * (n + m) * (2 * n - 3))
            )
            block[n - m] = a * x * block[n - m - 1] - b * block[n - m - 2]
        tab.append(block)
    return tab


def eval_basis(n: int, k: int, theta: float, phi: float) -> float:
    """Evaluate the real basis function b_{n,k} at the point (theta, phi)."""
    if abs(k) > n:
        raise ValueError(f"order |k|={abs(k)} exceeds degree n={n}")
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds supported maximum {MAX_DEGREE}")
    m = abs(k)
    q = legendre_table(n, np.array([math.cos(theta)]))[m][n - m, 0]
    if k > 0:
        return q * math.cos(k * phi)
    if k < 0:
        return q * math.sin(m * phi)
    return q


def basis_row(cutoff: int, theta: float, phi: float) -> np.ndarray:
    """All basis values b_{n,k}(theta, phi) for n <= cutoff, flat layout."""
    tab = legendre_table(cutoff, np.array([math.cos(theta)]))
    out = np.empty(num_modes(cutoff))
    for n in range(cutoff + 1):
        row = np.empty(2 * n + 1)
        row[n] = tab[0][n, 0]
        for m in range(1, n + 1):
            q = tab[m][n - m, 0]
            row[n + m] = q * math.cos(m * phi)
            row[n - m] = q * math.sin(m * phi)
        out[shell_slice(n)] = row
    return out


def weyl_sum(n: int, theta: float, phi: float) -> float:
    """sum_{|k|<=n} b_{n,k}(x)^2; equals 2n+1 identically."""
    tab = legendre_table(n, np.array([math.cos(theta)]))
    total = tab[0][n, 0] ** 2
    for m in range(1, n + 1):
        total += tab[m][n - m, 0] ** 2
    return float(total)


# ---------------------------------------------------------------------------
# containers

@dataclass
class SpectralField:
    """Complex coefficients c_{n,k} for 0 <= n <= cutoff, |k| <= n."""

    cutoff: int
    coeffs: np.ndarray

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs, dtype=complex)
        if self.coeffs.shape != (num_modes(self.cutoff),):
            raise ValueError(
                f"expected {num_modes(self.cutoff)} coefficients, "
                f"got {self.coeffs.shape}"
            )
        if not np.all(np.isfinite(self.coeffs)):
            raise ValueError("non-finite coefficient")

    @classmethod
    def zeros(cls, cutoff: int) -> "SpectralField":
        return cls(cutoff, np.zeros(num_modes(cutoff), dtype=complex))

    @classmethod
    def single_mode(cls, cutoff: int, n: int, k: int, amplitude: complex = 1.0):
        f = cls.zeros(cutoff)
        f.coeffs[flat_index(n, k)] = amplitude
        return f

    def copy(self) -> "SpectralField":
        return SpectralField(self.cutoff, self.coeffs.copy())

    def shell(self, n: int) -> np.ndarray:
        return self.coeffs[shell_slice(n)]

    def l2_norm(self) -> float:
        """L^2 norm, by Parseval just the coefficient norm."""
        return float(np.linalg.norm(self.coeffs))

    def truncated(self, cutoff: int) -> "SpectralField":
        """Projection P_{<=cutoff}, possibly embedding into a larger cutoff."""
        out = SpectralField.zeros(cutoff)
        m = min(cutoff, self.cutoff)
        out.coeffs[: num_modes(m)] = self.coeffs[: num_modes(m)]
        return out


@dataclass
class GridField:
    """Complex values on the quadrature grid, shape (n_polar, n_azimuth)."""

    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values)
        if self.values.ndim != 2:
            raise ValueError("grid values must be 2-D (polar x azimuth)")


@dataclass
class SphereQuadrature:
    """Gauss-Legendre x uniform product rule with unit total mass.

    Exact for spherical polynomials of degree <= exact_degree
    (2*n_polar - 1 in the polar direction, n_azimuth - 1 in azimuth).
    """

    x: np.ndarray            # cos(theta) nodes, shape (n_polar,)
    polar_weights: np.ndarray  # sum to 1
    n_azimuth: int
    _legendre_cache: dict = field(default_factory=dict, repr=False)
    _azimuth_cache: dict = field(default_factory=dict, repr=False)

    @classmethod
    def build(cls, n_polar: int, n_azimuth: int) -> "SphereQuadrature":
        x, w = np.polynomial.legendre.leggauss(n_polar)
        return cls(x=x, polar_weights=w / 2.0, n_azimuth=n_azimuth)

    @classmethod
    def for_degree(cls, degree: int) -> "SphereQuadrature":
        """Smallest product rule exact for polynomials of the given degree."""
        n_polar = degree // 2 + 1
        return cls.build(n_polar, degree + 1)

    @property
    def n_polar(self) -> int:
        return self.x.size

    @property
    def exact_degree(self) -> int:
        return min(2 * self.n_polar - 1, self.n_azimuth - 1)

    @property
    def theta(self) -> np.ndarray:
        return np.arccos(self.x)

    @property
    def phi(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.n_azimuth) / self.n_azimuth

    @property
    def weight_grid(self) -> np.ndarray:
        return self.polar_weights[:, None] / self.n_azimuth * np.ones(
            (1, self.n_azimuth)
        )

    def legendre(self, nmax: int) -> list[np.ndarray]:
        if nmax not in self._legendre_cache:
            self._legendre_cache[nmax] = legendre_table(nmax, self.x)
        return self._legendre_cache[nmax]

    def azimuth_matrices(self, nmax: int) -> tuple[np.ndarray, np.ndarray]:
        """cos(m phi_j) and sin(m phi_j), shape (nmax+1, n_azimuth)."""
        if nmax not in self._azimuth_cache:
            mphi = np.outer(np.arange(nmax + 1), self.phi)
            self._azimuth_cache[nmax] = (np.cos(mphi), np.sin(mphi))
        return self._azimuth_cache[nmax]

    def check_exact(self, degree: int, context: str) -> bool:
        if self.exact_degree < degree:
            warnings.warn(
                f"{context}: quadrature exact to degree {self.exact_degree} "
                f"but degree {degree} required; result may alias",
                AliasingWarning,
                stacklevel=3,
            )
            return False
        return True


# ---------------------------------------------------------------------------
# transforms

def synthesize(f: SpectralField, quad: SphereQuadrature) -> GridField:
    """Evaluate the field on the quadrature grid."""
    N = f.cutoff
    quad.check_exact(2 * N, "synthesize")
    tab = quad.legendre(N)
    cosm, sinm = quad.azimuth_matrices(N)
    C = np.zeros((N + 1, quad.n_polar), dtype=complex)
    S = np.zeros((N + 1, quad.n_polar), dtype=complex)
    for m in range(N + 1):
        ns = np.arange(m, N + 1)
        C[m] = f.coeffs[ns * ns + ns + m] @ tab[m]
        if m:
            S[m] = f.coeffs[ns * ns + ns - m] @ tab[m]
    return GridField(C.T @ cosm + S.T @ sinm)


def analyze(g: GridField, quad: SphereQuadrature, cutoff: int) -> SpectralField:
    """Project grid values onto the basis up to the cutoff."""
    quad.check_exact(2 * cutoff, "analyze")
    cosm, sinm = quad.azimuth_matrices(cutoff)
    gw = g.values * quad.weight_grid
    Vc = gw @ cosm.T  # (n_polar, cutoff+1)
    Vs = gw @ sinm.T
    tab = quad.legendre(cutoff)
    out = SpectralField.zeros(cutoff)
    for m in range(cutoff + 1):
        ns = np.arange(m, cutoff + 1)
        out.coeffs[ns * ns + ns + m] = tab[m] @ Vc[:, m]
        if m:
            out.coeffs[ns * ns + ns - m] = tab[m] @ Vs[:, m]
    return out


# ---------------------------------------------------------------------------
# norms

def sobolev_norm(f: SpectralField, s: float) -> float:
    """H^s norm with lambda_n^s spectral weights."""
    w = lambda_sq(f.cutoff) ** s
    return float(np.sqrt(np.sum(w * np.abs(f.coeffs) ** 2)))


def lp_norm(g: GridField, p: float, quad: SphereQuadrature) -> float:
    """L^p norm by quadrature; p = inf returns the grid maximum (approximate)."""
    if p == np.inf:
        return float(np.max(np.abs(g.values)))
    if p < 1:
        raise ValueError("p must be >= 1")
    return float(np.sum(quad.weight_grid * np.abs(g.values) ** p) ** (1.0 / p))


# ---------------------------------------------------------------------------
# linear flow

def linear_flow(f: SpectralField, t: float, shifted: bool = False) -> SpectralField:
    """Apply the linear Schrodinger propagator to the coefficients.

    unshifted: multiplies shell n by exp(i t n(n+1))  (e^{it Delta} with the
    sign convention used in the counterexample scan).
    shifted:   multiplies by exp(-i t lambda_n^2), i.e. the e^{it(Delta_g - 1)}
    semigroup.  Unitary either way.
    """
    n = mode_degrees(f.cutoff).astype(float)
    if shifted:
        phase = np.exp(-1j * t * (n * n + n + 1.0))
    else:
        phase = np.exp(1j * t * n * (n + 1.0))
    return SpectralField(f.cutoff, f.coeffs * phase)


# ---------------------------------------------------------------------------
# sharp eigenfunction families

def highest_weight_l2_sq(n: int | np.ndarray) -> np.ndarray:
    """||(x1+i x2)^n||_{L^2}^2 = (1/2) int_{-1}^{1} (1-x^2)^n dx, closed form."""
    from scipy.special import gammaln

    n = np.asarray(n, dtype=float)
    return np.sqrt(np.pi) / 2.0 * np.exp(gammaln(n + 1.0) - gammaln(n + 1.5))


def _polar_rule(n_nodes: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(n_nodes)
    return x, w / 2.0


def sogge_sharpness(
    n: int, p: float, quad: SphereQuadrature | None = None
) -> tuple[float, float]:
    """L^p/L^2 ratios of the highest-weight and zonal members of shell n.

    The highest-weight harmonic is (x1+i x2)^n, the zonal one b_{n,0}.
    If no quadrature is given, a polar rule exact for degree n*p (even p)
    is built internally; otherwise the supplied rule is used and flagged
    when inexact.
    """
    if p < 2:
        raise ValueError("p must be >= 2")
    degree_needed = int(math.ceil(n * p))
    if quad is None:
        x, w = _polar_rule(degree_needed // 2 + 1)
    else:
        quad.check_exact(degree_needed, "sogge_sharpness")
        x, w = quad.x, quad.polar_weights
    if p != int(p) or int(p) % 2:
        warnings.warn(
            "sogge_sharpness: |.|^p is not polynomial for non-even p; "
            "the quadrature value is approximate",
            AliasingWarning,
            stacklevel=2,
        )
    one_minus = np.maximum(0.0, 1.0 - x * x)
    # highest weight: |phi_n| = sin(theta)^n
    hw_p = float(np.sum(w * one_minus ** (n * p / 2.0)) ** (1.0 / p))
    hw_2 = float(np.sqrt(np.sum(w * one_minus ** n)))
    # zonal: b_{n,0}
    zn = legendre_table(n, x)[0][n]
    zo_p = float(np.sum(w * np.abs(zn) ** p) ** (1.0 / p))
    zo_2 = float(np.sqrt(np.sum(w * zn * zn)))
    return hw_p / hw_2, zo_p / zo_2

"""Arithmetic functions and quadratic Gauss sums.

Mobius and totient values come from linear sieves (cached, grown on
demand); the Gauss sum is available both as a direct exponential sum and
in closed form.  The closed-form phase convention is fixed once by
brute-force comparison at small moduli, see OMEGA_RESIDUE_3 below.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

SIEVE_MAX = 10**7

_mobius_table: np.ndarray | None = None
_totient_table: np.ndarray | None = None


def _grow(limit: int) -> None:
    global _mobius_table, _totient_table
    if _totient_table is not None and _totient_table.size > limit:
        return
    limit = max(limit, 1 << 10)
    if limit > SIEVE_MAX:
        raise ValueError(f"sieve limit {limit} exceeds configured maximum {SIEVE_MAX}")
    n = np.arange(limit + 1, dtype=np.int64)
    phi = n.copy()
    mu = np.ones(limit + 1, dtype=np.int8)
    is_comp = np.zeros(limit + 1, dtype=bool)
    for p in range(2, limit + 1):
        if is_comp[p]:
            continue
        is_comp[p * p :: p] = True
        phi[p::p] -= phi[p::p] // p
        mu[p::p] *= -1
        mu[p * p :: p * p] = 0
    _mobius_table = mu
    _totient_table = phi


def mobius(n: int) -> int:
    """Mobius function: (-1)^s for squarefree n with s prime factors, else 0."""
    if n < 1:
        raise ValueError("n must be positive")
    _grow(n)
    return int(_mobius_table[n])


def totient(n: int) -> int:
    """Euler totient: count of 1 <= m <= n coprime to n."""
    if n < 1:
        raise ValueError("n must be positive")
    _grow(n)
    return int(_totient_table[n])


def totient_range(lo: int, hi: int) -> np.ndarray:
    """phi(n) for n in [lo, hi] inclusive, from the sieve."""
    _grow(hi)
    return _totient_table[lo : hi + 1].copy()


def totient_average(lam: float) -> float:
    """sum_{n <= lam} phi(n)/n; asymptotically 6 lam / pi^2 + O(log lam)."""
    if lam < 1:
        raise ValueError("lambda must be >= 1")
    top = int(math.floor(lam))
    _grow(top)
    n = np.arange(1, top + 1, dtype=float)
    return float(np.sum(_totient_table[1 : top + 1] / n))


def totient_density(a: float, b: float, lam: float, c0: float) -> int:
    """#{n in [a lam, b lam] : phi(n) >= (6/pi^2 - c0) n}."""
    if not (0 < a < b):
        raise ValueError("need 0 < a < b")
    if not (0 < c0 < 6 / math.pi**2):
        raise ValueError("c0 must lie in (0, 6/pi^2)")
    lo = int(math.ceil(a * lam))
    hi = int(math.floor(b * lam))
    if hi < lo:
        return 0
    phi = totient_range(lo, hi)
    n = np.arange(lo, hi + 1, dtype=float)
    return int(np.count_nonzero(phi >= (6 / math.pi**2 - c0) * n))


# ---------------------------------------------------------------------------
# quadratic Gauss sums

def gauss_sum_direct(p: int, b: int) -> complex:
    """sum_{n=0}^{p-1} exp(2 pi i (n^2 + b n)/p) by direct summation."""
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be odd and >= 3")
    n = np.arange(p, dtype=np.int64)
    e = (n * n + b * n) % p
    return complex(np.sum(np.exp(2j * np.pi * e / p)))


#: brute-force-determined fourth root of unity for p = 3 (mod 4).  The
#: direct sum at p=3, b=0 equals +i*sqrt(3), fixing the convention as the
#: conjugate of the printed one; the matching phase sign is PHASE_SIGN.
OMEGA_RESIDUE_3 = 1j
OMEGA_RESIDUE_1 = 1.0 + 0.0j
PHASE_SIGN = -1


@dataclass(frozen=True)
class GaussSumClosedForm:
    """Closed form omega_p sqrt(p) exp(2 pi i * PHASE_SIGN * m (q+1)^2 / p)."""

    p: int
    b: int
    omega_p: complex
    m: int

    def __post_init__(self):
        if self.p % 2 == 0 or self.p < 3:
            raise ValueError("p must be odd and >= 3")
        if (4 * self.m) % self.p != 1:
            raise ValueError("m must invert 4 modulo p")

    @property
    def value(self) -> complex:
        phase = 2.0 * np.pi * PHASE_SIGN * ((self.m * self.b * self.b) % self.p) / self.p
        return self.omega_p * math.sqrt(self.p) * complex(np.cos(phase), np.sin(phase))


def gauss_sum_closed(p: int, q: int) -> tuple[GaussSumClosedForm, complex]:
    """Closed form of the Gauss sum with linear coefficient b = q + 1.

    Requires odd p, even q, gcd(p, q) = 1.  Matches gauss_sum_direct(p, q+1)
    exactly under the oracle-fixed sign convention.
    """
    if p % 2 == 0 or p < 3:
        raise ValueError("p must be odd and >= 3")
    if q % 2 != 0:
        raise ValueError("q must be even")
    if math.gcd(p, q) != 1:
        raise ValueError("p and q must be coprime")
    m = pow(4, -1, p)
    omega = OMEGA_RESIDUE_1 if p % 4 == 1 else OMEGA_RESIDUE_3
    cf = GaussSumClosedForm(p=p, b=q + 1, omega_p=omega, m=m)
    return cf, cf.value

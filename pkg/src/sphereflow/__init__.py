"""Spectral numerics for linear and cubic Schrodinger flow on the two-sphere.

Submodules:
  spectral     real spherical harmonics, quadrature, transforms, linear flow
  arithmetic   Mobius / totient sieves and quadratic Gauss sums
  maximal      the deterministic maximal-estimate counterexample family
  random_data  Gaussian randomized data and Monte-Carlo moment checks
  nls          truncated Wick-ordered cubic NLS (Galerkin, Lawson RK4)
  regression   log-log power-law fitting
  experiments  deterministic experiment runners with tolerance verdicts
  cli          command-line front end writing CSV/SVG reports
"""
from . import arithmetic, experiments, maximal, nls, random_data, regression, spectral
from .regression import fit_exponent
from .spectral import SpectralField, SphereQuadrature, analyze, synthesize

__version__ = "0.1.0"

__all__ = [
    "arithmetic",
    "experiments",
    "maximal",
    "nls",
    "random_data",
    "regression",
    "spectral",
    "fit_exponent",
    "SpectralField",
    "SphereQuadrature",
    "analyze",
    "synthesize",
    "__version__",
]

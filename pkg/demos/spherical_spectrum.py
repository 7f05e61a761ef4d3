"""Tour of the spectral toolbox: harmonics, quadrature, norms.

Run:  python3 demos/spherical_spectrum.py
"""
import numpy as np

from sphereflow import spectral
from sphereflow.regression import fit_exponent

# --- the pointwise Weyl identity ------------------------------------------
# Under unit-mass surface measure the 2n+1 degree-n harmonics satisfy
# sum_k b_{n,k}(x)^2 = 2n+1 at every point x.
rng = np.random.default_rng(0)
theta, phi = np.arccos(rng.uniform(-1, 1)), rng.uniform(0, 2 * np.pi)
print("Weyl identity at a random point:")
for n in (1, 8, 64):
    print(f"  n={n:3d}  sum_k b^2 = {spectral.weyl_sum(n, theta, phi):.12f}"
          f"  (expect {2 * n + 1})")

# --- exact transforms ------------------------------------------------------
cutoff = 24
q = spectral.SphereQuadrature.for_degree(2 * cutoff)
m = spectral.num_modes(cutoff)
f = spectral.SpectralField(cutoff, rng.standard_normal(m) + 1j * rng.standard_normal(m))
g = spectral.synthesize(f, q)
back = spectral.analyze(g, q, cutoff)
print(f"\nsynthesize/analyze round trip error: "
      f"{np.max(np.abs(back.coeffs - f.coeffs)):.2e}")
print(f"Parseval: grid L2 = {spectral.lp_norm(g, 2.0, q):.12f}, "
      f"coefficient L2 = {f.l2_norm():.12f}")

# --- sharp eigenfunction families -----------------------------------------
# Highest-weight harmonics (x1+ix2)^n concentrate on the equator and
# saturate the L^p projector bounds for small p; zonal harmonics
# concentrate at the poles and saturate them for p >= 6.
ns = [16, 32, 64, 128, 256]
hw = [spectral.sogge_sharpness(n, 4.0)[0] for n in ns]
zo = [spectral.sogge_sharpness(n, 8.0)[1] for n in ns]
print("\nGrowth of L^p/L^2 ratios (fitted exponents):")
print(f"  highest weight, p=4: {fit_exponent(ns, hw).slope:+.4f}"
      f"  (theory {0.5 * (0.5 - 0.25):+.4f})")
print(f"  zonal,          p=8: {fit_exponent(ns, zo).slope:+.4f}"
      f"  (theory {0.5 - 0.25:+.4f})")

l2 = np.sqrt(spectral.highest_weight_l2_sq(np.array(ns, float)))
print(f"  ||(x1+ix2)^n||_L2:   {fit_exponent(ns, l2).slope:+.4f}  (theory -0.25)")

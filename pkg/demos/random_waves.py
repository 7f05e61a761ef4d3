"""Gaussian randomized data and its probabilistic estimates.

Run:  python3 demos/random_waves.py
"""
import math

import numpy as np

from sphereflow import random_data
from sphereflow.regression import fit_against, fit_exponent

# --- dyadic band moments of the randomized linear flow ---------------------
# The field phi_alpha = sum lambda_n^{-alpha} g_{n,k} b_{n,k} projected to
# the band lambda in (N/2, N] and pushed through the linear flow has
# second moment ~ N^{-(alpha-1)} at every point.
theta, az, t = 1.0, 0.7, 0.5
samples = 4000
bands = [16, 32, 64, 128]
table = random_data.shell_sum_table(0, max(bands), theta, az, samples)
print("Monte-Carlo band moments vs closed form:")
for alpha in (1.25, 2.0):
    spec = random_data.RandomDataSpec(alpha=alpha, cutoff=max(bands), seed=0)
    ests = []
    for N in bands:
        est = random_data.projected_moment_check(spec, N, 2.0, theta, az, t,
                                                 samples, shell_sums=table)
        closed = math.sqrt(random_data.expected_shell_mass(
            alpha, random_data.band_degrees(N)))
        ests.append(est.estimate)
        print(f"  alpha={alpha:<5} N={N:3d}: {est.estimate:.4f} "
              f"+/- {est.half_width:.4f} (closed {closed:.4f})")
    slope = fit_exponent(bands, ests).slope
    print(f"  -> fitted N-exponent {slope:+.3f}, theory {-(alpha - 1):+.3f}")

# --- Khinchine growth and Gaussian tails -----------------------------------
c = 1.0 / (np.arange(32) + 1.0)
norm = float(np.linalg.norm(c))
print("\nKhinchine: p-th moments of sum c_n g_n vs sqrt(p) ||c||:")
for p in (2.0, 6.0, 10.0):
    est = random_data.khinchine_check(c, p, 50000).estimate
    print(f"  p={p:4g}: {est:.4f} <= {math.sqrt(p) * norm:.4f}")

lam = norm * np.sqrt(np.linspace(1.0, 6.0, 6))
tail = random_data.tail_check(c, lam, 50000)
f = fit_against(lam**2, np.log(np.maximum(tail[:, 1], 1e-12)))
print(f"\nTail P(|sum| > lam): log-linear in lam^2 "
      f"(slope {f.slope:.3f}, R^2 {f.r_squared:.4f})")

# --- Wiener chaos of higher degree -----------------------------------------
print("\nWiener chaos L^p/L^2 ratios vs (p-1)^{k/2}:")
for k, m in ((1, 32), (2, 12), (3, 8)):
    coeffs = 1.0 / (np.indices((m,) * k).sum(axis=0) + 1.0)
    for p in (4.0,):
        ratio = random_data.wiener_chaos_check(coeffs, k, p, 50000)
        print(f"  k={k}, p={p:g}: {ratio:.3f} <= {(p - 1) ** (k / 2):.3f}")

"""The deterministic maximal-estimate counterexample, step by step.

The family f_N of bump-weighted highest-weight harmonics has a
Schrodinger maximal function that is large (of size N^{3/4} lam^N) on a
union of arcs around rationals 2 pi q / p with p ~ sqrt(N).  The lower
bound comes from quadratic Gauss sums via Poisson summation.

Run:  python3 demos/maximal_counterexample.py
"""
import math

import numpy as np

from sphereflow import arithmetic, maximal
from sphereflow.regression import fit_exponent

# --- Gauss sums: magnitude sqrt(p), explicit fourth-root-of-unity phase ----
print("Quadratic Gauss sums |sum e^{2 pi i (n^2+bn)/p}|:")
for p in (13, 101, 199):
    vals = [abs(arithmetic.gauss_sum_direct(p, b)) for b in range(p)]
    print(f"  p={p:3d}: all {p} magnitudes within "
          f"{max(abs(v - math.sqrt(p)) for v in vals):.1e} of sqrt(p)")

cf, closed = arithmetic.gauss_sum_closed(23, 4)
direct = arithmetic.gauss_sum_direct(23, 5)
print(f"  closed form (p=23, q=4): {closed:.6f} vs direct {direct:.6f}")

# --- the exceptional set and the certified lower bound ---------------------
print("\nCertificate min over arcs of MS_N / (N^{3/4} lam^N):")
for N in (64, 256, 1024):
    esc = maximal.build_exceptional_set(N)
    lam = 1.0 - N ** (-1.01)
    scan = maximal.maximal_scan(N, esc, [lam], "rational")
    print(f"  N={N:5d}: {esc.count:4d} disjoint arcs, measure "
          f"{esc.measure:.2e}, certificate {scan.certificate_min:.4f}")

# --- Poisson split: main Gauss-sum term + dual-frequency remainder ---------
N = 256
esc = maximal.build_exceptional_set(N)
rp = maximal.RationalPoint(int(esc.ps[10]), int(esc.qs[10]))
lam = 1.0 - N ** (-1.01)
main, rem = maximal.poisson_split(N, rp, lam)
direct = maximal.schrodinger_sum(N, rp.t, rp.theta, lam)
print(f"\nPoisson split at p={rp.p}, q={rp.q}: |main|={abs(main):.3f}, "
      f"|remainder|={abs(rem):.3f}, "
      f"relative mismatch {abs(main + rem - direct) / abs(direct):.1e}")

# --- the L^r norm scaling that falsifies the maximal estimate --------------
Ns = [64, 128, 256, 512]
r, s = 3.0, 0.3
ratios = [maximal.maximal_norm_ratio(N, r, s) for N in Ns]
print(f"\n||MS_N||_L{r:g} / ||f_N||_H{s:g} over N={Ns}:")
print("  " + ", ".join(f"{v:.4f}" for v in ratios))
print(f"  fitted growth exponent {fit_exponent(Ns, ratios).slope:+.3f} > 0: "
      "the maximal estimate fails below s = 1/2 - 1/(2r)")

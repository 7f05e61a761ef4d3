import cmath
import math

import numpy as np
import pytest
from scipy.integrate import quad

from sphereflow import maximal as mx


def brute_sum(N, t, theta, lam, profile=mx.DEFAULT_PROFILE):
    total = 0j
    for n in range(N // 2, 5 * N // 2 + 1):
        total += (profile(n / N) * cmath.exp(1j * t * n * (n + 1))
                  * cmath.exp(1j * n * theta) * lam ** n)
    return total


def test_profile_shape():
    prof = mx.DEFAULT_PROFILE
    assert prof(0.4) == 0.0
    assert prof(2.6) == 0.0
    assert prof(1.0) == 1.0
    assert prof(2.0) == 1.0
    # smooth ramp strictly between 0 and 1
    assert 0.0 < prof(0.6) < 1.0
    ys = np.linspace(0.5, 2.5, 101)
    vals = prof(ys)
    assert np.all(vals >= 0) and np.all(vals <= 1)


def test_schrodinger_sum_matches_brute_force():
    for N, t, theta, lam in ((8, 0.3, 1.1, 0.9), (16, 2.0, 4.0, 0.99),
                             (8, 0.0, 0.0, 0.0)):
        fast = mx.schrodinger_sum(N, t, theta, lam)
        assert fast == pytest.approx(brute_sum(N, t, theta, lam), abs=1e-10)


def test_schrodinger_sum_broadcast():
    th = np.array([0.1, 0.2, 0.3])
    lam = np.array([0.8, 0.9])
    out = mx.schrodinger_sum(16, 0.5, th[:, None], lam[None, :])
    assert out.shape == (3, 2)
    assert out[1, 0] == pytest.approx(mx.schrodinger_sum(16, 0.5, 0.2, 0.8))


def test_profile_transform_against_scipy():
    prof = mx.DEFAULT_PROFILE
    N, lam = 32, 0.995
    for xi in (0.0, 1.5):
        re = quad(lambda y: prof(y) * lam ** (N * y) * math.cos(2 * math.pi * y * xi),
                  prof.lo, prof.hi, limit=200)[0]
        im = quad(lambda y: -prof(y) * lam ** (N * y) * math.sin(2 * math.pi * y * xi),
                  prof.lo, prof.hi, limit=200)[0]
        val = mx.profile_transform(prof, N, lam, xi)
        assert val == pytest.approx(complex(re, im), abs=1e-8)


def test_rational_point_validation():
    rp = mx.RationalPoint(5, 2)
    assert rp.t == pytest.approx(2 * math.pi / 5)
    assert rp.theta == pytest.approx(4 * math.pi / 5)
    with pytest.raises(ValueError):
        mx.RationalPoint(4, 2)
    with pytest.raises(ValueError):
        mx.RationalPoint(5, 3)
    with pytest.raises(ValueError):
        mx.RationalPoint(9, 6)


def test_poisson_split_reproduces_direct_sum():
    for N, p, q in ((64, 11, 4), (128, 13, 2)):
        rp = mx.RationalPoint(p, q)
        lam = 1.0 - N ** (-1.01)
        direct = mx.schrodinger_sum(N, rp.t, rp.theta, lam)
        main, rem = mx.poisson_split(N, rp, lam)
        assert abs(main + rem - direct) / abs(direct) < 1e-8
        # the main term dominates the dual-frequency remainder
        assert abs(rem) < 0.5 * abs(main)


def test_exceptional_set_structure():
    esc = mx.build_exceptional_set(256)
    assert esc.is_disjoint()
    assert esc.count == esc.ps.size == esc.qs.size
    assert np.all(esc.ps % 2 == 1)
    assert np.all(esc.qs % 2 == 0)
    assert np.all(np.gcd(esc.ps, esc.qs) == 1)
    root = math.sqrt(256)
    assert np.all((esc.ps > root / 4) & (esc.ps < 4 * root))
    centers = esc.centers
    assert np.all((centers > 0) & (centers < math.pi))
    assert esc.measure == pytest.approx(2 * esc.radius * esc.count)


def test_certificate_positive_and_grid_consistent():
    N = 64
    esc = mx.build_exceptional_set(N)
    lam = 1.0 - N ** (-1.01)
    rational = mx.maximal_scan(N, esc, [lam], "rational")
    assert rational.certificate_min > 0
    # rational mode evaluates |S_N| at the certified rational time of each arc
    i = 3
    rp = mx.RationalPoint(int(esc.ps[i]), int(esc.qs[i]))
    direct = abs(mx.schrodinger_sum(N, rp.t, rp.theta, lam))
    assert rational.values[i, 0] == pytest.approx(direct)
    # grid mode: sup over a refined (nested) time grid can only grow,
    # and dominates any single grid time
    coarse = mx.maximal_scan(N, esc, [lam], "grid", grid_points=256)
    fine = mx.maximal_scan(N, esc, [lam], "grid", grid_points=1024)
    assert np.all(fine.values >= coarse.values * (1 - 1e-12))
    t0 = 2 * math.pi * 17 / 256
    sample = np.abs(mx.schrodinger_sum(N, t0, esc.centers, lam))
    assert np.all(coarse.values[:, 0] >= sample * (1 - 1e-12))


def test_sum_at_unit_radius_no_oscillation():
    # t=0, theta=0, lam=1 reduces to sum of profile weights > (3/2) N
    N = 64
    val = mx.schrodinger_sum(N, 0.0, 0.0, 1.0)
    assert val.imag == pytest.approx(0.0)
    assert val.real > 1.5 * N


def test_lower_bound_and_perturbation_at_256():
    N, C0 = 256, 4
    esc = mx.build_exceptional_set(N, C0)
    lam = 1.0 - N ** (-1.01)
    ref = N ** 0.75 * lam ** N
    i = esc.count // 2
    rp = mx.RationalPoint(int(esc.ps[i]), int(esc.qs[i]))
    center = mx.schrodinger_sum(N, rp.t, rp.theta, lam)
    # certified lower bound at the arc center
    assert abs(center) >= 0.5 * C0 ** -0.5 * ref
    # main term alone already dominates
    main, rem = mx.poisson_split(N, rp, lam)
    assert abs(main) >= C0 ** -0.5 * ref
    assert abs(rem) <= 0.5 * abs(main)
    # mean-value perturbation: moving within the arc changes S_N little
    for sign in (-1.0, 1.0):
        moved = mx.schrodinger_sum(N, rp.t, rp.theta + sign * esc.radius, lam)
        assert abs(moved - center) <= 0.25 * C0 ** -1.5 * ref


def test_hs_norm_scaling():
    # ||f_N||_{H^s} ~ N^{s + 1/4}
    s = 0.3
    a, b = mx.f_hs_norm(128, s), mx.f_hs_norm(512, s)
    slope = math.log(b / a) / math.log(4.0)
    assert slope == pytest.approx(s + 0.25, abs=0.02)


def test_lr_norm_positive_and_growing():
    a = mx.maximal_lr_norm(64, 3.0)
    b = mx.maximal_lr_norm(256, 3.0)
    assert 0 < a < b

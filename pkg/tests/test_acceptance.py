"""End-to-end acceptance sweep: every experiment at its reference
configuration, one pass/fail line per criterion.

Full run takes roughly 10-15 minutes; the heavy runners are shared
between criteria via memoization.
"""
import functools

from sphereflow import experiments


@functools.lru_cache(maxsize=None)
def run(name, **kw):
    return experiments.RUNNERS[name](**kw)


def check(criterion, result, names=None):
    verdicts = result.verdicts
    if names is not None:
        verdicts = [v for v in verdicts if v.name in names]
    ok = all(v.passed for v in verdicts)
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'}", flush=True)
    for v in verdicts:
        assert v.passed, f"{criterion} / {v.name}: {v.detail}"


def test_criterion_01_weyl_identity():
    check("01 weyl-identity", run("weyl-law"))


def test_criterion_02_gauss_sum():
    check("02 gauss-sum", run("gauss-sum"))


def test_criterion_03_totient_average():
    check("03 totient-average", run("totient"))


def test_criterion_04_counterexample_certificate():
    check("04 counterexample-certificate", run("counterexample"))


def test_criterion_05_maximal_norm_scaling():
    check("05 maximal-norm-scaling", run("maximal-scaling"))


def test_criterion_06_l2_norm_asymptotics():
    check("06 l2-norm-asymptotics", run("sogge"),
          names={"highest_weight_l2_decay"})


def test_criterion_07_sogge_sharpness():
    check("07 sogge-sharpness", run("sogge"),
          names={"highest_weight_p4", "highest_weight_p6",
                 "zonal_p8", "zonal_p10"})


def test_criterion_08_randomized_moments():
    check("08 randomized-moments", run("random-moments"))


def test_criterion_09_khinchine_chaos():
    check("09 khinchine-chaos", run("chaos"))


def test_criterion_10_galerkin_integrity():
    check("10 galerkin-integrity", run("nls-evolve"))


def test_criterion_11_picard_log_growth():
    check("11 picard-log-growth", run("picard"))


def test_criterion_12_convergence_experiments():
    check("12a linear-convergence", run("linear-convergence"))
    check("12b nonlinear-convergence", run("nls-pointwise"))

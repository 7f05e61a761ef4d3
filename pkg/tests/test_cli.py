import numpy as np
import pytest

from sphereflow import cli
from sphereflow.regression import fit_exponent


def read_sections(path):
    config, data = [], []
    for line in path.read_text().splitlines():
        if line.startswith("# generated="):
            continue
        (config if line.startswith("#") else data).append(line)
    return config, data


def test_weyl_subcommand_writes_report(tmp_path):
    rc = cli.main(["--out-dir", str(tmp_path), "weyl-law",
                   "n_max=8", "points=20"])
    assert rc == 0
    report = tmp_path / "weyl-law.csv"
    config, data = read_sections(report)
    assert "# n_max=8" in config
    assert "# points=20" in config
    assert any(line.startswith("# verdict: weyl_identity: PASS")
               for line in config)
    assert data[0] == "n,max_residual"
    assert len(data) == 10  # header + one row per degree


def test_rerun_is_byte_identical_modulo_timestamp(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for d in (a, b):
        cli.main(["--out-dir", str(d), "gauss-sum", "p_max=19"])
    ca, da = read_sections(a / "gauss-sum.csv")
    cb, db = read_sections(b / "gauss-sum.csv")
    assert ca == cb and da == db


def test_unknown_parameter_rejected(tmp_path):
    with pytest.raises(SystemExit):
        cli.main(["--out-dir", str(tmp_path), "weyl-law", "bogus=3"])
    with pytest.raises(SystemExit):
        cli.main(["--out-dir", str(tmp_path), "weyl-law", "n_max"])
    with pytest.raises(SystemExit):
        cli.main(["--out-dir", str(tmp_path), "weyl-law", "n_max=abc"])


def test_unknown_subcommand_rejected(tmp_path):
    with pytest.raises(SystemExit):
        cli.main(["--out-dir", str(tmp_path), "no-such-thing"])


def test_seed_recorded(tmp_path):
    cli.main(["--seed", "42", "--out-dir", str(tmp_path), "totient",
              "decade_max=3"])
    config, _ = read_sections(tmp_path / "totient.csv")
    assert "# seed=42" in config


def test_svg_plot(tmp_path):
    cli.main(["--out-dir", str(tmp_path), "--plot", "totient"])
    assert (tmp_path / "totient.svg").exists()


def test_fit_exponent_exact_square():
    x = np.array([1.0, 2.0, 3.0, 4.0])
    f = fit_exponent(x, x**2)
    assert f.slope == pytest.approx(2.0)
    assert f.r_squared == pytest.approx(1.0)


def test_fit_exponent_noisy():
    rng = np.random.default_rng(0)
    x = np.linspace(1, 50, 30)
    y = 3 * x**0.75 * (1 + 0.01 * rng.standard_normal(30))
    f = fit_exponent(x, y)
    assert f.slope == pytest.approx(0.75, abs=0.02)


def test_fit_exponent_constant():
    f = fit_exponent([1.0, 2.0, 4.0], [5.0, 5.0, 5.0])
    assert f.slope == pytest.approx(0.0)


def test_fit_exponent_rejects_nonpositive():
    with pytest.raises(ValueError):
        fit_exponent([1.0, 2.0], [0.0, 1.0])
    with pytest.raises(ValueError):
        fit_exponent([-1.0, 2.0], [1.0, 1.0])

"""Command-line front end: one subcommand per verification experiment.

Each run writes `<experiment>.csv` into the output directory: a comment
header echoing the full configuration, a timestamp line, the data table,
and one trailing comment line per verdict.  Re-running an identical
configuration reproduces the file byte-for-byte except for the timestamp
line.  Exit status is 0 exactly when every verdict passes.
"""
from __future__ import annotations

import argparse
import datetime
import inspect
import os
import sys

from . import experiments
from .experiments import ExperimentResult


def _runner_params(name: str) -> dict:
    """Tunable key=value parameters of a subcommand (name -> default)."""
    sig = inspect.signature(experiments.RUNNERS[name])
    return {
        k: p.default
        for k, p in sig.parameters.items()
        if k not in ("seed", "threads")
    }


def parse_params(name: str, pairs: list) -> dict:
    defaults = _runner_params(name)
    out = {}
    for item in pairs:
        if "=" not in item:
            raise SystemExit(f"error: expected key=value, got {item!r}")
        key, _, raw = item.partition("=")
        if key not in defaults:
            raise SystemExit(
                f"error: unknown parameter {key!r} for {name}; "
                f"valid: {', '.join(sorted(defaults))}"
            )
        kind = type(defaults[key])
        try:
            out[key] = kind(raw)
        except ValueError:
            raise SystemExit(
                f"error: parameter {key}={raw!r} is not a valid {kind.__name__}"
            )
    return out


def format_value(v) -> str:
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def write_csv(path: str, result: ExperimentResult, seed: int) -> None:
    lines = [f"# experiment={result.name}", f"# seed={seed}"]
    for key in sorted(result.config):
        if key == "seed":
            continue
        lines.append(f"# {key}={format_value(result.config[key])}")
    stamp = datetime.datetime.now(datetime.timezone.utc).isoformat()
    lines.append(f"# generated={stamp}")
    lines.append(",".join(result.columns))
    for row in result.rows:
        lines.append(",".join(format_value(v) for v in row))
    for vline in result.verdict_lines():
        lines.append(f"# verdict: {vline}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def write_svg(path: str, result: ExperimentResult) -> bool:
    """Log-log plot of the first two numeric columns; purely presentational."""
    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        return False
    xs, ys = [], []
    for row in result.rows:
        nums = [v for v in row if isinstance(v, (int, float))]
        if len(nums) >= 2 and nums[0] > 0 and nums[1] > 0:
            xs.append(nums[0])
            ys.append(nums[1])
    if len(xs) < 2:
        return False
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.loglog(xs, ys, "o-")
    ax.set_title(result.name)
    ax.set_xlabel(result.columns[0])
    ax.set_ylabel(result.columns[1])
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)
    return True


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sphereflow",
        description="Spectral experiments for Schrodinger flow on the sphere",
    )
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out-dir", default=".")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--plot", action="store_true",
                        help="also write an SVG log-log plot")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in experiments.RUNNERS:
        sp = sub.add_parser(name, help=f"run the {name} experiment")
        sp.add_argument("params", nargs="*", metavar="key=value",
                        help=f"overrides: {', '.join(sorted(_runner_params(name)))}")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    params = parse_params(args.subcommand, args.params)
    runner = experiments.RUNNERS[args.subcommand]
    result = runner(seed=args.seed, threads=args.threads, **params)

    os.makedirs(args.out_dir, exist_ok=True)
    csv_path = os.path.join(args.out_dir, f"{result.name}.csv")
    write_csv(csv_path, result, args.seed)
    if args.plot:
        svg_path = os.path.join(args.out_dir, f"{result.name}.svg")
        write_svg(svg_path, result)

    for line in result.verdict_lines():
        print(line)
    print(f"report: {csv_path}")
    return 0 if result.passed else 1


if __name__ == "__main__":
    sys.exit(main())

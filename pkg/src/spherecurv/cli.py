"""Command-line interface: surface analysis, identity sweeps, catalog checks.

Exit codes: 0 on success, 2 on configuration errors, 3 when a numerical or
algebraic verification fails (identity counterexample, failing catalog check,
or too many projection failures during analysis).

The report goes to stdout (or --output) in JSON or CSV; a short human summary
goes to stderr. Color is used on the stderr summary only when it is a TTY and
NO_COLOR is unset.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import time

from .catalog import all_models, cartan_level, checks_passed, model_check
from .fields import cartan_field, coordinate_field
from .identities import IDENTITY_NAMES, run_identity_sweep
from .report import (
    build_report,
    catalog_payload,
    stats_payload,
    to_csv,
    to_json,
    verdicts_payload,
)
from .shape import SweepTolerances, sweep_analyze
from .sphere import LevelSpec

SURFACES = ("equator", "cartan")


class ConfigError(Exception):
    """Invalid flag combination or value; maps to exit code 2."""


def parse_angle(text: str) -> float:
    """Parse an angle given as decimal radians or as the literal pi/N."""
    s = text.strip().lower()
    if s.startswith("pi/"):
        try:
            denom = int(s[3:])
        except ValueError:
            raise ConfigError(f"bad angle literal {text!r}; expected pi/N or radians") from None
        if denom <= 0:
            raise ConfigError(f"bad angle literal {text!r}; denominator must be positive")
        return math.pi / denom
    try:
        value = float(s)
    except ValueError:
        raise ConfigError(f"bad angle {text!r}; expected pi/N or decimal radians") from None
    if not math.isfinite(value):
        raise ConfigError(f"angle must be finite, got {text!r}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (value > 0.0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"must be a positive finite number, got {text!r}")
    return value


def _color(text: str, code: str) -> str:
    if os.environ.get("NO_COLOR"):
        return text
    if not sys.stderr.isatty():
        return text
    return f"\x1b[{code}m{text}\x1b[0m"


def _ok(flag: bool) -> str:
    return _color("ok", "32") if flag else _color("FAIL", "31")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="root RNG seed (default 0)")
    common.add_argument("--format", choices=("json", "csv"), default="json",
                        help="report format (default json)")
    common.add_argument("--output", metavar="PATH", default=None,
                        help="write the report to PATH instead of stdout")
    common.add_argument("--workers", type=_positive_int, default=1,
                        help="parallel sweep workers (default 1, deterministic)")

    parser = argparse.ArgumentParser(
        prog="spherecurv",
        description="Curvature analysis of level surfaces in the unit 5-sphere "
                    "and exact verification of the related algebraic identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", parents=[common],
                          help="sample a level surface and report curvature invariants")
    p_an.add_argument("--surface", choices=SURFACES, required=True,
                      help="which surface family to sample")
    p_an.add_argument("--t", metavar="ANGLE", default=None,
                      help="cartan family parameter in (0, pi/4); radians or pi/N")
    p_an.add_argument("--samples", type=_positive_int, default=200,
                      help="number of surface points (default 200)")
    p_an.add_argument("--tol", type=_positive_float, default=1e-8,
                      help="mean-curvature threshold for the verdict (default 1e-8)")

    p_ve = sub.add_parser("verify", parents=[common],
                          help="run one exact identity sweep over random inputs")
    p_ve.add_argument("--identity", choices=sorted(IDENTITY_NAMES), required=True,
                      help="which identity to sweep")
    p_ve.add_argument("--trials", type=_positive_int, default=1000,
                      help="number of random trials (default 1000)")
    p_ve.add_argument("--height", type=_positive_int, default=1000,
                      help="max |numerator|, |denominator| of random rationals (default 1000)")

    sub.add_parser("catalog", parents=[common],
                   help="list the closed-form models and run their consistency checks")
    return parser


def _config_echo(args: argparse.Namespace, **extra) -> dict:
    echo = {
        "surface": None,
        "t": None,
        "level": None,
        "samples": None,
        "seed": args.seed,
        "tol": None,
        "trials": None,
        "identity": None,
        "height": None,
        "output": args.output,
        "format": args.format,
        "workers": args.workers,
    }
    echo.update(extra)
    return echo


def _emit(report: dict, args: argparse.Namespace) -> None:
    if args.format == "json":
        text = to_json(report)
    else:
        text = to_csv(report["command"], report["results"])
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run_analyze(args: argparse.Namespace) -> int:
    t = None
    if args.surface == "equator":
        spec = LevelSpec(coordinate_field(5), 0.0)
        level = 0.0
    else:
        if args.t is None:
            raise ConfigError("--t is required for --surface cartan")
        t = parse_angle(args.t)
        if not 0.0 < t < math.pi / 4:
            raise ConfigError(f"--t must lie strictly between 0 and pi/4, got {t!r}")
        level = cartan_level(t)
        spec = LevelSpec(cartan_field(), level)

    tols = SweepTolerances(f1_tol=args.tol)
    start = time.perf_counter()
    try:
        stats = sweep_analyze(spec, args.samples, args.seed, tols, args.workers)
    except RuntimeError as exc:
        print(f"analyze: {exc}", file=sys.stderr)
        return 3
    timing = time.perf_counter() - start

    config = _config_echo(args, surface=args.surface, t=t, level=level,
                          samples=args.samples, tol=args.tol)
    report = build_report("analyze", config, stats_payload(stats), timing)
    _emit(report, args)
    verdict_ok = stats.verdict != "inconclusive"
    print(
        f"analyze {args.surface}: {stats.n_points} points, "
        f"{stats.n_failures} projection failures, "
        f"max|f1|={stats.max_abs_f1:.3e}, verdict {stats.verdict} [{_ok(verdict_ok)}]",
        file=sys.stderr,
    )
    return 0


def _run_verify(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    verdict = run_identity_sweep(args.identity, args.trials, args.seed,
                                 height=args.height, workers=args.workers)
    timing = time.perf_counter() - start

    config = _config_echo(args, identity=args.identity, trials=args.trials,
                          height=args.height)
    report = build_report("verify", config, verdicts_payload([verdict]), timing)
    _emit(report, args)
    passed = verdict.failures == 0
    mode = "exact" if verdict.exact else "float"
    print(
        f"verify {args.identity}: {verdict.trials} trials ({mode}), "
        f"{verdict.failures} failures [{_ok(passed)}]",
        file=sys.stderr,
    )
    return 0 if passed else 3


def _run_catalog(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    entries = [(model, model_check(model)) for model in all_models()]
    timing = time.perf_counter() - start

    report = build_report("catalog", _config_echo(args), catalog_payload(entries), timing)
    _emit(report, args)
    all_ok = True
    for model, checks in entries:
        ok = checks_passed(checks)
        all_ok = all_ok and ok
        print(
            f"catalog {model.name}: g={model.g} S={model.S_expected} "
            f"R={model.R_expected} checks {len(checks)} [{_ok(ok)}]",
            file=sys.stderr,
        )
    return 0 if all_ok else 3


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    runners = {"analyze": _run_analyze, "verify": _run_verify, "catalog": _run_catalog}
    try:
        return runners[args.command](args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end for the verification suite and its data products.

Subcommands:

* ``verify`` -- run every verification check and print one report line per
  check (name, computed value, target, PASS/FAIL).  Check details go to
  standard error.  Exit status 0 when everything passes, 1 when a check
  fails, 3 when a check could not converge numerically.
* ``curve`` -- emit (abscissa, ordinate) rows for a named objective curve at
  the canonical evaluation grid of the corresponding supremum search, for
  downstream plotting.
* ``table`` -- emit a named summary table (norm bounds, modulus-mean band
  grid, unboundedness witnesses).
* ``list`` -- enumerate the registered check, curve, and table names.

All data output goes to standard out; diagnostics go to standard error.
Identical configuration produces byte-identical output.  CSV uses comma
separators, 17 significant digits, and '#'-prefixed comment lines carrying
the package version and the active configuration; JSON carries the same
payload as one object.
"""

import argparse
import dataclasses
import json
import math
import sys

from . import __version__
from .norms import i_c
from .quadrature import QuadratureError
from .specfun import gamma
from .supsearch import DivergenceError, halfline_grid, unit_grid
from .verification import (
    CHECK_NAMES,
    DEFAULT_ALPHA_GRID,
    alpha_bound_values,
    bloch_a_objective,
    bloch_b_objective,
    h1_sup_objective,
    hinf_objective,
    hinf_sup_objective,
    run_all,
    unboundedness_profile,
)

_FORMATS = ("csv", "json")

# (c, r) grid of the modulus-mean band table; c spans both signs of the
# weight exponent plus the logarithmic borderline, r reaches deep enough to
# expose the r -> 1 asymptotics.
_BAND_CS = (-0.7, -0.5, -0.3, 0.0, 0.3, 0.5, 0.7)
_BAND_RS = (0.1, 0.5, 0.9, 0.99)

_WITNESS_ALPHAS = (0.5, 2.0, 2.5)


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """Reproducible run parameters shared by every subcommand."""

    tolerance: float = 1e-8
    truncation: int = 2048
    alpha_grid: tuple = DEFAULT_ALPHA_GRID
    output_format: str = "csv"
    seed: int = 1729

    def __post_init__(self):
        if not self.tolerance > 0.0:
            raise ValueError("tolerance must be positive")
        if int(self.truncation) != self.truncation or self.truncation < 16:
            raise ValueError("truncation must be an integer >= 16")
        if self.output_format not in _FORMATS:
            raise ValueError(
                f"output_format must be one of {', '.join(_FORMATS)}")
        if int(self.seed) != self.seed or self.seed < 0:
            raise ValueError("seed must be a non-negative integer")
        grid = tuple(float(a) for a in self.alpha_grid)
        if not grid:
            raise ValueError("alpha_grid must not be empty")
        for a in grid:
            if not 1.001 <= a <= 1.999:
                raise ValueError(
                    f"alpha_grid entry {a:g} outside the window "
                    "[1.001, 1.999]")
        object.__setattr__(self, "alpha_grid", grid)
        object.__setattr__(self, "truncation", int(self.truncation))
        object.__setattr__(self, "seed", int(self.seed))

    def summary(self):
        grid = ",".join(format(a, "g") for a in self.alpha_grid)
        return (f"tolerance={self.tolerance:g} truncation={self.truncation} "
                f"seed={self.seed} alpha_grid={grid} "
                f"format={self.output_format}")


def _config_from_args(args):
    """Merge defaults, optional JSON config file, and explicit flags (flags
    win)."""
    fields = {f.name for f in dataclasses.fields(RunConfig)}
    data = {}
    path = getattr(args, "config", None)
    if path:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
        if not isinstance(raw, dict):
            raise ValueError("config file must hold a JSON object")
        unknown = sorted(set(raw) - fields)
        if unknown:
            raise ValueError(
                f"unknown config keys: {', '.join(unknown)}; valid keys: "
                f"{', '.join(sorted(fields))}")
        data.update(raw)
    for field, attr in (("tolerance", "tol"), ("truncation", "trunc"),
                        ("seed", "seed"), ("output_format", "format")):
        value = getattr(args, attr, None)
        if value is not None:
            data[field] = value
    if "alpha_grid" in data:
        data["alpha_grid"] = tuple(float(a) for a in data["alpha_grid"])
    return RunConfig(**data)


def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _fmt_target(target):
    if isinstance(target, tuple):
        lo, hi = target
        return f"({_fmt(float(lo))}..{_fmt(float(hi))})"
    return _fmt(float(target))


def _emit(name, columns, rows, config, out):
    """Write one data product in the configured format."""
    if config.output_format == "json":
        payload = {
            "version": __version__,
            "config": {
                "tolerance": config.tolerance,
                "truncation": config.truncation,
                "alpha_grid": list(config.alpha_grid),
                "output_format": config.output_format,
                "seed": config.seed,
            },
            "name": name,
            "columns": list(columns),
            "rows": [list(row) for row in rows],
        }
        out.write(json.dumps(payload, indent=2))
        out.write("\n")
        return
    out.write(f"# hilbertnorm {__version__}\n")
    out.write(f"# config: {config.summary()}\n")
    out.write(f"# {name}\n")
    out.write(",".join(columns) + "\n")
    for row in rows:
        out.write(",".join(_fmt(v) for v in row) + "\n")


# ---------------------------------------------------------------------------
# curve registry
# ---------------------------------------------------------------------------


def _inner_tolerance(tol):
    return max(1e-12, 0.01 * tol)


def _unit_curve_rows(objective, points):
    _, rs = unit_grid(points)
    return [(float(r), float(objective(float(r)))) for r in rs]


def _halfline_curve_rows(objective, points):
    xs = halfline_grid(points)
    return [(float(x), float(objective(float(x)))) for x in xs]


def _curve_bloch_a(config, points):
    return _unit_curve_rows(
        bloch_a_objective(_inner_tolerance(config.tolerance)), points)


def _curve_bloch_b(config, points):
    return _unit_curve_rows(
        bloch_b_objective(_inner_tolerance(config.tolerance)), points)


def _curve_h1_sup(config, points):
    return _halfline_curve_rows(h1_sup_objective, points)


def _curve_hinf_sup(config, points):
    return _halfline_curve_rows(hinf_sup_objective, points)


def _curve_hinf(config, points):
    return _unit_curve_rows(hinf_objective, points)


def _curve_alpha_bounds(config, points):
    if points is None:
        grid = config.alpha_grid
    else:
        lo, hi = min(config.alpha_grid), max(config.alpha_grid)
        step = (hi - lo) / (points - 1) if points > 1 else 0.0
        grid = tuple(lo + i * step for i in range(points))
    rows = []
    for a in grid:
        lower, upper = alpha_bound_values(float(a))
        rows.append((float(a), lower, upper))
    return rows


CURVES = {
    "bloch-A-objective": (("r", "value"), _curve_bloch_a),
    "bloch-B-objective": (("r", "value"), _curve_bloch_b),
    "h1-sup-objective": (("x", "value"), _curve_h1_sup),
    "hinf-sup-objective": (("x", "value"), _curve_hinf_sup),
    "hinf-objective": (("r", "value"), _curve_hinf),
    "alpha-bounds": (("alpha", "lower", "upper"), _curve_alpha_bounds),
}


# ---------------------------------------------------------------------------
# table registry
# ---------------------------------------------------------------------------


def _table_norm_summary(config):
    rows = [
        ("B", "B_log", 1.5, 1.5, 1.5),
        ("Hinf", "Hinf_log", 1.0, 1.0, 1.0),
        ("H1", "H1_log", math.pi, 2.0 * math.pi, None),
    ]
    for a in config.alpha_grid:
        lower, upper = alpha_bound_values(float(a))
        label = format(a, "g")
        rows.append((f"B^{label}", f"B^{label}_log", lower, upper, None))
    return rows


def _band_bounds(c, r, value):
    """Compared quantity and its two-sided band for one (c, r) cell."""
    if c < 0.0:
        compared = value
        upper = gamma(-c) / gamma((1.0 - c) / 2.0) ** 2
        return compared, 1.0, upper
    if c > 0.0:
        compared = (1.0 - r * r) ** c * value
        upper = gamma(c) / gamma((1.0 + c) / 2.0) ** 2
        return compared, 1.0, upper
    compared = r * r * value / (-math.log1p(-(r * r)))
    return compared, 1.0 / math.pi, 1.0


def _table_ic_bound_grid(config):
    slack = max(config.tolerance, 1e-10)
    rows = []
    for c in _BAND_CS:
        for r in _BAND_RS:
            value = i_c(c, r, max(1e-10, 0.01 * config.tolerance))
            compared, lower, upper = _band_bounds(c, r, value)
            within = lower - slack <= compared <= upper + slack
            rows.append((c, r, value, compared, lower, upper, within))
    return rows


def _table_witnesses(config):
    rows = []
    for alpha in _WITNESS_ALPHAS:
        js, rs, vals = unboundedness_profile(alpha)
        for j, r, v in zip(js, rs, vals):
            rows.append((alpha, int(j), float(r), float(v)))
    return rows


TABLES = {
    "norm-summary": (
        ("source", "target", "lower", "upper", "exact"), _table_norm_summary),
    "ic-bound-grid": (
        ("c", "r", "value", "compared", "lower", "upper", "within"),
        _table_ic_bound_grid),
    "unboundedness-witnesses": (
        ("alpha", "j", "r", "value"), _table_witnesses),
}


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_verify(config, out=None, err=None):
    """Run every check; report one line per check.  Returns the exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    out.write(f"# hilbertnorm {__version__}\n")
    out.write(f"# config: {config.summary()}\n")
    reports = run_all(tol=config.tolerance, truncation=config.truncation,
                      seed=config.seed, alpha_grid=config.alpha_grid)
    nonconvergent = False
    all_passed = True
    for report in reports:
        status = "PASS" if report.passed else "FAIL"
        out.write(f"{report.name},{_fmt(report.computed)},"
                  f"{_fmt_target(report.target)},{status}\n")
        err.write(f"# {report.name}: {report.detail}\n")
        all_passed = all_passed and report.passed
        if math.isnan(report.computed):
            nonconvergent = True
    if nonconvergent:
        return 3
    return 0 if all_passed else 1


def cmd_curve(name, config, points=None, out=None):
    """Emit one registered curve.  Returns the exit code."""
    out = sys.stdout if out is None else out
    columns, builder = CURVES[name]
    rows = builder(config, points)
    _emit(name, columns, rows, config, out)
    return 0


def cmd_table(name, config, out=None):
    """Emit one registered table.  Returns the exit code."""
    out = sys.stdout if out is None else out
    columns, builder = TABLES[name]
    rows = builder(config)
    _emit(name, columns, rows, config, out)
    return 0


def cmd_list(out=None):
    """Enumerate the check, curve, and table registries."""
    out = sys.stdout if out is None else out
    out.write("checks:\n")
    for name in CHECK_NAMES:
        out.write(f"  {name}\n")
    out.write("curves:\n")
    for name in CURVES:
        out.write(f"  {name}\n")
    out.write("tables:\n")
    for name in TABLES:
        out.write(f"  {name}\n")
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hilbertnorm",
        description="Verified numerics for integral-operator norm bounds "
                    "on analytic function spaces of the unit disk.")
    parser.add_argument("--version", action="version",
                        version=f"hilbertnorm {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH",
                        help="JSON file with RunConfig fields; explicit "
                             "flags override it")

    p_verify = sub.add_parser(
        "verify", parents=[common],
        help="run all verification checks")
    p_verify.add_argument("--tol", type=float, metavar="T",
                          help="check tolerance (default 1e-8)")
    p_verify.add_argument("--trunc", type=int, metavar="N",
                          help="series truncation order (default 2048)")
    p_verify.add_argument("--seed", type=int, metavar="S",
                          help="seed for randomized checks (default 1729)")

    p_curve = sub.add_parser(
        "curve", parents=[common],
        help="emit a named objective curve as CSV or JSON")
    p_curve.add_argument("name", help="curve name (see 'list')")
    p_curve.add_argument("--format", choices=_FORMATS,
                         help="output format (default csv)")
    p_curve.add_argument("--points", type=int, metavar="P",
                         help="number of grid points (default 512; "
                              "alpha-bounds defaults to the alpha grid)")

    p_table = sub.add_parser(
        "table", parents=[common],
        help="emit a named summary table as CSV or JSON")
    p_table.add_argument("name", help="table name (see 'list')")
    p_table.add_argument("--format", choices=_FORMATS,
                         help="output format (default csv)")

    sub.add_parser("list", help="list check, curve, and table names")
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.command == "list":
        return cmd_list()

    try:
        config = _config_from_args(args)
        if args.command == "verify":
            return cmd_verify(config)
        points = getattr(args, "points", None)
        if points is not None and points < 2:
            raise ValueError("--points must be at least 2")
        if args.command == "curve":
            if args.name not in CURVES:
                raise ValueError(
                    f"unknown curve '{args.name}'; valid names: "
                    f"{', '.join(CURVES)}")
            return cmd_curve(args.name, config, points)
        if args.name not in TABLES:
            raise ValueError(
                f"unknown table '{args.name}'; valid names: "
                f"{', '.join(TABLES)}")
        return cmd_table(args.name, config)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (QuadratureError, DivergenceError) as exc:
        print(f"error: numerical non-convergence: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

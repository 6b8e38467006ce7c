"""Command-line front end: evaluate, tabulate, verify, export CSV/JSON.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3
numerical-tolerance failure from the quadrature oracle.  Output is
deterministic: identical flags (including seed) produce byte-identical
bytes.  Floats are written with shortest round-trip formatting.  If the
environment variable GAUSSCUBE_OUT_DIR is set, relative ``--output`` paths
are resolved inside it.

The ``general`` distribution takes the true mean and standard deviation of
the Gaussian; the rescaling onto the variance-1/2 base integral
(sigma_base = sd * sqrt2) happens internally.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass

from . import asymptotics, moments, verification
from .charfn import charfn_cube_half, charfn_cube_sigma, charfn_cube_std
from .density import DensityPoleError, cdf_cube_half, density_cube_half, density_cube_sigma
from .distributions import TWO_SQRT2, GaussianSpec
from .montecarlo import SampleRun, sample_cube
from .quadrature import DEFAULT_CONFIG, QuadratureToleranceError, oracle_charfn_cube_half, oracle_charfn_general
from .special_functions import ORDER_THIRD, bessel_k

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_TOLERANCE = 3

OUT_DIR_ENV = "GAUSSCUBE_OUT_DIR"

_TINY = 1e-300


@dataclass(frozen=True)
class TabulationRow:
    """One verification row: closed form vs oracle at a point t."""

    t: float
    closed_form: float
    oracle: float
    abs_err: float
    rel_err: float

    @classmethod
    def build(cls, t: float, closed_form: float, oracle: float) -> "TabulationRow":
        abs_err = abs(closed_form - oracle)
        return cls(t, closed_form, oracle, abs_err, abs_err / max(abs(closed_form), _TINY))


class UsageError(Exception):
    pass


def _fmt(value) -> str:
    return repr(value) if isinstance(value, float) else str(value)


def _render(header: list[str], rows: list[tuple], fmt: str) -> str:
    if fmt == "json":
        payload = [dict(zip(header, row)) for row in rows]
        return json.dumps(payload, indent=2) + "\n"
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    return buffer.getvalue()


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    out_dir = os.environ.get(OUT_DIR_ENV)
    if out_dir and not os.path.isabs(output):
        output = os.path.join(out_dir, output)
    os.makedirs(os.path.dirname(output) or ".", exist_ok=True)
    with open(output, "w", newline="") as handle:
        handle.write(text)


def _parse_grid(args, flag_value: float | None, flag_grid: str | None, name: str) -> list[float]:
    if (flag_value is None) == (flag_grid is None):
        raise UsageError(f"exactly one of --{name} and --{name}-grid is required")
    if flag_value is not None:
        return [flag_value]
    try:
        start_s, stop_s, count_s = flag_grid.split(":")
        start, stop, count = float(start_s), float(stop_s), int(count_s)
    except ValueError as exc:
        raise UsageError(f"--{name}-grid wants start:stop:count, got {flag_grid!r}") from exc
    if count < 1:
        raise UsageError("grid count must be >= 1")
    if count == 1:
        return [start]
    step = (stop - start) / (count - 1)
    return [start + i * step for i in range(count)]


# ----------------------------------------------------------------------
# Subcommands
# ----------------------------------------------------------------------


def cmd_charfn(args) -> int:
    grid = _parse_grid(args, args.t, args.t_grid, "t")
    cfg = DEFAULT_CONFIG

    if args.dist == "general":
        if args.mu is None or args.sigma is None:
            raise UsageError("--dist general requires --mu and --sigma")
        spec = GaussianSpec(args.mu, args.sigma)
        rows = []
        for t in grid:
            res = oracle_charfn_general(spec, t, cfg)
            rows.append((t, res.value.real, res.value.imag, res.est_error))
        _emit(_render(["t", "re", "im", "est_error"], rows, args.format), args.output)
        return EXIT_OK

    if args.dist == "half":
        closed = lambda t: charfn_cube_half(t).re
        reduced = lambda t: t
    elif args.dist == "std":
        closed = lambda t: charfn_cube_std(t).re
        reduced = lambda t: TWO_SQRT2 * t
    else:
        if args.sigma is None:
            raise UsageError("--dist sigma requires --sigma")
        sigma = args.sigma
        closed = lambda t: charfn_cube_sigma(sigma, t).re
        reduced = lambda t: TWO_SQRT2 * (sigma**3 * t)

    rows = []
    for t in grid:
        row = TabulationRow.build(t, closed(t), oracle_charfn_cube_half(reduced(t), cfg).value)
        rows.append((row.t, row.closed_form, row.oracle, row.abs_err, row.rel_err))
    _emit(_render(["t", "closed_form", "oracle", "abs_err", "rel_err"], rows, args.format), args.output)
    return EXIT_OK


def cmd_density(args) -> int:
    grid = _parse_grid(args, args.x, args.x_grid, "x")
    fn = density_cube_half if args.sigma is None else (lambda x: density_cube_sigma(args.sigma, x))
    rows = [(x, fn(x)) for x in grid]
    _emit(_render(["x", "density"], rows, args.format), args.output)
    return EXIT_OK


def cmd_cdf(args) -> int:
    grid = _parse_grid(args, args.x, args.x_grid, "x")
    rows = [(x, cdf_cube_half(x)) for x in grid]
    _emit(_render(["x", "cdf"], rows, args.format), args.output)
    return EXIT_OK


def cmd_moments(args) -> int:
    ks = range(args.k, args.k + 1) if args.max_k is None else range(args.max_k + 1)
    rows = []
    for k in ks:
        m = moments.moment(k)
        rows.append((2 * k, f"{m.numerator}/{m.denominator}", float(m)))
    _emit(_render(["order", "exact", "float"], rows, args.format), args.output)
    return EXIT_OK


def cmd_carleman(args) -> int:
    sums = moments.carleman_partial_sums(args.terms)
    rows = []
    for k, total in enumerate(sums, start=1):
        rows.append((k, moments.carleman_term(k), total))
    _emit(_render(["k", "term", "partial_sum"], rows, args.format), args.output)
    return EXIT_OK


def cmd_asympt(args) -> int:
    if args.t is not None:
        if args.t <= 0.0:
            raise UsageError("--t must be > 0 for truncated evaluation")
        z = 2.0 / (27.0 * args.t * args.t)
        reference = bessel_k(ORDER_THIRD, z).value
        rows = []
        for n in range(args.max_order + 1):
            truncated = asymptotics.eval_truncated(args.t, n)
            rows.append((n, truncated, reference, abs(truncated - reference), asymptotics.next_term_bound(args.t, n)))
        header = ["order", "truncated", "bessel_reference", "abs_err", "next_term_bound"]
        _emit(_render(header, rows, args.format), args.output)
        return EXIT_OK
    rows = []
    for term in asymptotics.small_t_expansion(args.max_order):
        c = term.coefficient
        rows.append((term.power, f"{c.numerator}/{c.denominator}", float(c)))
    _emit(_render(["power", "coefficient", "float"], rows, args.format), args.output)
    return EXIT_OK


def cmd_sample(args) -> int:
    spec = GaussianSpec(args.mu, args.sigma)
    run = SampleRun(args.seed, args.n, spec)
    values = sample_cube(run)
    rows = [(i, float(v)) for i, v in enumerate(values)]
    _emit(_render(["index", "y"], rows, args.format), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verification.run_suite(args.suite, tol=args.tol, seed=args.seed)
    lines = [r.line() for r in results]
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY_FAILED


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gausscube",
        description="Characteristic function, density, moments and diagnostics of a cubed Gaussian.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", default=None, help="write to file instead of stdout")

    p = sub.add_parser("charfn", help="characteristic function of the cube, closed form vs oracle")
    p.add_argument("--dist", choices=("half", "std", "sigma", "general"), required=True)
    p.add_argument("--mu", type=float, default=None)
    p.add_argument("--sigma", type=float, default=None)
    p.add_argument("--t", type=float, default=None)
    p.add_argument("--t-grid", default=None, help="start:stop:count inclusive linear grid")
    add_common(p)
    p.set_defaults(fn=cmd_charfn)

    p = sub.add_parser("density", help="density of the cubed centered Gaussian")
    p.add_argument("--x", type=float, default=None)
    p.add_argument("--x-grid", default=None)
    p.add_argument("--sigma", type=float, default=None)
    add_common(p)
    p.set_defaults(fn=cmd_density)

    p = sub.add_parser("cdf", help="CDF of the cubed variance-1/2 centered Gaussian")
    p.add_argument("--x", type=float, default=None)
    p.add_argument("--x-grid", default=None)
    add_common(p)
    p.set_defaults(fn=cmd_cdf)

    p = sub.add_parser("moments", help="exact even moments")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int, default=None, help="single even-moment index")
    group.add_argument("--max-k", type=int, default=None, help="tabulate k = 0..max-k")
    add_common(p)
    p.set_defaults(fn=cmd_moments)

    p = sub.add_parser("carleman", help="determinacy-sum terms and partial sums")
    p.add_argument("--terms", type=int, required=True)
    add_common(p)
    p.set_defaults(fn=cmd_carleman)

    p = sub.add_parser("asympt", help="small-t expansion coefficients or truncated values")
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--t", type=float, default=None)
    add_common(p)
    p.set_defaults(fn=cmd_asympt)

    p = sub.add_parser("sample", help="deterministic cube-law samples")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", type=float, default=0.0)
    p.add_argument("--sigma", type=float, default=1.0 / math.sqrt(2.0))
    add_common(p)
    p.set_defaults(fn=cmd_sample)

    p = sub.add_parser("verify", help="run a cross-validation suite")
    p.add_argument("suite", choices=sorted(verification.SUITES))
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    add_common(p)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DensityPoleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QuadratureToleranceError as exc:
        print(f"tolerance failure: {exc}", file=sys.stderr)
        return EXIT_TOLERANCE


if __name__ == "__main__":
    raise SystemExit(main())

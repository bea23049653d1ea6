"""Command-line front end.

Subcommands:

* ``atom``      — full interpolation report for He, Li or Be,
* ``h2-curve``  — write the H2 potential curve to CSV or JSON,
* ``compare``   — RMSE / max-error of a computed curve against a reference
                  CSV (header ``R,E``, energies in hartree).

Exit codes: 0 success, 2 invalid arguments, 3 optimizer non-convergence,
4 unwritable output path, 5 malformed reference CSV or empty overlap.
"""

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import constants, delta1d, interp
from .errors import DomainError, NonConvergenceError
from .large_d import OptimSettings, minimize_atom

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NONCONVERGENCE = 3
EXIT_UNWRITABLE = 4
EXIT_BAD_REFERENCE = 5

CURVE_HEADER = ["R", "eps1_scaled", "epsinf_scaled", "eps3", "binding"]
RESTARTS_ENV = "DIMINTERP_RESTARTS"


@dataclass(frozen=True)
class ComparisonReport:
    """Error statistics of a computed curve against a reference curve."""

    rmse: float
    max_abs_err: float
    n_points_compared: int


def _default_restarts():
    raw = os.environ.get(RESTARTS_ENV)
    if raw is None:
        return 16
    try:
        value = int(raw)
    except ValueError:
        raise SystemExit(EXIT_USAGE)
    if value < 1:
        raise SystemExit(EXIT_USAGE)
    return value


def _settings(args, gramian="exact"):
    return OptimSettings(seed=args.seed, restarts=args.restarts,
                         tol=args.opt_tol, gramian=gramian)


def _add_opt_args(p):
    p.add_argument("--seed", type=int, default=0,
                   help="random seed for the multi-start minimizer")
    p.add_argument("--opt-restarts", dest="restarts", type=int,
                   default=_default_restarts(),
                   help=f"minimizer restarts (env {RESTARTS_ENV})")
    p.add_argument("--opt-tol", type=float, default=1e-10,
                   help="simplex convergence tolerance")


def _fmt(x):
    return f"{x:.6f}"


def run_atom(args):
    spec = delta1d.atom(args.element)
    el = spec.element
    # polynomial Gramian variant reproduces the published Li/Be minima
    gramian = "exact" if el == "He" else "polynomial"
    settings = _settings(args, gramian=gramian)

    var1d = delta1d.optimize_xi(spec)
    inputs = interp.prepare_atom_inputs(spec, settings)
    eps_inf, geometry, report = minimize_atom(spec, settings)
    if not report.converged:
        print("error: minimization did not converge", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    result = interp.atom_epsilon3(inputs)
    sub_eps1 = interp.one_dim_subformula(
        eps_inf, inputs.eps1_1, inputs.epsinf_1, spec.lam)
    sub_result = interp.atom_epsilon3(
        interp.AtomInterpolationInput(
            eps1=sub_eps1, epsinf=eps_inf, eps1_1=inputs.eps1_1,
            eps3_1=inputs.eps3_1, epsinf_1=inputs.epsinf_1,
            lam=spec.lam, source_eps1="subformula"))
    exact = constants.EXACT_EPS3[el]
    pct = abs(result.eps3 - exact) / abs(exact) * 100.0

    lines = [
        f"atom: {el} (Z={spec.Z}, occupancy {'-'.join(spec.occupancy)})",
        f"D=1 variational: xi0 = {_fmt(var1d.xi0)}, "
        f"eps1 = {_fmt(var1d.epsilon1)}",
    ]
    if el == "He":
        lines.append(
            f"D=1 exact two-electron constant: {_fmt(interp.EXACT_EPS1_HE)}")
    lines += [
        f"D=1 subformula estimate: {_fmt(sub_eps1)}",
        f"D=inf minimum ({gramian} gramian): eps_inf = {_fmt(eps_inf)}",
        f"  optimal radii: "
        + ", ".join(_fmt(r) for r in geometry.radii),
        f"  optimal cosines: "
        + ", ".join(_fmt(c) for c in geometry.cosines),
        f"first-order coefficients: eps1' = {_fmt(inputs.eps1_1)}, "
        f"eps3' = {_fmt(inputs.eps3_1)}, epsinf' = {_fmt(inputs.epsinf_1)}",
        f"interpolated eps3 ({inputs.source_eps1} eps1): "
        f"{_fmt(result.eps3)}",
        f"interpolated eps3 (subformula eps1): {_fmt(sub_result.eps3)}",
        f"hartree: E = {_fmt(interp.to_hartree(result.eps3, spec.Z))}",
        f"exact eps3 = {_fmt(exact)}; error = {pct:.2f}%",
    ]
    text = "\n".join(lines)
    if args.output_format == "json":
        payload = {
            "element": el, "Z": spec.Z,
            "xi0": var1d.xi0, "eps1_variational": var1d.epsilon1,
            "eps1_used": inputs.eps1, "eps1_source": inputs.source_eps1,
            "eps1_subformula": sub_eps1,
            "eps_inf": eps_inf, "gramian": gramian,
            "radii": list(geometry.radii),
            "cosines": list(geometry.cosines),
            "coefficients": {"eps1_1": inputs.eps1_1,
                             "eps3_1": inputs.eps3_1,
                             "epsinf_1": inputs.epsinf_1},
            "eps3": result.eps3,
            "eps3_subformula": sub_result.eps3,
            "hartree": interp.to_hartree(result.eps3, spec.Z),
            "exact_eps3": exact,
            "percent_error": pct,
        }
        text = json.dumps(payload, indent=2)
    return _emit(text, args.output)


def _emit(text, path):
    if path is None:
        print(text)
        return EXIT_OK
    try:
        with open(path, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        return EXIT_UNWRITABLE
    return EXIT_OK


def _curve_rows(curve):
    rows = []
    for k in range(len(curve.R)):
        rows.append([curve.R[k], curve.eps1_scaled[k],
                     curve.epsinf_scaled[k], curve.eps3[k],
                     curve.binding[k]])
    return rows


def _curve_csv_text(curve):
    out = [",".join(CURVE_HEADER)]
    for row in _curve_rows(curve):
        out.append(",".join(f"{v:.9g}" for v in row))
    return "\n".join(out) + "\n"


def _compute_curve(args):
    settings = _settings(args)
    return interp.build_curve(args.r_min, args.r_max, args.points, settings)


def run_h2_curve(args):
    try:
        curve = _compute_curve(args)
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    if args.output_format == "json":
        text = json.dumps(
            {name: [float(v) for v in getattr(curve, attr)]
             for name, attr in zip(CURVE_HEADER,
                                   ["R", "eps1_scaled", "epsinf_scaled",
                                    "eps3", "binding"])},
            indent=2)
        return _emit(text, args.output)
    text = _curve_csv_text(curve)
    if args.output is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.output, "w") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_UNWRITABLE
    return EXIT_OK


def _read_reference(path):
    """Reference curve as (R, E) arrays; raises SystemExit(5) with a line
    number on malformed content."""
    try:
        fh = open(path, newline="")
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_BAD_REFERENCE)
    with fh:
        reader = csv.reader(fh)
        rows = list(reader)
    if not rows or [c.strip() for c in rows[0]] != ["R", "E"]:
        print(f"error: {path}:1: expected header 'R,E'", file=sys.stderr)
        raise SystemExit(EXIT_BAD_REFERENCE)
    R, E = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 2:
            print(f"error: {path}:{lineno}: expected 2 columns",
                  file=sys.stderr)
            raise SystemExit(EXIT_BAD_REFERENCE)
        try:
            R.append(float(row[0]))
            E.append(float(row[1]))
        except ValueError:
            print(f"error: {path}:{lineno}: non-numeric value",
                  file=sys.stderr)
            raise SystemExit(EXIT_BAD_REFERENCE)
    if len(R) < 2:
        print(f"error: {path}: need at least 2 data rows", file=sys.stderr)
        raise SystemExit(EXIT_BAD_REFERENCE)
    order = np.argsort(R)
    return np.asarray(R)[order], np.asarray(E)[order]


def compare_curves(grid_R, grid_E, ref_R, ref_E):
    """Linearly interpolate the reference onto the computed grid restricted
    to the overlapping R range."""
    lo = max(grid_R.min(), ref_R.min())
    hi = min(grid_R.max(), ref_R.max())
    mask = (grid_R >= lo) & (grid_R <= hi)
    if not np.any(mask):
        return None
    ref_on_grid = np.interp(grid_R[mask], ref_R, ref_E)
    err = grid_E[mask] - ref_on_grid
    return ComparisonReport(
        rmse=float(np.sqrt(np.mean(err ** 2))),
        max_abs_err=float(np.max(np.abs(err))),
        n_points_compared=int(np.count_nonzero(mask)),
    )


def run_compare(args):
    ref_R, ref_E = _read_reference(args.reference)
    try:
        curve = _compute_curve(args)
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    report = compare_curves(curve.R, curve.binding, ref_R, ref_E)
    if report is None:
        print("error: reference range does not overlap the computed grid",
              file=sys.stderr)
        return EXIT_BAD_REFERENCE
    payload = {
        "rmse": report.rmse,
        "max_abs_err": report.max_abs_err,
        "n_points_compared": report.n_points_compared,
    }
    if args.output_format == "json":
        text = json.dumps(payload, indent=2)
    else:
        text = "\n".join(f"{k} = {v:.9g}" if isinstance(v, float)
                         else f"{k} = {v}" for k, v in payload.items())
    return _emit(text, args.output)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="diminterp",
        description="Ground-state energies by dimensional interpolation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_atom = sub.add_parser("atom", help="interpolation report for one atom")
    p_atom.add_argument("--element", required=True,
                        choices=["he", "li", "be", "He", "Li", "Be"])
    p_atom.add_argument("--output-format", choices=["text", "json"],
                        default="text")
    p_atom.add_argument("--output", default=None,
                        help="write the report to this path")
    _add_opt_args(p_atom)
    p_atom.set_defaults(func=run_atom)

    def add_grid(p):
        p.add_argument("--r-min", type=float, default=0.5)
        p.add_argument("--r-max", type=float, default=6.0)
        p.add_argument("--points", type=int, default=23)
        p.add_argument("--output-format", choices=["csv", "json"],
                       default="csv")
        p.add_argument("--output", default=None)
        _add_opt_args(p)

    p_curve = sub.add_parser("h2-curve", help="write the H2 potential curve")
    add_grid(p_curve)
    p_curve.set_defaults(func=run_h2_curve)

    p_cmp = sub.add_parser(
        "compare", help="compare a computed curve to a reference CSV (R,E)")
    p_cmp.add_argument("--reference", required=True)
    add_grid(p_cmp)
    p_cmp.set_defaults(func=run_compare)
    return parser


def _validate(args):
    if args.command in ("h2-curve", "compare"):
        if args.points < 2:
            return "points must be >= 2"
        if not 0.0 < args.r_min < args.r_max:
            return "require 0 < r-min < r-max"
    if args.restarts < 1:
        return "opt-restarts must be >= 1"
    if args.opt_tol <= 0.0:
        return "opt-tol must be positive"
    return None


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    problem = _validate(args)
    if problem is not None:
        parser.error(problem)  # exits 2
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE


if __name__ == "__main__":
    sys.exit(main())

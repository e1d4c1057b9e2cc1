"""``ring-ob`` command line: run and validate scenario files, print eta.

Exit status: 0 success, 2 parse error, 3 validation error, 4 numerical
range error.
"""

from __future__ import annotations

import argparse
import math
import sys
from importlib import metadata
from pathlib import Path

import numpy as np

from . import bistability as ob
from .errors import ParameterError, QuadratureError, RangeError
from .nonlinearity import eta_closed_form
from .output import emit_csv, emit_svg, emit_table, fmt
from .params import MediumParams, derive_blockade
from .scenario import Scenario, ScenarioParseError, load_scenario

EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, EXIT_RANGE = 0, 2, 3, 4

UNITS = ("frequencies in units of gamma2; intensities dimensionless |Omega_p/gamma2|^2 "
         "(units of gamma2^2 for |Omega_p|^2); lengths in the unit implied by c6 and density")


def _version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "unknown"


def _manifest(scenario: Scenario, resolved, files, extra=()):
    lines = [
        f"input = {scenario.source}",
        f"input_sha256 = {scenario.digest}",
        f"ring_ob_version = {_version()}",
        f"units = {UNITS}",
        f"sweep_kind = {scenario.kind}",
    ]
    if scenario.vary:
        lines.append(f"vary = {scenario.vary}")
    for i, (variant, eta, extras) in enumerate(resolved):
        m, c = variant.medium, variant.cavity
        d = derive_blockade(m)
        lines.append(f"[curve {i}] label = {variant.label}")
        for key in ("omega_c", "delta_p", "delta_c", "gamma2", "gamma12", "gamma13", "c6",
                    "density", "alpha", "length", "lambda_probe"):
            value = getattr(m, key)
            lines.append(f"  {key} = {'none' if value is None else fmt(value)}")
        lines += [
            f"  t_mirror = {fmt(c.t_mirror)}",
            f"  r_mirror = {fmt(c.r_mirror)}",
            f"  cavity_detuning = {fmt(c.cavity_detuning)}",
            f"  delta_eit = {fmt(d.delta_eit)}",
            f"  r_c = {fmt(d.r_c)}",
            f"  n_blockade = {fmt(d.n_blockade)}",
            f"  eta_a = {fmt(eta.a)}",
            f"  eta_b = {fmt(eta.b)}",
            f"  eta_magnitude = {fmt(eta.magnitude)}",
            f"  eta_theta = {fmt(eta.theta)}",
        ]
        lines += [f"  {k} = {v}" for k, v in extras]
    lines += list(extra)
    lines += [f"output = {f.name}" for f in files]
    return "\n".join(lines) + "\n"


def run_scenario(path, out_dir=None, svg=None, stdout=sys.stdout) -> int:
    """Execute a scenario file and write CSV (and optionally SVG) results."""
    path = Path(path)
    scenario = load_scenario(path)
    if out_dir:
        out = Path(out_dir)
    elif scenario.out_dir:
        out = scenario.out_dir if scenario.out_dir.is_absolute() else path.parent / scenario.out_dir
    else:
        out = path.parent / f"{path.stem}_out"
    want_svg = scenario.svg if svg is None else svg
    out.mkdir(parents=True, exist_ok=True)

    variants = scenario.variants()
    files, resolved, extra, plot = [], [], [], []
    kind = scenario.kind
    n_samples = scenario.option("n_samples", 4001)

    if kind == "eta_scan":
        base = variants[0].medium
        n_points = scenario.option("n_points", 201)
        grid = np.linspace(scenario.option("delta_p_min"), scenario.option("delta_p_max"), n_points)
        etas = [eta_closed_form(base.evolve(delta_p=float(dp))) for dp in grid]
        cols = [grid, [e.a for e in etas], [e.b for e in etas], [e.magnitude for e in etas],
                [e.theta for e in etas]]
        files.append(emit_table(["delta_p", "a", "b", "magnitude", "theta"], cols,
                                out / "eta_scan.csv"))
        resolved.append((variants[0], eta_closed_form(base), ()))
        plot = [("Re(eta)", [e.theta for e in etas], cols[1]),
                ("Im(eta)", [e.theta for e in etas], cols[2])]
        labels = ("phase angle theta (rad)", "eta")
        print(f"eta_scan: {n_points} points written to {files[-1]}", file=stdout)
    else:
        curves = []
        for i, variant in enumerate(variants):
            eta = eta_closed_form(variant.medium)
            extras = []
            if kind == "transmission_profile":
                prof = ob.transmission_profile(eta, variant.cavity, scenario.option("i_t_max"),
                                               n_samples)
                files.append(emit_csv(prof, out / f"profile_{i}.csv"))
                plot.append((variant.label, prof.i_out, prof.transmission))
                extras.append(("peaks", len(prof.peak_positions)))
                print(f"{variant.label}: {len(prof.peak_positions)} transmission peaks", file=stdout)
            else:
                x_max = scenario.option("x_max")
                if kind == "scaling" and x_max is not None:
                    # keep sample grids aligned after rescaling onto the reference
                    sign = -1.0 if scenario.vary == "omega_c" else 1.0
                    x_max = x_max / variant.factor ** (sign * scenario.option("exponent"))
                curve = ob.trace_curve(eta, variant.cavity, x_max, n_samples)
                curves.append(curve)
                files.append(emit_csv(curve, out / f"curve_{i}.csv"))
                extras += [("x_max", fmt(curve.x[-1])),
                           ("turning_points", len(curve.turning_points)),
                           ("bistable_regions", curve.n_bistable_regions)]
                if kind == "hysteresis":
                    trace = ob.hysteresis(curve, scenario.option("i_i_max"),
                                          scenario.option("n_steps", 2000))
                    files.append(emit_csv(trace, out / f"hysteresis_{i}.csv"))
                    extras.append(("jumps", len(trace.jumps)))
                    plot += [(f"{variant.label} up", trace.upward[:, 0], trace.upward[:, 1]),
                             (f"{variant.label} down", trace.downward[:, 0], trace.downward[:, 1])]
                else:
                    plot.append((variant.label, curve.i_in, curve.i_out))
                print(f"{variant.label}: {len(curve.turning_points)} turning points", file=stdout)
            resolved.append((variant, eta, extras))
        labels = (("output intensity I_t", "transmission") if kind == "transmission_profile"
                  else ("input intensity I_i", "output intensity I_t"))
        if kind == "scaling":
            exponent = scenario.option("exponent")
            factors = [v.factor for v in variants]
            dev = ob.scaling_collapse(curves, factors, exponent, scenario.vary)
            report = out / "collapse.txt"
            report.write_text(f"parameter = {scenario.vary}\nexponent = {fmt(exponent)}\n"
                              f"factors = {', '.join(fmt(f) for f in factors)}\n"
                              f"max_relative_deviation = {dev:.3e}\n")
            files.append(report)
            extra.append(f"collapse_max_relative_deviation = {dev:.3e}")
            sign = -1.0 if scenario.vary == "omega_c" else 1.0
            plot = [(f"{v.label} rescaled", c.i_in * v.factor ** (sign * exponent),
                     c.i_out * v.factor ** (sign * exponent)) for v, c in zip(variants, curves)]
            print(f"collapse max relative deviation: {dev:.3e}", file=stdout)

    if want_svg:
        files.append(emit_svg(plot, out / f"{kind}.svg", title=scenario.title,
                              xlabel=labels[0], ylabel=labels[1]))
    manifest = out / "manifest.txt"
    manifest.write_text(_manifest(scenario, resolved, files, extra))
    print(f"wrote {len(files)} files and manifest to {out}", file=stdout)
    return EXIT_OK


def _cmd_run(args):
    return run_scenario(args.scenario, args.out, True if args.svg else None)


def _cmd_validate(args):
    scenario = load_scenario(args.scenario)
    print(f"ok: {scenario.kind} with {len(scenario.variants())} parameter set(s)")
    return EXIT_OK


def _cmd_eta(args):
    p = MediumParams(omega_c=args.omega_c, c6=args.c6, density=args.density, alpha=args.alpha,
                     delta_p=args.delta_p, gamma13=args.gamma13)
    eta = eta_closed_form(p)
    if args.format == "csv":
        print("delta_p,omega_c,a,b,magnitude,theta")
        print(",".join(fmt(v) for v in (p.delta_p, p.omega_c, eta.a, eta.b, eta.magnitude,
                                         eta.theta)))
    else:
        print(f"a = {fmt(eta.a)}\nb = {fmt(eta.b)}\n|eta| = {fmt(eta.magnitude)}\n"
              f"theta = {fmt(eta.theta)}  ({math.degrees(eta.theta):.6f} deg)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ring-ob", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a scenario file")
    run.add_argument("scenario")
    run.add_argument("--out", help="output directory (overrides [output] dir)")
    run.add_argument("--svg", action="store_true", help="also write an SVG plot")
    run.set_defaults(func=_cmd_run)

    val = sub.add_parser("validate", help="parse and validate a scenario file")
    val.add_argument("scenario")
    val.set_defaults(func=_cmd_validate)

    eta = sub.add_parser("eta", help="print the Kerr coefficient for one parameter set")
    eta.add_argument("--delta-p", type=float, required=True)
    eta.add_argument("--omega-c", type=float, required=True)
    eta.add_argument("--c6", type=float, required=True)
    eta.add_argument("--density", type=float, required=True)
    eta.add_argument("--alpha", type=float, required=True)
    eta.add_argument("--gamma13", type=float, default=0.0)
    eta.add_argument("--format", choices=("text", "csv"), default="text")
    eta.set_defaults(func=_cmd_eta)
    return parser


def _diagnostic(kind, exc):
    key = getattr(exc, "key", None)
    return f"ring-ob: {kind}: {key}: {exc}" if key else f"ring-ob: {kind}: {exc}"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ScenarioParseError as exc:
        print(f"ring-ob: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ParameterError as exc:
        print(_diagnostic("invalid parameter", exc), file=sys.stderr)
        return EXIT_VALIDATION
    except (RangeError, QuadratureError) as exc:
        print(_diagnostic("numerical range error", exc), file=sys.stderr)
        return EXIT_RANGE


if __name__ == "__main__":
    sys.exit(main())

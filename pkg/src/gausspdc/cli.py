"""Command-line interface.

Subcommands: covariance, witness, negativity, localize, sweep, verify.
Every command emits one CSV table (default) or one JSON document with a
schema_version field; numbers are printed with 12 significant digits so that
repeated runs are byte-identical.

Exit codes: 0 success, 2 usage error, 3 verification failure, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, replace

import numpy as np

from .entanglement import (
    Bipartition,
    localize_and_report,
    log_negativity,
    tripartite_witness,
)
from .ode import equivalence_grid
from .pdc import PdcConfig, output_covariance, squeezing_parameter

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3
EXIT_IO = 4

SCHEMA_VERSION = "1"
VERIFY_TOL = 1e-7


@dataclass(frozen=True)
class RunSpec:
    """Fully parsed invocation; sweep rows reuse config with length set per r."""

    command: str
    config: PdcConfig | None = None
    bipartition: Bipartition | None = None
    sweep_grid: tuple[float, float, int] | None = None
    output_format: str = "csv"
    output_path: str | None = None
    ode_steps: int = 1500


def _parse_bipartition(text: str) -> Bipartition:
    try:
        left, right = text.split("|")
        side_a = tuple(int(m) for m in left.split(","))
        side_b = tuple(int(m) for m in right.split(","))
        return Bipartition(side_a, side_b)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"expected mode sets like '0|1,2', got {text!r} ({exc})"
        ) from None


def _build_parser() -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format (default csv)")
    output.add_argument("--out", metavar="PATH", default=None,
                        help="write to PATH instead of standard output")

    physical = argparse.ArgumentParser(add_help=False)
    physical.add_argument("--alpha", type=float, required=True, help="pump amplitude")
    physical.add_argument("--lambda", dest="coupling", type=float, required=True,
                          help="nonlinear coupling constant")
    physical.add_argument("--length", type=float, required=True, help="crystal length")
    physical.add_argument("--delta", type=float, default=0.0, help="phase mismatch")
    physical.add_argument("--n-pairs", type=int, default=1,
                          help="number of tilted pump pairs N (default 1)")

    parser = argparse.ArgumentParser(
        prog="gausspdc",
        description="Gaussian model of parametric down-conversion with a "
                    "2N-plane-wave pump: covariance matrices, entanglement "
                    "witness, logarithmic negativity, localization.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("covariance", parents=[physical, output],
                   help="output covariance matrix of the crystal")
    sub.add_parser("witness", parents=[physical, output],
                   help="three-mode entanglement witness (requires N=1)")
    negativity = sub.add_parser("negativity", parents=[physical, output],
                                help="logarithmic negativity across a bipartition")
    negativity.add_argument("--bipartition", type=_parse_bipartition, required=True,
                            help="mode split such as '0|1,2'")
    sub.add_parser("localize", parents=[physical, output],
                   help="concentrate the entanglement on two modes and report")
    sweep = sub.add_parser("sweep", parents=[output],
                           help="tabulate witness and negativities over r")
    sweep.add_argument("--r-min", type=float, required=True, help="first squeezing value")
    sweep.add_argument("--r-max", type=float, required=True, help="last squeezing value")
    sweep.add_argument("--steps", type=int, required=True, help="number of grid points")
    sweep.add_argument("--n-pairs", type=int, default=1,
                       help="number of tilted pump pairs N (default 1)")
    verify = sub.add_parser("verify", parents=[output],
                            help="cross-check analytic propagators against the integrator")
    verify.add_argument("--ode-steps", type=int, default=1500,
                        help="fixed integration steps per grid point (default 1500)")
    return parser


def parse_args(argv: list[str]) -> RunSpec:
    """Parse command-line arguments; exits with status 2 on usage errors."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    config = None
    if args.command in ("covariance", "witness", "negativity", "localize"):
        try:
            config = PdcConfig(alpha=args.alpha, coupling=args.coupling,
                               length=args.length, delta=args.delta,
                               n_pairs=args.n_pairs)
        except ValueError as exc:
            parser.error(str(exc))
    elif args.command == "sweep":
        if args.steps < 1:
            parser.error("argument --steps: must be a positive integer")
        try:
            config = PdcConfig(alpha=1.0, coupling=1.0, length=0.0,
                               n_pairs=args.n_pairs)
        except ValueError as exc:
            parser.error(str(exc))
    return RunSpec(
        command=args.command,
        config=config,
        bipartition=getattr(args, "bipartition", None),
        sweep_grid=(args.r_min, args.r_max, args.steps)
        if args.command == "sweep" else None,
        output_format=args.format,
        output_path=args.out,
        ode_steps=getattr(args, "ode_steps", 1500),
    )


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".12g")
    if isinstance(value, (list, tuple)):
        return ";".join(_fmt(v) for v in value)
    return str(value)


def _json_ready(value):
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        if not math.isfinite(value):
            return None  # strict JSON has no Infinity/NaN literals
        return float(format(float(value), ".12g"))
    if isinstance(value, (list, tuple)):
        return [_json_ready(v) for v in value]
    raise TypeError(f"cannot serialize {type(value)!r}")


def _spec_echo(spec: RunSpec) -> dict:
    echo: dict = {"command": spec.command, "format": spec.output_format,
                  "out": spec.output_path}
    if spec.command in ("covariance", "witness", "negativity", "localize"):
        cfg = spec.config
        echo.update(alpha=cfg.alpha, **{"lambda": cfg.coupling},
                    length=cfg.length, delta=cfg.delta, n_pairs=cfg.n_pairs)
    if spec.bipartition is not None:
        echo["bipartition"] = str(spec.bipartition)
    if spec.sweep_grid is not None:
        r_min, r_max, steps = spec.sweep_grid
        echo.update(r_min=r_min, r_max=r_max, steps=steps,
                    n_pairs=spec.config.n_pairs)
    if spec.command == "verify":
        echo.update(ode_steps=spec.ode_steps, tolerance=VERIFY_TOL)
    return {k: _json_ready(v) for k, v in echo.items()}


def _covariance_records(spec: RunSpec):
    sigma = output_covariance(spec.config)
    labels = spec.config.layout.quadrature_labels()
    rows = [dict(zip(labels, map(float, row))) for row in sigma]
    return labels, rows


def _witness_records(spec: RunSpec):
    result = tripartite_witness(output_covariance(spec.config))
    row = {"c_value": result.c_value, "threshold": result.threshold,
           "genuine": result.genuine_tripartite}
    return ["c_value", "threshold", "genuine"], [row]


def _negativity_records(spec: RunSpec):
    report = log_negativity(output_covariance(spec.config), spec.bipartition)
    row = {"bipartition": str(spec.bipartition),
           "log_negativity": report.log_negativity,
           "nu_tilde": list(report.nu_tilde)}
    return ["bipartition", "log_negativity", "nu_tilde"], [row]


def _localize_records(spec: RunSpec):
    sigma_prime, report = localize_and_report(spec.config)
    r = squeezing_parameter(spec.config)
    row = {"n_pairs": spec.config.n_pairs, "r": r,
           "r_localized": math.sqrt(spec.config.n_pairs) * r,
           "log_negativity": report.log_negativity,
           "nu_tilde": list(report.nu_tilde),
           "covariance": [list(map(float, line)) for line in sigma_prime]}
    return ["n_pairs", "r", "r_localized", "log_negativity"], [row]


def _sweep_records(spec: RunSpec):
    r_min, r_max, steps = spec.sweep_grid
    base = spec.config
    split = Bipartition.split({0}, base.n_modes)
    rows = []
    for r in np.linspace(r_min, r_max, steps):
        config = replace(base, length=float(r) / math.sqrt(2.0))
        sigma = output_covariance(config)
        if base.n_pairs == 1:
            witness = tripartite_witness(sigma)
            c_value, genuine = witness.c_value, witness.genuine_tripartite
        else:
            c_value, genuine = None, None
        raw = log_negativity(sigma, split)
        _, localized = localize_and_report(config)
        rows.append({"r": float(r), "c_value": c_value, "genuine": genuine,
                     "log_negativity": raw.log_negativity,
                     "log_negativity_localized": localized.log_negativity,
                     "n_pairs": base.n_pairs})
    fields = ["r", "c_value", "genuine", "log_negativity",
              "log_negativity_localized", "n_pairs"]
    return fields, rows


def _verify_records(spec: RunSpec):
    rows = []
    for point in equivalence_grid(step_count=spec.ode_steps):
        rows.append({"n_pairs": point.n_pairs, "delta": point.delta,
                     "coupling_length": point.coupling_length,
                     "max_error": point.max_error, "tolerance": VERIFY_TOL,
                     "status": "pass" if point.max_error <= VERIFY_TOL else "fail"})
    fields = ["n_pairs", "delta", "coupling_length", "max_error", "tolerance",
              "status"]
    return fields, rows


_BUILDERS = {
    "covariance": _covariance_records,
    "witness": _witness_records,
    "negativity": _negativity_records,
    "localize": _localize_records,
    "sweep": _sweep_records,
    "verify": _verify_records,
}


def _render(spec: RunSpec, fieldnames: list[str], rows: list[dict]) -> str:
    if spec.output_format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(fieldnames)
        for row in rows:
            writer.writerow([_fmt(row[name]) for name in fieldnames])
        return buffer.getvalue()
    document = {
        "schema_version": SCHEMA_VERSION,
        "spec": _spec_echo(spec),
        "rows": [{key: _json_ready(value) for key, value in row.items()}
                 for row in rows],
    }
    return json.dumps(document, indent=2) + "\n"


def run(spec: RunSpec) -> int:
    """Execute a parsed invocation and emit its records."""
    try:
        fieldnames, rows = _BUILDERS[spec.command](spec)
    except ValueError as exc:
        print(f"gausspdc {spec.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = _render(spec, fieldnames, rows)
    if spec.output_path is None:
        sys.stdout.write(text)
    else:
        try:
            with open(spec.output_path, "w", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as exc:
            print(f"gausspdc {spec.command}: cannot write output: {exc}",
                  file=sys.stderr)
            return EXIT_IO
    if spec.command == "verify" and any(row["status"] == "fail" for row in rows):
        return EXIT_VERIFY
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    return run(parse_args(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: tensor evaluation, verification, sphere export.

Exit codes follow the CI convention: 0 on success, 1 when a verification
suite fails, 2 on malformed input or domain errors.  All results go to
standard output as JSON with sorted keys, so output is byte-deterministic
for fixed flags.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .actions import hamiltonian, moment_map
from .kahler import complex_structure_at, metric_at, metric_determinant, omega_at
from .pick import ModuliPoint, norm_sq
from .sphere import (
    CubicCoefficient,
    export_mesh,
    lattice_holonomy,
    spectral_data,
    wang_constant,
)
from .verify import DEFAULT_TOL, SUITES, run_suite
from .weights import WeightFunction

USAGE_ERROR = 2
VERIFY_FAILURE = 1


def _parse_point(text: str) -> ModuliPoint:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError("point must be four comma-separated numbers x,y,u,v")
    x, y, u, v = (float(t) for t in parts)
    if y <= 0.0:
        raise ValueError("y must be positive")
    return ModuliPoint(complex(x, y), complex(u, v))


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError("complex flag must be two comma-separated numbers re,im")
    return complex(float(parts[0]), float(parts[1]))


def _matrix(m: np.ndarray) -> list:
    return [[float(e) for e in row] for row in m]


def _emit(doc: dict) -> None:
    json.dump(doc, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")


def _cmd_eval(args) -> int:
    point = _parse_point(args.point)
    wf = WeightFunction.parse(args.weight)
    closed, numeric = metric_determinant(point, wf)
    mv = moment_map(point, wf)
    _emit(
        {
            "point": [point.x, point.y, point.u, point.v],
            "weight": wf.label(),
            "g": _matrix(metric_at(point, wf)),
            "omega": _matrix(omega_at(point, wf)),
            "I": _matrix(complex_structure_at(point)),
            "det_g_closed": closed,
            "det_g_numeric": numeric,
            "norm_sq": norm_sq(point),
            "hamiltonian": hamiltonian(point, wf),
            "moment": {"xi1": mv.xi1, "xi2": mv.xi2, "xi3": mv.xi3},
        }
    )
    return 0


def _cmd_verify(args) -> int:
    wf = WeightFunction.parse(args.weight)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in SUITES:
            raise ValueError(
                f"unknown suite {name!r}; choose from {', '.join(SUITES)} or 'all'"
            )
    reports = [
        run_suite(name, wf, samples=args.samples, seed=args.seed, tol=args.tol)
        for name in names
    ]
    _emit(
        {
            "all_passed": all(r.passed for r in reports),
            "reports": [r.to_dict() for r in reports],
        }
    )
    return 0 if all(r.passed for r in reports) else VERIFY_FAILURE


def _cmd_sphere(args) -> int:
    c = CubicCoefficient.from_complex(_parse_complex(args.c))
    stats = export_mesh(c, args.grid, args.range, args.out)
    data = spectral_data(c)
    _emit(
        {
            "c": [c.value.real, c.value.imag],
            "lambda0": [data.lambda0.real, data.lambda0.imag],
            "psi": wang_constant(c),
            "holonomy_1": [float(h) for h in np.diag(lattice_holonomy(c, 1.0))],
            "holonomy_i": [float(h) for h in np.diag(lattice_holonomy(c, 1j))],
            "out": args.out,
            "vertices": stats["vertices"],
            "faces": stats["faces"],
            "titeica_max_dev": stats["titeica_max_dev"],
        }
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rp2torus",
        description=(
            "Evaluate the pseudo-Kahler family on H2 x C, run verification "
            "suites, and export hyperbolic affine spheres."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate tensors at a point")
    ev.add_argument("--point", required=True, help="x,y,u,v with y > 0")
    ev.add_argument("--weight", default="linear:1", help="'linear:k' or 'log:k'")
    ev.set_defaults(func=_cmd_eval)

    vf = sub.add_parser("verify", help="run verification suites")
    vf.add_argument(
        "--suite",
        default="all",
        help=f"one of {', '.join(SUITES)} or 'all'",
    )
    vf.add_argument("--weight", default="linear:1")
    vf.add_argument("--samples", type=int, default=200)
    vf.add_argument("--seed", type=int, default=0)
    vf.add_argument(
        "--tol",
        type=float,
        default=None,
        help=f"override the per-suite defaults {DEFAULT_TOL}",
    )
    vf.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("sphere", help="export an affine sphere mesh")
    sp.add_argument("--c", required=True, help="cubic coefficient re,im (non-zero)")
    sp.add_argument("--grid", type=int, default=50)
    sp.add_argument("--range", type=float, default=1.5)
    sp.add_argument("--out", required=True, help="output OBJ path")
    sp.set_defaults(func=_cmd_sphere)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())

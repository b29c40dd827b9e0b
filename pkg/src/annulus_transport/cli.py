"""Command line entry point.

Two subcommands, both print a JSON document to stdout:

* ``gap``    -- flat vs curvature-corrected layer values at a grazing point
                for one or more mean free paths.
* ``limit``  -- sup error of the classical and the corrected composite
                expansion against the full annulus solve.
"""

from __future__ import annotations

import argparse
import json

from .counterexample import expansion_errors, grazing_gap
from .geometry import Annulus


def _add_common(parser):
    parser.add_argument(
        "--epsilon",
        type=float,
        nargs="+",
        default=[0.1, 0.05],
        help="mean free path(s) to run (default: 0.1 0.05)",
    )
    parser.add_argument("--r-inner", type=float, default=1.0)
    parser.add_argument("--r-outer", type=float, default=2.0)
    parser.add_argument(
        "--n-phi", type=int, default=96, help="angular quadrature size"
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="annulus-transport",
        description="Transport equation on an annulus: boundary layers, "
        "diffusion limit, and the grazing-set failure of flat layers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gap = sub.add_parser("gap", help="grazing-point layer comparison")
    _add_common(gap)
    gap.add_argument(
        "--n",
        type=float,
        default=0.45,
        help="stretched wall distance of the evaluation point, in (0, 1/2)",
    )

    limit = sub.add_parser("limit", help="composite expansion errors")
    _add_common(limit)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    annulus = Annulus(args.r_inner, args.r_outer)
    if args.command == "gap":
        results = [
            grazing_gap(eps, n=args.n, annulus=annulus, n_phi=args.n_phi)
            for eps in args.epsilon
        ]
    else:
        results = [
            expansion_errors(eps, annulus=annulus, n_phi=args.n_phi)
            for eps in args.epsilon
        ]
    print(json.dumps(results, indent=2))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

#!/usr/bin/env python

"""Command-line front end

Every subcommand writes one JSON document to stdout; diagnostics go to
stderr through logging. Exit status is 0 on success, 1 when a verifier
reports violations or a fixture's expected facts fail, and 2 on invalid
input.

"""

from argparse import ArgumentParser
import json
import logging
import os
import sys

from .coloring import extend_coloring, lambda_set
from .document import ParseError, load_document, parse_coloring
from .fixtures import FIXTURES, check_fixture
from .instances import InstanceGenerator
from .obstructions import (
    auxiliary_paths,
    base_coloring_verdict,
    edge_tilt,
    find_obstructions,
    is_fully_even,
    x_vertices,
)
from .planar import PathSpec, classify_wheel
from .sufficiency import bohme_classify, crown_set, end_set
from .theorems import THEOREM_IDS, verify
from .util import coloring_to_json

log = logging.getLogger("crownlab")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2


def setup_logger(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s", level=level
    )


def _emit(obj):
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _vertex_list(text):
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError as e:
        raise ParseError(f"Expected comma-separated vertex ids, got {text!r}") from e


def _phi(args):
    return parse_coloring(args.phi) if args.phi else {}


def cmd_solve(args):
    R = load_document(args.input)
    found = extend_coloring(R.graph, R.lists, _phi(args), solver=R.solver)
    _emit({
        "extendable": found is not None,
        "coloring": None if found is None else coloring_to_json(found),
    })
    return EXIT_OK


def cmd_lambda(args):
    R = load_document(args.input)
    P = _vertex_list(args.path) if args.path else R.path.vertices
    try:
        colors = json.loads(args.colors)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid --colors: {e}") from e
    found = lambda_set(R.graph, R.lists, P, colors, R.solver)
    _emit({"path": list(P), "colors": colors, "lambda": sorted(found)})
    return EXIT_OK


def cmd_end(args):
    R = load_document(args.input)
    _emit({"end": [coloring_to_json(phi) for phi in end_set(R)]})
    return EXIT_OK


def cmd_crown(args):
    R = load_document(args.input)
    _emit({"crown": [coloring_to_json(phi) for phi in crown_set(R)]})
    return EXIT_OK


def cmd_classify(args):
    R = load_document(args.input)
    if args.phi:
        verdict = bohme_classify(R.graph, R.lists, _phi(args), R.solver)
        _emit({
            "extendable": verdict.extendable,
            "case": verdict.case,
            "structure": verdict.structure,
        })
        return EXIT_OK

    P = PathSpec(_vertex_list(args.principal)) if args.principal else None
    found = classify_wheel(R.graph, P)
    _emit({
        "kind": found.kind.value,
        "principal_path": None if found.principal_path is None else list(found.principal_path),
        "central_vertex": found.central_vertex,
        "rim_edge_count": found.rim_edge_count,
    })
    return EXIT_OK


def cmd_obstructions(args):
    R = load_document(args.input)
    found = find_obstructions(R)
    _emit({
        "x": list(x_vertices(R)),
        "obstructions": [o.to_json() for o in found],
        "fully_even": [list(o.path) for o in found if is_fully_even(R, o)],
        "auxiliary_paths": {k: list(Q) for k, Q in auxiliary_paths(R).items()},
    })
    return EXIT_OK


def cmd_tilt(args):
    R = load_document(args.input)
    _emit({"tilts": [edge_tilt(R, k).to_json() for k in (0, 1)]})
    return EXIT_OK


def cmd_base(args):
    R = load_document(args.input)
    if args.phi:
        colorings = [_phi(args)]
    else:
        colorings = list(R.solver.enumerate({}, (R.p0, R.p1)))
    _emit({"verdicts": [base_coloring_verdict(R, phi).to_json() for phi in colorings]})
    return EXIT_OK


def cmd_verify(args):
    if args.mode == "sampled" and args.seed is None:
        raise ValueError("Sampled runs need an explicit --seed")
    gen = InstanceGenerator(
        mode=args.mode,
        max_vertices=args.max_n,
        palette_cap=args.palette,
        seed=args.seed,
        samples=args.samples,
        min_interior_degree=args.min_degree,
    )
    report = verify(args.theorem, gen, jobs=args.jobs, progress=args.progress)
    _emit(report.to_json(timing=args.timing))
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_fixture(args):
    result = check_fixture(args.fixture)
    _emit(result.to_json())
    if not result.passed:
        log.error(f"Fixture {args.fixture} does not show its expected facts")
    return EXIT_OK if result.passed else EXIT_FAILED


def build_parser():
    parser = ArgumentParser(prog="crown-lab", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument(
        "--jobs",
        type=int,
        default=int(os.environ.get("CROWN_LAB_JOBS", "1")),
        help="worker processes for verify (default: $CROWN_LAB_JOBS or 1)",
    )
    parser.add_argument("--timing", action="store_true", help="include wall_time in reports")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("input", help="instance document path, or - for stdin")
        p.set_defaults(func=func)
        return p

    p = with_input("solve", cmd_solve, "extend a partial coloring to all of G")
    p.add_argument("--phi", help='partial coloring as JSON, e.g. {"0": 1}')

    p = with_input("lambda", cmd_lambda, "Lambda set of a 2-path")
    p.add_argument("--path", help="2-path as comma-separated ids (default: the document path)")
    p.add_argument("--colors", required=True, help="three colors with one null, e.g. [0,null,2]")

    with_input("end", cmd_end, "End(P,G)")
    with_input("crown", cmd_crown, "Crown(P,G)")

    p = with_input("classify", cmd_classify, "wheel class, or cycle-coloring structure with --phi")
    p.add_argument("--principal", help="principal path as comma-separated ids")
    p.add_argument("--phi", help="coloring of the outer 5- or 6-cycle as JSON")

    with_input("obstructions", cmd_obstructions, "obstructions of a 3-path rainbow")
    with_input("tilt", cmd_tilt, "tilt parities of the terminal edges")

    p = with_input("base", cmd_base, "base-coloring verdicts of endpoint colorings")
    p.add_argument("--phi", help="one coloring of the endpoints as JSON")

    p = sub.add_parser("verify", help="check a theorem over an instance stream")
    p.add_argument("theorem", help=f"one of {', '.join(THEOREM_IDS)}")
    p.add_argument("--mode", choices=sorted(InstanceGenerator.DEFAULT_CAPS), default="exhaustive")
    p.add_argument("--max-n", type=int, default=None, help="vertex cap")
    p.add_argument("--palette", type=int, default=None, help="palette cap")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument(
        "--min-degree", type=int, default=0, help="drop maps with an interior vertex of lower degree"
    )
    p.add_argument("--progress", action="store_true", help="progress bar on stderr")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fixture", help="check a counterexample fixture")
    p.add_argument("fixture", help=f"one of {', '.join(FIXTURES)}")
    p.set_defaults(func=cmd_fixture)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    setup_logger(args.verbose)
    try:
        return args.func(args)
    except (ValueError, KeyError) as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else e
        log.error(f"{type(e).__name__}: {message}")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

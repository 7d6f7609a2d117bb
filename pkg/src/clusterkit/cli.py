"""Command line front end.

Exit codes: 0 success (all checks pass), 1 runtime failure or exceeded
budget (including failed verification), 2 usage error.
"""

import argparse
import json
import sys

from .arith import VariableTable, order_by_name, parse_poly
from .errors import (
    BudgetExceeded,
    ExactDivisionFailed,
    InexactDivision,
    StructureError,
)
from .ideals import (
    IdealBasis,
    member,
    normal_form,
    saturate,
    saturated_exchange_ideal,
)
from .models.registry import ModelSpecError, report_lines, run_model
from .presets import PresetError, preset_names, resolve_preset, sample_specs
from .seeds import Seed, enumerate_pattern, parse_walk

OK, RUNTIME, USAGE = 0, 1, 2


def _fail(code, message):
    print(message, file=sys.stderr)
    return code


def _emit(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))
    return OK


def _load_seed(args):
    """Seed from --preset or from a seed JSON file, never both."""
    if (args.preset is None) == (args.seedfile is None):
        raise PresetError("give exactly one of --preset or a seed file")
    if args.preset is not None:
        return resolve_preset(args.preset).seed
    with open(args.seedfile) as fh:
        return Seed.from_json(json.load(fh))


def _linear_walk(text, n):
    walk = parse_walk(text, n=n, one_based=True)
    if walk and isinstance(walk[0], list):
        raise ValueError("a mutation walk cannot have ';' star arms")
    return walk


def cmd_presets(args):
    rows = [
        {"name": name, "integer_args": argc, "description": desc}
        for name, argc, desc in preset_names()
    ]
    return _emit({"presets": rows, "samples": sample_specs()})


def cmd_mutate(args):
    seed = _load_seed(args)
    for k in _linear_walk(args.walk, seed.matrix.n):
        seed = seed.mutate(k)
    return _emit(seed.to_json())


def cmd_enumerate(args):
    seed = resolve_preset(args.preset).seed
    summary = enumerate_pattern(seed, max_seeds=args.budget)
    return _emit(summary.to_json())


def cmd_verify(args):
    results = run_model(args.model)
    for line in report_lines(results):
        print(line)
    bad = sum(1 for r in results if not r.ok)
    print(f"{len(results) - bad} of {len(results)} checks pass")
    return OK if bad == 0 else RUNTIME


def _parse_ideal_input(args):
    table = VariableTable([s.strip() for s in args.vars.split(",")])
    gens = [parse_poly(text, table) for text in args.gens]
    order = order_by_name(args.order)
    return table, IdealBasis(gens, order)


def cmd_ideal(args):
    table, ideal = _parse_ideal_input(args)
    if args.action == "groebner":
        return _emit({"basis": [str(g) for g in ideal.groebner()]})
    if args.action == "member":
        if args.poly is None:
            raise StructureError("ideal member needs --poly")
        f = parse_poly(args.poly, table)
        return _emit({
            "member": member(f, ideal),
            "normal_form": str(normal_form(f, ideal)),
        })
    if args.poly is None:
        raise StructureError("ideal saturate needs --poly (the monomial)")
    m = parse_poly(args.poly, table)
    sat = saturate(ideal, m)
    return _emit({"basis": [str(g) for g in sat.groebner()]})


def cmd_present(args):
    seed = resolve_preset(args.preset).seed
    names = seed.table.names
    if len(names) != seed.matrix.m or any(
        str(e) != names[i] for i, e in enumerate(seed.entries)
    ):
        raise PresetError(
            f"present needs a formal preset, and {args.preset} binds its "
            "cluster to an external ring"
        )
    walk = parse_walk(args.walk, n=seed.matrix.n, one_based=True)
    walkrel, ideal, saturated = saturated_exchange_ideal(seed, walk)
    return _emit({
        "variables": list(walkrel.table.names),
        "realizations": {
            name: str(walkrel.realization[name])
            for name in walkrel.table.names
        },
        "exchange_ideal": (
            [] if ideal is None else [str(g) for g in ideal.generators]
        ),
        "saturated_ideal": (
            [] if saturated is None else [str(g) for g in saturated.groebner()]
        ),
    })


def cmd_serve(args):
    from .server import run_server

    try:
        run_server(host=args.host, port=args.port, static_dir=args.static)
    except OSError as exc:
        return _fail(RUNTIME, f"cannot listen on port {args.port}: {exc}")
    return OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="clusterkit",
        description="Exact seed mutation, pattern enumeration and "
        "verification for cluster structures on coordinate rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("presets", help="list the named starting seeds")
    p.set_defaults(fn=cmd_presets)

    p = sub.add_parser("mutate", help="mutate a seed along a walk")
    p.add_argument("seedfile", nargs="?", help="seed JSON file")
    p.add_argument("--preset", help="preset spec such as b2 or rectangles:3,7")
    p.add_argument("--walk", default="",
                   help="comma-separated 1-based vertices, e.g. 1,2,1")
    p.set_defaults(fn=cmd_mutate)

    p = sub.add_parser("enumerate", help="breadth-first closure of a pattern")
    p.add_argument("--preset", required=True)
    p.add_argument("--budget", type=int, default=100000,
                   help="stop after this many seeds")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("verify", help="run a named model's checks")
    p.add_argument("model",
                   help="model spec such as sl5, typeB:4 or quadric:5")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("ideal", help="Groebner, membership and saturation")
    p.add_argument("action", choices=["groebner", "member", "saturate"])
    p.add_argument("--vars", required=True,
                   help="comma-separated variable names")
    p.add_argument("--gens", action="append", required=True,
                   help="generator polynomial (repeatable)")
    p.add_argument("--poly",
                   help="test polynomial (member) or monomial (saturate)")
    p.add_argument("--order", default="degrevlex",
                   help="degrevlex, lex, or block:i,j,...")
    p.set_defaults(fn=cmd_ideal)

    p = sub.add_parser("present",
                       help="walk variables, exchange ideal and its "
                       "saturation for a formal walk")
    p.add_argument("--preset", required=True)
    p.add_argument("--walk", default="",
                   help="1-based walk; ';' separates star arms")
    p.set_defaults(fn=cmd_present)

    p = sub.add_parser("serve", help="run the HTTP JSON API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--static",
                   help="directory of UI assets to serve outside /api")
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (PresetError, ModelSpecError) as exc:
        return _fail(USAGE, str(exc))
    except (StructureError, ValueError) as exc:
        return _fail(USAGE, str(exc))
    except FileNotFoundError as exc:
        return _fail(USAGE, str(exc))
    except BudgetExceeded as exc:
        return _fail(RUNTIME, f"budget exceeded: {exc}")
    except (ExactDivisionFailed, InexactDivision) as exc:
        return _fail(RUNTIME, str(exc))


if __name__ == "__main__":
    sys.exit(main())

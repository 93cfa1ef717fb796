"""Command-line front end.

Subcommands: edges, crossings, hom, ext, verify, triangulations,
flipwalk, report, ar-quiver.  All randomized behavior takes an explicit
--seed; outputs are deterministic given the arguments.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import random
import sys

from . import render
from .clusterops import ext1_dim
from .crossing import crossing_matrix, crossing_number
from .geometry import InvalidEdgeError, TaggedEdge, parse_edge_list
from .mesh import morphism_space
from .suites import SUITES, run_suites
from .tilted import (
    ar_quiver_of_category,
    ar_quiver_of_tilted,
    vanishing_paths_report,
)
from .triangulation import (
    Triangulation,
    enumerate_triangulations,
    exchange_sides,
    flip,
    quiver_of_triangulation,
)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="puncgon",
        description="Tagged-edge engine for the once-punctured polygon",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=("text", "json")):
        sp.add_argument("--n", type=int, required=True, help="number of polygon vertices")
        sp.add_argument("--format", choices=fmt, default="text")

    sp = sub.add_parser("edges", help="list all tagged edges with grid positions")
    common(sp)

    sp = sub.add_parser("crossings", help="full crossing-number table")
    common(sp)

    sp = sub.add_parser("hom", help="graded Hom space between two edges")
    common(sp)
    sp.add_argument("--source", required=True)
    sp.add_argument("--target", required=True)
    sp.add_argument("--basis", action="store_true", help="print basis path classes")
    sp.add_argument("--grid", action="store_true", help="print the full Hom grid out of the source")

    sp = sub.add_parser("ext", help="extension dimension between two edges")
    common(sp)
    sp.add_argument("--source", required=True)
    sp.add_argument("--target", required=True)
    sp.add_argument("--method", choices=("closed", "mesh"), default="closed")

    sp = sub.add_parser("verify", help="run verification suites")
    common(sp)
    sp.add_argument(
        "--suite",
        default="all",
        help="comma-separated suite names, or 'all': " + ", ".join(sorted(SUITES)),
    )
    sp.add_argument("--method", choices=("closed", "mesh"), default="closed")

    sp = sub.add_parser("triangulations", help="enumerate all triangulations")
    common(sp)
    sp.add_argument("--max-enum", type=int, default=6, help="enumeration size bound")

    sp = sub.add_parser("flipwalk", help="apply a sequence of flips")
    common(sp)
    sp.add_argument("--T", required=True, help="starting triangulation, comma-separated edges")
    sp.add_argument("--script", default="", help="comma-separated edges to flip, in order")
    sp.add_argument("--random", type=int, default=0, metavar="K", help="append K random flips")
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("report", help="full cluster-tilted report for a triangulation")
    common(sp, fmt=("text", "json", "dot"))
    sp.add_argument("--T", required=True)
    sp.add_argument("--maxlen", type=int, default=None, help="zero-relation probe length (default n)")
    sp.add_argument("--no-op", action="store_true", help="transpose quiver arrows")

    sp = sub.add_parser("ar-quiver", help="AR quiver of the category, or of End(T) after deleting T")
    common(sp, fmt=("text", "json", "dot"))
    sp.add_argument("--T", default=None)
    sp.add_argument("--no-op", action="store_true", help="transpose quiver arrows")
    return p


def _parse_triangulation(n: int, text: str) -> Triangulation:
    edges = parse_edge_list(n, text)
    try:
        return Triangulation(n, tuple(edges))
    except ValueError as exc:
        raise SystemExitError(str(exc))


class SystemExitError(Exception):
    pass


def cmd_edges(args) -> int:
    if args.format == "json":
        print(json.dumps(render.edges_json(args.n), indent=2))
    else:
        print(render.edges_text(args.n))
    return 0


def cmd_crossings(args) -> int:
    table = crossing_matrix(args.n)
    if args.format == "json":
        print(json.dumps(render.crossing_json(table), indent=2))
    else:
        print(render.crossing_text(table))
    return 0


def cmd_hom(args) -> int:
    src = TaggedEdge.parse(args.n, args.source)
    tgt = TaggedEdge.parse(args.n, args.target)
    space = morphism_space(src, tgt)
    if args.format == "json":
        print(json.dumps(render.hom_json(space), indent=2))
    else:
        print(render.hom_text(space, show_basis=args.basis))
        if args.grid:
            print(render.hom_grid_text(args.n, src))
    return 0


def cmd_ext(args) -> int:
    src = TaggedEdge.parse(args.n, args.source)
    tgt = TaggedEdge.parse(args.n, args.target)
    val = ext1_dim(src, tgt, method=args.method)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": args.n,
                    "source": str(src),
                    "target": str(tgt),
                    "ext1": val,
                    "crossing": crossing_number(src, tgt),
                    "method": args.method,
                }
            )
        )
    else:
        print(f"ext1({src}, {tgt}) = {val}")
    return 0


def cmd_verify(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [s.strip() for s in args.suite.split(",")]
    results = run_suites(names, args.n, method=args.method)
    ok = all(r.passed for r in results)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": args.n,
                    "passed": ok,
                    "suites": [r.to_json() for r in results],
                },
                indent=2,
            )
        )
    else:
        for r in results:
            print(f"[{'PASS' if r.passed else 'FAIL'}] {r.name} (n={r.n}): {r.summary}")
    return 0 if ok else 1


def cmd_triangulations(args) -> int:
    tris = enumerate_triangulations(args.n, max_n=args.max_enum)
    if args.format == "json":
        print(
            json.dumps(
                {"n": args.n, "count": len(tris), "triangulations": [str(t).split(",") for t in tris]},
                indent=2,
            )
        )
    else:
        print(f"{len(tris)} triangulations of the punctured {args.n}-gon")
        for t in tris:
            print(f"  {t}")
    return 0


def cmd_flipwalk(args) -> int:
    t = _parse_triangulation(args.n, args.T)
    script = parse_edge_list(args.n, args.script) if args.script else []
    rng = random.Random(args.seed)
    steps = []
    for k in range(args.random):
        script.append(None)  # placeholder, chosen at walk time
    out = {"n": args.n, "start": str(t).split(","), "steps": []}
    current = t
    for chosen in script:
        edge = chosen if chosen is not None else rng.choice(current.edges)
        if edge not in current:
            print(
                f"error: edge {edge} is not in the current triangulation {current}",
                file=sys.stderr,
            )
            return 2
        data = exchange_sides(current, edge)
        current, inserted = flip(current, edge)
        assert inserted == data.inserted
        step = {
            "removed": str(data.removed),
            "inserted": str(data.inserted),
            "crossing": crossing_number(data.removed, data.inserted),
            "side_factors": [str(f) for f in data.side_factors],
            "coside_factors": [str(f) for f in data.coside_factors],
            "relation": data.relation_string(),
            "triangulation": str(current).split(","),
        }
        out["steps"].append(step)
        if args.format == "text":
            print(f"flip {data.removed} -> {data.inserted}: {data.relation_string()}")
    out["final"] = str(current).split(",")
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        print(f"final: {current}")
    return 0


def cmd_report(args) -> int:
    t = _parse_triangulation(args.n, args.T)
    maxlen = args.maxlen if args.maxlen is not None else args.n
    quiver = quiver_of_triangulation(t)
    shown = quiver.transposed() if args.no_op else quiver
    vanishing = vanishing_paths_report(t, maxlen)
    tilted = ar_quiver_of_tilted(t)
    if args.format == "dot":
        print(render.quiver_dot(shown))
        print(render.tilted_quiver_dot(tilted))
        return 0
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": args.n,
                    "T": [str(e) for e in t.edges],
                    "quiver": render.quiver_json(shown, t),
                    "vanishing_paths": [
                        {
                            "path": e.path_string(quiver),
                            "zero": e.is_zero,
                        }
                        for e in vanishing.entries
                    ],
                    "boundary_note": "factors on boundary segments contribute 1",
                    "modules": render.tilted_quiver_json(tilted),
                },
                indent=2,
            )
        )
        return 0
    print(f"triangulation T = {t}")
    print("endomorphism quiver" + (" (op transposed)" if args.no_op else "") + ":")
    print(render.quiver_text(shown))
    zero = vanishing.zero_paths()
    print(f"vanishing arrow paths up to length {maxlen}: {len(zero)}")
    for e in zero:
        print(f"  0 = {e.path_string(quiver)}")
    print("nonzero arrow paths: " + str(len(vanishing.nonzero_paths())))
    print("module dimension vectors (coordinates over T, stacked rendering):")
    print(render.dimvec_table_text(tilted, quiver))
    print(
        f"module category AR quiver: {len(tilted.vertices)} vertices, "
        f"{len(tilted.arrows)} arrows, {len(tilted.tau_pairs)} translation pairs"
    )
    for a, b in tilted.arrows:
        print(f"  {a} -> {b}")
    return 0


def cmd_ar_quiver(args) -> int:
    if args.T is None:
        q = ar_quiver_of_category(args.n)
        if args.no_op:
            q = dataclasses.replace(q, arrows=tuple((b, a) for a, b in q.arrows))
        if args.format == "dot":
            print(render.category_quiver_dot(q))
        elif args.format == "json":
            print(json.dumps(render.category_quiver_json(q), indent=2))
        else:
            print(f"{len(q.vertices)} vertices, {len(q.arrows)} arrows")
            for a, b in q.arrows:
                print(f"  {a} -> {b}")
        return 0
    t = _parse_triangulation(args.n, args.T)
    q = ar_quiver_of_tilted(t)
    if args.no_op:
        q = dataclasses.replace(q, arrows=tuple((b, a) for a, b in q.arrows))
    if args.format == "dot":
        print(render.tilted_quiver_dot(q))
    elif args.format == "json":
        print(json.dumps(render.tilted_quiver_json(q), indent=2))
    else:
        gabriel = quiver_of_triangulation(t)
        print(f"{len(q.vertices)} modules over End({t})^op")
        print(render.dimvec_table_text(q, gabriel))
    return 0


COMMANDS = {
    "edges": cmd_edges,
    "crossings": cmd_crossings,
    "hom": cmd_hom,
    "ext": cmd_ext,
    "verify": cmd_verify,
    "triangulations": cmd_triangulations,
    "flipwalk": cmd_flipwalk,
    "report": cmd_report,
    "ar-quiver": cmd_ar_quiver,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (InvalidEdgeError, SystemExitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface for the oddwalk toolkit.

Exit codes: 0 success, 1 property failure (failed verification or check
suite), 2 input error.  All JSON goes to stdout with sorted keys, so a
fixed invocation is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .check import run_checks, suite_names
from .coloring import bipartite_superset_coloring
from .dichotomy import decide, parse_schedule, verify_tower
from .equiv import plan_equivalence, verify_equivalence
from .errors import GapInsufficient, OddwalkError, ParseError
from .gadget import GadgetVertex, build_gadget, parse_prefix
from .graphs import Coloring, WitnessedGraph
from .homset import all_homs, is_large, is_tiny
from .limitgraph import (LcVertex, adjacent, level_quotient, neighbors,
                         odd_sibling_obstruction, project_level,
                         same_component, validate_vertex)
from .parity import exact_walk, phi_bound, phi_holds
from .render import (gadget_to_dot, gadget_to_json_dict, gadget_to_text,
                     gadget_to_tikz, graph_to_dot, graph_to_tikz,
                     quotient_to_dot)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def _load_graph(path: str) -> WitnessedGraph:
    return WitnessedGraph.from_text(_read_text(path))


def _emit(data: dict) -> None:
    print(json.dumps(data, indent=2, sort_keys=True))


def _cmd_gadget(args) -> int:
    g = build_gadget(parse_prefix(args.c))
    if args.format == "json":
        _emit({"formatVersion": 1, **gadget_to_json_dict(g)})
    elif args.format == "dot":
        sys.stdout.write(gadget_to_dot(g))
    elif args.format == "tikz":
        sys.stdout.write(gadget_to_tikz(g))
    else:
        sys.stdout.write(gadget_to_text(g))
    return 0


def _cmd_phi(args) -> int:
    g = _load_graph(args.graph)
    vset = tuple(sorted(set(args.set)))
    verdict = phi_bound(g, vset)
    out = {"formatVersion": 1, "set": list(vset),
           "verdict": verdict.to_json_dict()}
    if args.k is not None:
        out["k"] = args.k
        out["holds"] = phi_holds(g, vset, args.k)
    if args.certificate:
        if verdict.no_odd_walk:
            closure, col = bipartite_superset_coloring(g, vset)
            out["closure"] = list(closure)
            out["coloring"] = col.to_json_dict()
        else:
            walk = None
            for u in vset:
                for v in vset:
                    walk = exact_walk(g, u, v, verdict.min_odd_length)
                    if walk is not None:
                        break
                if walk is not None:
                    break
            out["walk"] = walk.to_json_dict()
    _emit(out)
    return 0


def _cmd_homset(args) -> int:
    gadget = build_gadget(parse_prefix(args.c))
    g = _load_graph(args.graph)
    p = all_homs(gadget, g)
    tiny = is_tiny(p)
    large = is_large(p)
    out = {
        "formatVersion": 1,
        "c": list(gadget.prefix),
        "count": p.count(),
        "tiny": {"holds": tiny.tiny,
                 "vertex": tiny.vertex.label if tiny.vertex else None},
        "large": {"holds": large.large,
                  "witness": (large.witness.to_json_dict(gadget)
                              if large.witness else None)},
    }
    if args.project:
        projections = {}
        for label in args.project:
            v = GadgetVertex.from_label(label)
            projections[v.label] = list(p.project(v))
        out["projections"] = projections
    if args.enumerate is not None:
        explicit, total = p.enumerate_homs(args.enumerate)
        out["enumerated"] = [h.to_json_dict(gadget) for h in explicit.homs]
        out["total"] = total
    _emit(out)
    return 0


def _cmd_dichotomy(args) -> int:
    g = _load_graph(args.graph)
    result = decide(g, args.depth, parse_schedule(args.schedule))
    if isinstance(result, Coloring):
        _emit({"formatVersion": 1, "coloring": result.to_json_dict()})
        if not (result.covers(g) and result.is_proper(g)):
            return 1
        return 0
    report = verify_tower(result, g)
    _emit({"formatVersion": 1, "tower": result.to_json_dict(),
           "verified": report.ok})
    if not report.ok:
        for line in report.violations:
            print(f"violation: {line}", file=sys.stderr)
        return 1
    return 0


def _parse_lc_vertex(text: str, prefix) -> LcVertex:
    v = LcVertex.from_text(text)
    validate_vertex(v, prefix)
    return v


def _cmd_lc(args) -> int:
    prefix = parse_prefix(args.c)
    if args.quotient:
        q = level_quotient(prefix)
        _emit({"formatVersion": 1, **q.to_json_dict()})
        return 0
    if args.neighbors is not None:
        v = _parse_lc_vertex(args.neighbors, prefix)
        _emit({"formatVersion": 1, "vertex": v.to_json_dict(),
               "neighbors": [u.to_json_dict() for u in neighbors(v, prefix)]})
        return 0
    if args.adjacent is not None:
        a = _parse_lc_vertex(args.adjacent[0], prefix)
        b = _parse_lc_vertex(args.adjacent[1], prefix)
        _emit({"formatVersion": 1, "adjacent": adjacent(a, b, prefix)})
        return 0
    if args.same_component is not None:
        a = _parse_lc_vertex(args.same_component[0], prefix)
        b = _parse_lc_vertex(args.same_component[1], prefix)
        _emit({"formatVersion": 1, "sameComponent": same_component(a, b, prefix)})
        return 0
    if args.project is not None:
        if args.level is None:
            raise ParseError("--project needs --level")
        v = _parse_lc_vertex(args.project, prefix)
        gv = project_level(v, args.level, prefix)
        _emit({"formatVersion": 1, "vertex": v.to_json_dict(),
               "level": args.level, "projection": gv.label})
        return 0
    if args.sibling is not None:
        k_text, _, t_text = args.sibling.partition(":")
        try:
            k = int(k_text)
            bits = tuple(int(b) for b in t_text)
        except ValueError:
            raise ParseError(f"bad sibling spec {args.sibling!r}; "
                             f"expected K:BITS like 0:01") from None
        if any(b not in (0, 1) for b in bits):
            raise ParseError("sibling bits must be 0/1")
        rep = odd_sibling_obstruction(prefix, k, bits)
        _emit({"formatVersion": 1, **rep.to_json_dict()})
        return 0
    raise ParseError("choose one of --quotient, --neighbors, --adjacent, "
                     "--same-component, --project, --sibling")


def _cmd_equiv(args) -> int:
    c = parse_prefix(args.c)
    d = parse_prefix(args.d)
    try:
        tower = plan_equivalence(c, d, args.depth)
    except GapInsufficient as exc:
        _emit({"formatVersion": 1, "planned": False, "reason": str(exc)})
        return 0
    report = verify_equivalence(tower)
    _emit({"formatVersion": 1, "planned": True, "verified": report.ok,
           "tower": tower.to_json_dict(), "report": report.to_json_dict()})
    return 0 if report.ok else 1


def _cmd_render(args) -> int:
    g = _load_graph(args.graph)
    if args.format == "dot":
        sys.stdout.write(graph_to_dot(g))
    else:
        sys.stdout.write(graph_to_tikz(g))
    return 0


def _cmd_check(args) -> int:
    report = run_checks(seed=args.seed, oracle=args.oracle, only=args.only)
    _emit(report)
    return 0 if report["ok"] else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddwalk",
        description="Finite workbench for the odd-walk coloring dichotomy.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gadget", help="build and render a path gadget")
    p.add_argument("--c", required=True,
                   help="comma-separated parameter prefix; empty for level 0")
    p.add_argument("--format", choices=("dot", "tikz", "json", "text"),
                   default="json")
    p.set_defaults(fn=_cmd_gadget)

    p = sub.add_parser("phi", help="odd-walk test for a vertex set")
    p.add_argument("--graph", required=True, help="graph file or - for stdin")
    p.add_argument("--set", required=True, nargs="+", metavar="VERTEX")
    p.add_argument("--k", type=int, default=None,
                   help="also report the bounded form for this k")
    p.add_argument("--certificate", action="store_true",
                   help="attach a closure coloring or a least odd walk")
    p.set_defaults(fn=_cmd_phi)

    p = sub.add_parser("homset", help="profile of gadget homomorphisms")
    p.add_argument("--c", required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--project", action="append", metavar="LABEL",
                   help="emit the projection at this gadget vertex label")
    p.add_argument("--enumerate", type=int, default=None, metavar="N",
                   help="emit the first N homomorphisms in lex order")
    p.set_defaults(fn=_cmd_homset)

    p = sub.add_parser("dichotomy", help="2-coloring or homomorphism tower")
    p.add_argument("--graph", required=True)
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--schedule", default="default",
                   help='"default" or comma-separated lower bounds')
    p.set_defaults(fn=_cmd_dichotomy)

    p = sub.add_parser("lc", help="queries on the limit graph")
    p.add_argument("--c", required=True)
    p.add_argument("--quotient", action="store_true",
                   help="depth-n class structure as a path")
    p.add_argument("--neighbors", metavar="V",
                   help="vertex syntax m:k:prefix:period, e.g. 1:0:01:10")
    p.add_argument("--adjacent", nargs=2, metavar=("U", "V"))
    p.add_argument("--same-component", nargs=2, metavar=("U", "V"))
    p.add_argument("--project", metavar="V")
    p.add_argument("--level", type=int, default=None)
    p.add_argument("--sibling", metavar="K:BITS",
                   help="odd-distance obstruction for one sibling pair")
    p.set_defaults(fn=_cmd_lc)

    p = sub.add_parser("equiv", help="plan and verify an equivalence tower")
    p.add_argument("--c", required=True, help="source prefix")
    p.add_argument("--d", required=True, help="target prefix")
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(fn=_cmd_equiv)

    p = sub.add_parser("render", help="render a witnessed graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=("dot", "tikz"), default="dot")
    p.set_defaults(fn=_cmd_render)

    p = sub.add_parser("check", help="seeded property-check suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle", action="store_true",
                   help="add brute-force cross-checks")
    p.add_argument("--only", action="append", metavar="SUITE",
                   help=f"limit to a suite: {', '.join(suite_names())}")
    p.set_defaults(fn=_cmd_check)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (OddwalkError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit status: 0 on success, 1 when an input cannot be parsed, 2 when an input
violates a precondition (for instance an invalid ``--matching``).
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Callable, Sequence, TextIO

from .arcs import all_disimplicial_arcs
from .classes import classify
from .digraph import is_st_graph
from .elimination import (is_perfect_elimination_st, matched_elimination,
                          maximal_elimination)
from .io import ParseError, read_graph, read_matching, read_matrix_market, write_scheme


class PreconditionError(Exception):
    pass


def _bool(x: bool) -> str:
    return "true" if x else "false"


def cmd_disimplicial(args, out: TextIO) -> None:
    g = read_graph(args.file, args.bipartite)
    arcs = all_disimplicial_arcs(g)
    if args.json:
        json.dump({"count": len(arcs),
                   "arcs": [[g.label(v), g.label(w)] for v, w in arcs]}, out)
        out.write("\n")
    else:
        out.write(f"# disimplicial: {len(arcs)}\n")
        for v, w in arcs:
            out.write(f"{g.label(v)}\t{g.label(w)}\n")


def cmd_eliminate(args, out: TextIO) -> None:
    g = read_graph(args.file, args.bipartite)
    if args.matching:
        try:
            m = read_matching(args.matching, g, args.bipartite)
            scheme = matched_elimination(g, m)
        except (KeyError, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise PreconditionError(exc.args[0] if exc.args else str(exc)) from exc
    else:
        scheme = maximal_elimination(g)
    decision = None
    if is_st_graph(g):
        decision = scheme.perfect if not args.matching else is_perfect_elimination_st(g)[0]
    if args.json:
        json.dump({"perfect": scheme.perfect, "perfect_elimination": decision,
                   "steps": [[g.label(v), g.label(w)] for v, w in scheme.steps]}, out)
        out.write("\n")
        return
    if decision is not None:
        out.write(f"# perfect_elimination: {_bool(decision)}\n")
    write_scheme(out, g, scheme.steps, scheme.perfect)


def cmd_classify(args, out: TextIO) -> None:
    g = read_graph(args.file, args.bipartite)
    report = classify(g)
    if args.json:
        out.write(report.to_json() + "\n")
        return
    for key, value in vars(report).items():
        if key == "witness":
            out.write(f"witness\t{json.dumps(value)}\n")
        else:
            out.write(f"{key}\t{_bool(value)}\n")


def pivot_sequence(path) -> tuple[list[tuple[int, int]], bool]:
    """Zero fill-in pivots of a Matrix Market file as 1-based ``(row, col)``."""
    smg = read_matrix_market(path)
    scheme = maximal_elimination(smg.graph)
    pivots = [smg.entry(a) for a in scheme.steps]
    return [(i + 1, j + 1) for i, j in pivots], scheme.perfect


def cmd_pivots(args, out: TextIO) -> None:
    pivots, perfect = pivot_sequence(args.file)
    if args.json:
        json.dump({"perfect": perfect, "pivots": [list(p) for p in pivots]}, out)
        out.write("\n")
        return
    out.write(f"# pivots: {len(pivots)}\n# perfect: {_bool(perfect)}\n")
    for i, j in pivots:
        out.write(f"{i}\t{j}\n")


def random_st_edges(rng: random.Random, sources: int, sinks: int, arcs: int) -> list[tuple[int, int]]:
    """Erdos-Renyi style ST graph: ``arcs`` distinct source-to-sink pairs."""
    arcs = min(arcs, sources * sinks)
    picked = rng.sample(range(sources * sinks), arcs)
    return sorted(divmod(k, sinks) for k in picked)


def cmd_generate(args, out: TextIO) -> None:
    rng = random.Random(args.seed)
    for i, j in random_st_edges(rng, args.sources, args.sinks, args.arcs):
        out.write(f"s{i}\tt{j}\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="disimplicial",
                                description="Disimplicial arcs, zero fill-in pivots "
                                            "and diclique graph classes.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser, bipartite: bool = True) -> None:
        sp.add_argument("file", nargs="+", help="input file (several with --each)")
        sp.add_argument("--each", action="store_true", help="process every listed file")
        if bipartite:
            sp.add_argument("--bipartite", action="store_true",
                            help="lines are 'left right' edges of a bipartite graph")
        sp.add_argument("--json", action="store_true", help="JSON instead of TSV")

    sp = sub.add_parser("disimplicial", help="list disimplicial arcs / bisimplicial edges")
    common(sp)
    sp.set_defaults(run=cmd_disimplicial)

    sp = sub.add_parser("eliminate", help="maximal disimplicial elimination scheme")
    common(sp)
    sp.add_argument("--matching", help="restrict the scheme to the arcs in this file")
    sp.set_defaults(run=cmd_eliminate)

    sp = sub.add_parser("classify", help="ST / order / dedekind / WDI / DI flags")
    common(sp)
    sp.set_defaults(run=cmd_classify)

    sp = sub.add_parser("pivots", help="zero fill-in pivots of a Matrix Market pattern")
    common(sp, bipartite=False)
    sp.set_defaults(run=cmd_pivots)

    sp = sub.add_parser("generate", help="random sparse ST edge list")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--sources", type=int, default=10)
    sp.add_argument("--sinks", type=int, default=10)
    sp.add_argument("--arcs", type=int, default=20)
    sp.set_defaults(run=cmd_generate)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    run: Callable = args.run
    files = getattr(args, "file", None)
    if files is not None and len(files) > 1 and not args.each:
        print("error: several files given without --each", file=sys.stderr)
        return 2
    targets = files if files is not None else [None]
    for path in targets:
        if path is not None:
            args.file = path
            if len(targets) > 1:
                out.write(f"## {path}\n")
        try:
            run(args, out)
        except ParseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        except PreconditionError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

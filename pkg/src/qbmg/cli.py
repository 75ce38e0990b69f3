"""Command-line frontend.

Exit status: 0 when the property holds or a construction succeeded, 1 when
the property fails (a witness is printed), 2 on input or guard errors.
"""

from __future__ import annotations

import argparse
import functools
import sys
from typing import Iterable, Optional, Sequence

from . import io
from .enumeration import enumerate_2qbmgs, realizability, search_unexplained_graphs, verify_paper_claims
from .forbidden import forbidden_report
from .graph import COLOR_SWAP, ISO_MODES, ColoredDigraph, GraphError, GuardError, UndirectedGraph, underlying
from .orientation import (
    PreconditionError,
    consistent_orientation,
    dominating_biclique_pipeline,
    is_acyclic,
    ks_decomposition,
)
from .recognition import is_2qbmg
from .tree import TreeError, build_bmg, build_qbmg

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class Output:
    """Collects (key, value) rows; text renders ``key: value``, tsv ``key<TAB>value``."""

    def __init__(self, tsv: bool) -> None:
        self.tsv = tsv
        self.rows: list[str] = []

    def row(self, key: str, value: str = "") -> None:
        if self.tsv:
            self.rows.append(f"{key}\t{value}")
        else:
            self.rows.append(f"{key}: {value}" if value != "" else key)

    def raw(self, lines: Iterable[str]) -> None:
        self.rows.extend(lines)

    def flush(self, stream) -> None:
        for line in self.rows:
            print(line, file=stream)


def _as_undirected(path: str) -> UndirectedGraph:
    g = io.load_graph(path)
    return underlying(g) if isinstance(g, ColoredDigraph) else g


def _ids(vs: Iterable[str], sep: str = " ") -> str:
    return sep.join(sorted(vs))


def cmd_check(args, out: Output) -> int:
    g = io.parse_digraph(args.file)
    report = is_2qbmg(g, first_only=args.first)
    out.row("2qBMG", report.verdict)
    for w in report.violations:
        if out.tsv:
            out.row(w.axiom, ",".join(w.vertices))
        else:
            out.raw([w.render()])
    return EXIT_OK if report.passed else EXIT_FAIL


def _build(args, out: Output, bmg: bool) -> int:
    tree, u = io.parse_tree(args.tree, None if bmg else args.truncation)
    g = build_bmg(tree) if bmg else build_qbmg(tree, u)
    names = ", ".join(f"{i}={c}" for i, c in enumerate(tree.color_names))
    text = f"# colors: {names}\n" + io.render_digraph(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.raw(text.rstrip("\n").split("\n"))
    return EXIT_OK


def cmd_forbidden(args, out: Output) -> int:
    rep = forbidden_report(_as_undirected(args.file))
    for line in rep.lines():
        key, value = line.split(": ", 1)
        out.row(key, value)
    return EXIT_OK if rep.clean else EXIT_FAIL


def cmd_decompose(args, out: Output) -> int:
    d = ks_decomposition(_as_undirected(args.file))
    if d is None:
        print("no K⊕S decomposition with a dominating biclique exists", file=sys.stderr)
        return EXIT_FAIL
    out.row("K", _ids(d.K))
    out.row("S", _ids(d.S))
    if d.degenerate:
        out.row("degenerate", "true")
    return EXIT_OK


def cmd_orient(args, out: Output) -> int:
    g = io.parse_digraph(args.file)
    if args.pipeline:
        res = dominating_biclique_pipeline(g, strict=not args.weak)
        if res is None:
            print("no consistent orientation exists", file=sys.stderr)
            return EXIT_FAIL
        o, k = res
    else:
        o = consistent_orientation(g, strict=not args.weak)
        if o is None:
            print("no consistent orientation exists", file=sys.stderr)
            return EXIT_FAIL
    for a, b in o.sorted_arcs():
        out.row("arc", f"{a} {b}")
    order = is_acyclic(o)
    out.row("topological_order", "none (directed cycle)" if order is None else " ".join(order))
    if args.pipeline:
        out.row("K", _ids(k))
    return EXIT_OK


def cmd_enumerate(args, out: Output) -> int:
    g = io.parse_undirected(args.file)
    res = enumerate_2qbmgs(g, args.mode)
    out.row("assignments", str(res.space))
    out.row("passing", str(res.raw_passing))
    out.row("classes", str(len(res)))
    for i, d in enumerate(res.classes, 1):
        out.row(f"class {i}", " ".join(f"{a}>{b}" for a, b in d.sorted_arcs()))
    return EXIT_OK


def cmd_is_un2qbmg(args, out: Output) -> int:
    g = io.parse_undirected(args.file)
    res = realizability(g, exhaustive=True)
    if out.tsv:
        out.row("un2qBMG", str(res.realizable).lower())
        out.row("assignments", str(res.space))
        out.row("passing", str(res.passing))
    else:
        out.raw([res.summary()])
    return EXIT_OK if res.realizable else EXIT_FAIL


def cmd_verify_paper(args, out: Output) -> int:
    claims = verify_paper_claims()
    if out.tsv:
        out.raw(claims.lines())
    else:
        out.raw(line.replace("\t", "  ") for line in claims.lines())
    return EXIT_OK if claims.ok else EXIT_FAIL


def cmd_search_unexplained(args, out: Output) -> int:
    found = search_unexplained_graphs(args.max_vertices)
    out.row("found", str(len(found)))
    for g in found:
        out.row("graph", " ".join(f"{a}-{b}" for a, b in g.sorted_edges()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tsv", action="store_true", help="tab-separated output")
    p = argparse.ArgumentParser(prog="qbmg", description="Two-colored quasi-best match graph toolkit.")
    sub = p.add_subparsers(dest="command", required=True)
    add = functools.partial(sub.add_parser, parents=[common])

    s = add("check", help="test the 2qBMG axioms on a .qdg digraph")
    s.add_argument("file")
    s.add_argument("--first", action="store_true", help="stop at the first violation")
    s.set_defaults(func=cmd_check)

    s = add("build-qbmg", help="quasi-best match graph of a colored tree")
    s.add_argument("tree")
    s.add_argument("--truncation", "-u", help="truncation map file (defaults to the root)")
    s.add_argument("--output", "-o")
    s.set_defaults(func=lambda a, o: _build(a, o, bmg=False))

    s = add("build-bmg", help="best match graph of a colored tree")
    s.add_argument("tree")
    s.add_argument("--output", "-o")
    s.set_defaults(func=lambda a, o: _build(a, o, bmg=True))

    s = add("forbidden", help="search induced P6, C6 and Sunlet4")
    s.add_argument("file", help=".udg graph, or .qdg digraph (its underlying graph is used)")
    s.set_defaults(func=cmd_forbidden)

    s = add("decompose", help="K⊕S decomposition with a dominating biclique")
    s.add_argument("file")
    s.set_defaults(func=cmd_decompose)

    s = add("orient", help="consistent orientation of a .qdg digraph")
    s.add_argument("file")
    s.add_argument("--pipeline", action="store_true", help="also report the dominating biclique")
    s.add_argument(
        "--weak",
        action="store_true",
        help="only require base equivalences to survive (new ones may appear)",
    )
    s.set_defaults(func=cmd_orient)

    s = add("enumerate", help="all 2qBMGs over a .udg graph up to isomorphism")
    s.add_argument("file")
    s.add_argument("--mode", choices=ISO_MODES, default=COLOR_SWAP)
    s.set_defaults(func=cmd_enumerate)

    s = add("is-un2qbmg", help="is the .udg graph the underlying graph of a 2qBMG")
    s.add_argument("file")
    s.set_defaults(func=cmd_is_un2qbmg)

    s = add("verify-paper", help="re-derive the small-case classification counts")
    s.set_defaults(func=cmd_verify_paper)

    s = add(
        "search-unexplained",
        help="experimental: minimal (P6,C6,Sunlet4)-free bipartite graphs that are not un2qBMGs",
    )
    s.add_argument("--max-vertices", type=int, default=6)
    s.set_defaults(func=cmd_search_unexplained)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.tsv)
    try:
        code = args.func(args, out)
    except (io.ParseError, GraphError, GuardError, TreeError, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    out.flush(sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Text formats for digraphs (.qdg), undirected graphs (.udg), trees and truncation maps.

Graph files are line based with ``#`` comments::

    v <id> <color>      # declare a vertex, color 0 or 1
    a <src> <dst>       # arc (.qdg)
    e <u> <v>           # edge (.udg)

Trees use a Newick dialect with mandatory inner labels and ``leaf:color``
annotations, e.g. ``((a1:A,b1:B)v,b2:B)rho;``.  Truncation files hold
lines ``u <leaf> <color> <node>``.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Union

from .graph import ColoredDigraph, UndirectedGraph
from .tree import PhyloTree, TreeError, TruncationMap

__all__ = [
    "ParseError",
    "parse_digraph_text",
    "parse_undirected_text",
    "parse_digraph",
    "parse_undirected",
    "render_digraph",
    "render_undirected",
    "parse_tree_text",
    "parse_truncation_text",
    "parse_tree",
    "render_truncation",
    "load_graph",
]

PathLike = Union[str, Path]


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<string>") -> None:
        self.line = line
        self.source = source
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _parse_graph(text: str, source: str, link: str):
    color: dict[str, int] = {}
    order: list[str] = []
    links: list[tuple[str, str]] = []
    seen: set = set()
    for no, tok in _lines(text):
        kind = tok[0]
        if kind == "v":
            if len(tok) != 3:
                raise ParseError("expected 'v <id> <color>'", no, source)
            vid, c = tok[1], tok[2]
            if vid in color:
                raise ParseError(f"duplicate vertex {vid!r}", no, source)
            if c not in ("0", "1"):
                raise ParseError(f"color must be 0 or 1, got {c!r}", no, source)
            color[vid] = int(c)
            order.append(vid)
        elif kind == link:
            if len(tok) != 3:
                raise ParseError(f"expected '{link} <u> <v>'", no, source)
            u, v = tok[1], tok[2]
            for x in (u, v):
                if x not in color:
                    raise ParseError(f"unknown vertex {x!r}", no, source)
            if u == v:
                raise ParseError(f"self-loop at {u!r}", no, source)
            key = (u, v) if link == "a" else frozenset((u, v))
            if key in seen:
                raise ParseError(f"duplicate {'arc' if link == 'a' else 'edge'} {u} {v}", no, source)
            if color[u] == color[v]:
                raise ParseError(f"{u} and {v} share color {color[u]}", no, source)
            seen.add(key)
            links.append((u, v))
        else:
            raise ParseError(f"unknown directive {kind!r}", no, source)
    return order, color, links


def parse_digraph_text(text: str, source: str = "<string>") -> ColoredDigraph:
    order, color, arcs = _parse_graph(text, source, "a")
    return ColoredDigraph(order, color, arcs)


def parse_undirected_text(text: str, source: str = "<string>") -> UndirectedGraph:
    order, color, edges = _parse_graph(text, source, "e")
    return UndirectedGraph(order, color, edges)


def parse_digraph(path: PathLike) -> ColoredDigraph:
    return parse_digraph_text(Path(path).read_text(encoding="utf-8"), str(path))


def parse_undirected(path: PathLike) -> UndirectedGraph:
    return parse_undirected_text(Path(path).read_text(encoding="utf-8"), str(path))


def render_digraph(g: ColoredDigraph) -> str:
    lines = [f"v {v} {g.color[v]}" for v in g.vertices]
    lines += [f"a {u} {v}" for u, v in g.sorted_arcs()]
    return "\n".join(lines) + "\n"


def render_undirected(g: UndirectedGraph) -> str:
    lines = [f"v {v} {g.color[v]}" for v in g.vertices]
    lines += [f"e {u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


_NAME = re.compile(r"[^\s(),:;]+")


class _NewickReader:
    def __init__(self, text: str, source: str) -> None:
        self.text = text
        self.pos = 0
        self.source = source
        self.parent: dict[str, str | None] = {}
        self.leaf_color: dict[str, str] = {}

    def fail(self, msg: str):
        line = self.text.count("\n", 0, self.pos) + 1
        raise ParseError(f"{msg} (offset {self.pos})", line, self.source)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def name(self, what: str) -> str:
        self.skip()
        m = _NAME.match(self.text, self.pos)
        if not m:
            self.fail(f"expected {what}")
        self.pos = m.end()
        return m.group()

    def add(self, node: str) -> None:
        if node in self.parent:
            self.fail(f"duplicate node label {node!r}")
        self.parent[node] = None

    def subtree(self) -> str:
        if self.peek() == "(":
            self.pos += 1
            kids = [self.subtree()]
            while self.peek() == ",":
                self.pos += 1
                kids.append(self.subtree())
            if self.peek() != ")":
                self.fail("expected ',' or ')'")
            self.pos += 1
            if len(kids) < 2:
                self.fail("inner node with a single child")
            label = self.name("inner node label")
            self.add(label)
            for k in kids:
                self.parent[k] = label
            return label
        leaf = self.name("leaf label")
        if self.peek() != ":":
            self.fail(f"leaf {leaf!r} needs a ':color' annotation")
        self.pos += 1
        color = self.name("leaf color")
        self.add(leaf)
        self.leaf_color[leaf] = color
        return leaf

    def read(self) -> PhyloTree:
        self.subtree()
        if self.peek() != ";":
            self.fail("expected ';' at end of tree")
        self.pos += 1
        if self.peek():
            self.fail("trailing input after ';'")
        names = sorted(set(self.leaf_color.values()))
        if len(names) > 2:
            raise ParseError(f"at most two leaf colors are supported, got {names}", None, self.source)
        index = {c: i for i, c in enumerate(names)}
        try:
            return PhyloTree(self.parent, {x: index[c] for x, c in self.leaf_color.items()}, names)
        except TreeError as exc:
            raise ParseError(str(exc), None, self.source) from exc


def parse_tree_text(text: str, source: str = "<string>") -> PhyloTree:
    return _NewickReader(text, source).read()


def parse_truncation_text(text: str, tree: PhyloTree, source: str = "<string>") -> TruncationMap:
    index = {c: i for i, c in enumerate(tree.color_names)}
    explicit: dict[tuple[str, int], str] = {}
    for no, tok in _lines(text):
        if tok[0] != "u":
            raise ParseError(f"unknown directive {tok[0]!r}", no, source)
        if len(tok) != 4:
            raise ParseError("expected 'u <leaf> <color> <node>'", no, source)
        _, leaf, cname, node = tok
        if leaf not in tree.leaves:
            raise ParseError(f"unknown leaf {leaf!r}", no, source)
        if cname not in index:
            raise ParseError(f"unknown color {cname!r}", no, source)
        if node not in tree.parent:
            raise ParseError(f"unknown node {node!r}", no, source)
        key = (leaf, index[cname])
        if key in explicit:
            raise ParseError(f"duplicate truncation for ({leaf}, {cname})", no, source)
        try:
            TruncationMap(tree, {key: node})
        except TreeError as exc:
            raise ParseError(str(exc), no, source) from exc
        explicit[key] = node
    return TruncationMap(tree, explicit)


def parse_tree(path: PathLike, truncation_path: PathLike | None = None) -> tuple[PhyloTree, TruncationMap]:
    tree = parse_tree_text(Path(path).read_text(encoding="utf-8"), str(path))
    if truncation_path is None:
        return tree, TruncationMap(tree)
    text = Path(truncation_path).read_text(encoding="utf-8")
    return tree, parse_truncation_text(text, tree, str(truncation_path))


def render_truncation(u: TruncationMap) -> str:
    names = u.tree.color_names
    lines = [f"u {x} {names[s]} {node}" for (x, s), node in sorted(u.explicit.items())]
    return "\n".join(lines) + ("\n" if lines else "")


def load_graph(path: PathLike) -> Union[ColoredDigraph, UndirectedGraph]:
    """Dispatch on the file suffix: ``.qdg`` digraphs, anything else undirected."""
    if str(path).endswith(".qdg"):
        return parse_digraph(path)
    return parse_undirected(path)


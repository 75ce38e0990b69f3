"""Immutable two-colored digraphs and undirected graphs.

Vertex ids are opaque strings, ordered lexicographically wherever a
deterministic order is needed.  Colors are the integers 0 and 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping

__all__ = [
    "GraphError",
    "GuardError",
    "ColoredDigraph",
    "UndirectedGraph",
    "EquivalenceClasses",
    "underlying",
    "induced_subdigraph",
    "induced_subgraph",
    "is_properly_two_colored_bipartite",
    "are_isomorphic",
    "equivalence_classes",
    "COLOR_PRESERVING",
    "COLOR_SWAP",
    "ISO_MODES",
    "MAX_ISO_VERTICES",
]

COLOR_PRESERVING = "color-preserving"
COLOR_SWAP = "color-swap-allowed"
ISO_MODES = (COLOR_PRESERVING, COLOR_SWAP)
MAX_ISO_VERTICES = 10


class GraphError(ValueError):
    """Malformed graph value (unknown vertex, bad coloring, self-loop...)."""


class GuardError(ValueError):
    """An exhaustive routine was asked to run beyond its size guard."""


def _check_vertices(vertices: list[str], color: Mapping[str, int]) -> tuple[str, ...]:
    vs = tuple(sorted(set(vertices)))
    if len(vs) != len(vertices):
        raise GraphError("duplicate vertex ids")
    missing = [v for v in vs if v not in color]
    if missing:
        raise GraphError(f"no color for vertices {missing}")
    extra = set(color) - set(vs)
    if extra:
        raise GraphError(f"color given for unknown vertices {sorted(extra)}")
    return vs


class ColoredDigraph:
    """A vertex-colored digraph without self-loops.

    With ``check_coloring=True`` (the default) every color is 0 or 1 and
    every arc joins differently colored vertices.  ``check_coloring=False``
    is meant for parsing arbitrary digraphs that may then be rejected by
    the recognition routines.
    """

    __slots__ = ("vertices", "color", "arcs", "_out", "_in", "_hash")

    def __init__(
        self,
        vertices: Iterable[str],
        color: Mapping[str, int],
        arcs: Iterable[tuple[str, str]] = (),
        *,
        check_coloring: bool = True,
    ) -> None:
        vertices = list(vertices)
        vs = _check_vertices(vertices, color)
        arcs = frozenset((u, v) for u, v in arcs)
        out: dict[str, set[str]] = {v: set() for v in vs}
        inn: dict[str, set[str]] = {v: set() for v in vs}
        for u, v in arcs:
            if u not in out or v not in out:
                raise GraphError(f"arc ({u},{v}) uses an unknown vertex")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if check_coloring and color[u] == color[v]:
                raise GraphError(f"arc ({u},{v}) joins two vertices of color {color[u]}")
            out[u].add(v)
            inn[v].add(u)
        if check_coloring:
            bad = [v for v in vs if color[v] not in (0, 1)]
            if bad:
                raise GraphError(f"colors must be 0 or 1, got {[color[v] for v in bad]}")
        self.vertices = vs
        self.color = MappingProxyType({v: color[v] for v in vs})
        self.arcs = arcs
        self._out = MappingProxyType({v: frozenset(s) for v, s in out.items()})
        self._in = MappingProxyType({v: frozenset(s) for v, s in inn.items()})
        self._hash = None

    def out_neighbors(self, v: str) -> frozenset[str]:
        return self._out[v]

    def in_neighbors(self, v: str) -> frozenset[str]:
        return self._in[v]

    def has_arc(self, u: str, v: str) -> bool:
        return (u, v) in self.arcs

    def adjacent(self, u: str, v: str) -> bool:
        return (u, v) in self.arcs or (v, u) in self.arcs

    def sorted_arcs(self) -> list[tuple[str, str]]:
        return sorted(self.arcs)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredDigraph):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and dict(self.color) == dict(other.color)
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vertices, tuple(self.color[v] for v in self.vertices), self.arcs))
        return self._hash

    def __repr__(self) -> str:
        return f"ColoredDigraph(n={len(self.vertices)}, arcs={self.sorted_arcs()})"


class UndirectedGraph:
    """A vertex-colored simple undirected graph."""

    __slots__ = ("vertices", "color", "edges", "_adj", "_hash")

    def __init__(
        self,
        vertices: Iterable[str],
        color: Mapping[str, int],
        edges: Iterable[Iterable[str]] = (),
        *,
        check_coloring: bool = True,
    ) -> None:
        vertices = list(vertices)
        vs = _check_vertices(vertices, color)
        adj: dict[str, set[str]] = {v: set() for v in vs}
        es = set()
        for e in edges:
            u, v = tuple(e)
            if u not in adj or v not in adj:
                raise GraphError(f"edge {u}{v} uses an unknown vertex")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if check_coloring and color[u] == color[v]:
                raise GraphError(f"edge {u}{v} joins two vertices of color {color[u]}")
            es.add(frozenset((u, v)))
            adj[u].add(v)
            adj[v].add(u)
        self.vertices = vs
        self.color = MappingProxyType({v: color[v] for v in vs})
        self.edges = frozenset(es)
        self._adj = MappingProxyType({v: frozenset(s) for v, s in adj.items()})
        self._hash = None

    def neighbors(self, v: str) -> frozenset[str]:
        return self._adj[v]

    def adjacent(self, u: str, v: str) -> bool:
        return v in self._adj[u]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and dict(self.color) == dict(other.color)
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vertices, tuple(self.color[v] for v in self.vertices), self.edges))
        return self._hash

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={len(self.vertices)}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class EquivalenceClasses:
    """Partition of a vertex set by identical (out, in) neighborhoods."""

    blocks: tuple[tuple[str, ...], ...]
    signatures: tuple[tuple[frozenset[str], frozenset[str]], ...]

    def block_of(self, v: str) -> tuple[str, ...]:
        for block in self.blocks:
            if v in block:
                return block
        raise KeyError(v)

    def as_partition(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(b) for b in self.blocks)


def underlying(g: ColoredDigraph) -> UndirectedGraph:
    return UndirectedGraph(
        g.vertices, g.color, (frozenset(a) for a in g.arcs), check_coloring=False
    )


def _subset(vertices: Iterable[str], present) -> frozenset[str]:
    keep = frozenset(vertices)
    unknown = [v for v in keep if v not in present]
    if unknown:
        raise GraphError(f"unknown vertices {sorted(unknown)}")
    return keep


def induced_subdigraph(g: ColoredDigraph, vertices: Iterable[str]) -> ColoredDigraph:
    keep = _subset(vertices, g)
    return ColoredDigraph(
        keep,
        {v: g.color[v] for v in keep},
        ((u, v) for u, v in g.arcs if u in keep and v in keep),
        check_coloring=False,
    )


def induced_subgraph(g: UndirectedGraph, vertices: Iterable[str]) -> UndirectedGraph:
    keep = _subset(vertices, g)
    return UndirectedGraph(
        keep,
        {v: g.color[v] for v in keep},
        (e for e in g.edges if e <= keep),
        check_coloring=False,
    )


def is_properly_two_colored_bipartite(g: UndirectedGraph) -> bool:
    if any(g.color[v] not in (0, 1) for v in g.vertices):
        return False
    return all(len({g.color[v] for v in e}) == 2 for e in g.edges)


def equivalence_classes(g: ColoredDigraph) -> EquivalenceClasses:
    groups: dict[tuple[frozenset[str], frozenset[str]], list[str]] = {}
    for v in g.vertices:
        groups.setdefault((g.out_neighbors(v), g.in_neighbors(v)), []).append(v)
    ordered = sorted(groups.items(), key=lambda item: item[1][0])
    return EquivalenceClasses(
        blocks=tuple(tuple(vs) for _, vs in ordered),
        signatures=tuple(sig for sig, _ in ordered),
    )


def _iso_search(g1: ColoredDigraph, g2: ColoredDigraph, swap: bool) -> bool:
    def target_color(v: str) -> int:
        c = g1.color[v]
        return 1 - c if swap else c

    def profile(g: ColoredDigraph, v: str, c: int) -> tuple[int, int, int]:
        return (c, len(g.out_neighbors(v)), len(g.in_neighbors(v)))

    prof2: dict[tuple[int, int, int], list[str]] = {}
    for v in g2.vertices:
        prof2.setdefault(profile(g2, v, g2.color[v]), []).append(v)
    prof1: dict[tuple[int, int, int], list[str]] = {}
    for v in g1.vertices:
        prof1.setdefault(profile(g1, v, target_color(v)), []).append(v)
    if {k: len(v) for k, v in prof1.items()} != {k: len(v) for k, v in prof2.items()}:
        return False

    # most constrained vertices first
    order = sorted(g1.vertices, key=lambda v: (len(prof1[profile(g1, v, target_color(v))]), v))
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in prof2[profile(g1, v, target_color(v))]:
            if w in used:
                continue
            ok = True
            for x, y in mapping.items():
                if g1.has_arc(v, x) != g2.has_arc(w, y) or g1.has_arc(x, v) != g2.has_arc(y, w):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return extend(0)


def are_isomorphic(g1: ColoredDigraph, g2: ColoredDigraph, mode: str = COLOR_PRESERVING) -> bool:
    """Exhaustive colored-digraph isomorphism test for small graphs.

    In ``color-swap-allowed`` mode the bijection may also exchange the two
    color classes globally.
    """
    if mode not in ISO_MODES:
        raise ValueError(f"unknown isomorphism mode {mode!r}")
    n = max(len(g1), len(g2))
    if n > MAX_ISO_VERTICES:
        raise GuardError(f"isomorphism test limited to {MAX_ISO_VERTICES} vertices, got {n}")
    if len(g1) != len(g2) or len(g1.arcs) != len(g2.arcs):
        return False
    if _iso_search(g1, g2, swap=False):
        return True
    return mode == COLOR_SWAP and _iso_search(g1, g2, swap=True)


def pairs(vertices: Iterable[str]):
    """Unordered vertex pairs in lexicographic order."""
    return combinations(sorted(vertices), 2)

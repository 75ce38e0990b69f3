"""Exhaustive arc-assignment enumeration over a fixed underlying graph.

Every edge of the base graph takes one of three states (forward,
backward, both), so the realized digraph always has the base graph as its
underlying graph.  The search itself runs in :mod:`qbmg.kernels`.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from . import kernels, named
from .forbidden import forbidden_report
from .graph import (
    COLOR_PRESERVING,
    COLOR_SWAP,
    ISO_MODES,
    ColoredDigraph,
    GraphError,
    GuardError,
    UndirectedGraph,
    are_isomorphic,
    induced_subdigraph,
    induced_subgraph,
    is_properly_two_colored_bipartite,
    underlying,
)
from .tree import build_qbmg, random_tree, random_truncation

__all__ = [
    "MAX_ENUM_EDGES",
    "Enumeration",
    "Realizability",
    "enumerate_2qbmgs",
    "realizability",
    "is_un2qbmg",
    "ClaimRow",
    "PaperClaims",
    "verify_paper_claims",
    "HereditaryReport",
    "hereditary_spot_check",
    "search_unexplained_graphs",
]

MAX_ENUM_EDGES = 16


def _prepare(g: UndirectedGraph) -> tuple[list[tuple[str, str]], list[tuple[int, int]]]:
    if not is_properly_two_colored_bipartite(g):
        raise GraphError("base graph must be properly two-colored")
    edges = g.sorted_edges()
    if len(edges) > MAX_ENUM_EDGES:
        raise GuardError(f"enumeration limited to {MAX_ENUM_EDGES} edges (3^{MAX_ENUM_EDGES}), got {len(edges)}")
    index = {v: i for i, v in enumerate(g.vertices)}
    return edges, [(index[u], index[v]) for u, v in edges]


def _search_order(n: int, idx_edges: list[tuple[int, int]]) -> list[int]:
    """Edge positions in BFS order so that related arcs are decided together."""
    adj: dict[int, list[int]] = {i: [] for i in range(n)}
    for pos, (i, j) in enumerate(idx_edges):
        adj[i].append(pos)
        adj[j].append(pos)
    order, seen_e, seen_v = [], set(), set()
    for s in range(n):
        if s in seen_v:
            continue
        seen_v.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for pos in adj[v]:
                if pos in seen_e:
                    continue
                seen_e.add(pos)
                order.append(pos)
                w = idx_edges[pos][0] + idx_edges[pos][1] - v
                if w not in seen_v:
                    seen_v.add(w)
                    queue.append(w)
    return order


def _run_search(g: UndirectedGraph, first_only: bool, collect: bool):
    edges, idx_edges = _prepare(g)
    order = _search_order(len(g), idx_edges)
    count, found = kernels.search_assignments(
        len(g), [idx_edges[p] for p in order], first_only=first_only, collect=collect
    )
    states = []
    for st in found:
        aligned = [0] * len(edges)
        for p, s in zip(order, st):
            aligned[p] = s
        states.append(tuple(aligned))
    return edges, count, sorted(states)


def realize(g: UndirectedGraph, edges: list[tuple[str, str]], states) -> ColoredDigraph:
    arcs = []
    for (u, v), s in zip(edges, states):
        if s != kernels.BACKWARD:
            arcs.append((u, v))
        if s != kernels.FORWARD:
            arcs.append((v, u))
    return ColoredDigraph(g.vertices, g.color, arcs)


@dataclass(frozen=True)
class Enumeration:
    base: UndirectedGraph
    mode: str
    space: int
    raw_passing: int
    classes: tuple[ColoredDigraph, ...]

    def __len__(self) -> int:
        return len(self.classes)


def _dedupe(digraphs: list[ColoredDigraph], mode: str) -> list[ColoredDigraph]:
    reps: list[ColoredDigraph] = []
    for d in digraphs:
        if not any(are_isomorphic(d, r, mode) for r in reps):
            reps.append(d)
    return reps


def enumerate_2qbmgs(g: UndirectedGraph, mode: str = COLOR_PRESERVING) -> Enumeration:
    """All 2qBMGs with underlying graph ``g``, one representative per isomorphism class.

    Representatives are the first class members in odometer order over the
    lexicographically sorted edges (forward < backward < both).
    """
    if mode not in ISO_MODES:
        raise ValueError(f"unknown isomorphism mode {mode!r}")
    edges, count, states = _run_search(g, first_only=False, collect=True)
    digraphs = [realize(g, edges, st) for st in states]
    return Enumeration(g, mode, 3 ** len(edges), count, tuple(_dedupe(digraphs, mode)))


@dataclass(frozen=True)
class Realizability:
    base: UndirectedGraph
    space: int
    passing: Optional[int]  # None when the search stopped at the first hit
    witness: Optional[ColoredDigraph]

    @property
    def realizable(self) -> bool:
        return self.witness is not None

    def summary(self) -> str:
        if self.realizable:
            counted = f", {self.passing} pass" if self.passing is not None else ""
            return f"un2qBMG ({self.space} assignments{counted})"
        return f"not an un2qBMG ({self.space} assignments, 0 pass)"


def realizability(g: UndirectedGraph, exhaustive: bool = False) -> Realizability:
    """Search for a 2qBMG realizing ``g``; ``exhaustive`` also counts all of them."""
    if exhaustive:
        edges, count, _ = _run_search(g, first_only=False, collect=False)
        witness = None
        if count:
            edges, _, states = _run_search(g, first_only=True, collect=True)
            witness = realize(g, edges, states[0])
        return Realizability(g, 3 ** len(edges), count, witness)
    edges, count, states = _run_search(g, first_only=True, collect=True)
    witness = realize(g, edges, states[0]) if states else None
    return Realizability(g, 3 ** len(edges), 0 if witness is None else None, witness)


def is_un2qbmg(g: UndirectedGraph) -> bool:
    return realizability(g).realizable


@dataclass(frozen=True)
class ClaimRow:
    name: str
    expected: int
    preserving: int
    swap: int
    space: int
    raw_passing: int

    @property
    def matching_modes(self) -> tuple[str, ...]:
        return tuple(
            m for m, got in ((COLOR_PRESERVING, self.preserving), (COLOR_SWAP, self.swap)) if got == self.expected
        )

    def line(self) -> str:
        verdict = "ok" if self.matching_modes else "MISMATCH"
        return f"{self.name}\t{self.expected}\t{self.preserving}\t{self.swap}\t{verdict}"


@dataclass(frozen=True)
class PaperClaims:
    rows: tuple[ClaimRow, ...]
    matching_mode: Optional[str]

    @property
    def ok(self) -> bool:
        return self.matching_mode is not None

    def lines(self) -> list[str]:
        out = ["claim\texpected\tcolor-preserving\tcolor-swap-allowed\tverdict"]
        out.extend(r.line() for r in self.rows)
        out.append(f"matching mode: {self.matching_mode or 'none'}")
        return out


CLAIMS = (
    ("P4", lambda: named.path_graph(4), 4),
    ("P5", lambda: named.path_graph(5), 6),
    ("C4", lambda: named.cycle_graph(4), 10),
    ("P6", lambda: named.path_graph(6), 0),
    ("C6", lambda: named.cycle_graph(6), 0),
    ("Sunlet4", named.sunlet4, 0),
)


def verify_paper_claims() -> PaperClaims:
    """Classification counts for P4, P5, C4 and emptiness for P6, C6, Sunlet4, in both modes."""
    rows = []
    for name, make, expected in CLAIMS:
        g = make()
        a = enumerate_2qbmgs(g, COLOR_PRESERVING)
        b = enumerate_2qbmgs(g, COLOR_SWAP)
        rows.append(ClaimRow(name, expected, len(a), len(b), a.space, a.raw_passing))
    matching = None
    for mode in ISO_MODES:
        if all(mode in r.matching_modes for r in rows):
            matching = mode
            break
    return PaperClaims(tuple(rows), matching)


@dataclass
class HereditaryReport:
    checked_digraph: int = 0
    checked_undirected: int = 0
    skipped_guard: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def hereditary_spot_check(
    samples: int,
    rng: Optional[random.Random] = None,
    min_leaves: int = 2,
    max_leaves: int = 16,
    undirected_quota: Optional[int] = None,
) -> HereditaryReport:
    """Random induced subgraphs of generated 2qBMGs stay 2qBMGs / un2qBMGs.

    Digraph heredity is checked on every sample; the undirected side runs
    the exhaustive realizability search on at most ``undirected_quota``
    samples whose subgraph is within the edge guard.
    """
    from .recognition import is_2qbmg

    rng = rng or random.Random(0)
    quota = samples if undirected_quota is None else undirected_quota
    report = HereditaryReport()
    for _ in range(samples):
        tree = random_tree(rng, rng.randint(min_leaves, max_leaves))
        g = build_qbmg(tree, random_truncation(rng, tree, p_root=0.2))
        k = rng.randint(0, len(g))
        sub = induced_subdigraph(g, rng.sample(list(g.vertices), k))
        report.checked_digraph += 1
        if not is_2qbmg(sub).passed:
            report.counterexamples.append(("digraph", sub))
            continue
        if report.checked_undirected >= quota:
            continue
        und = underlying(sub)
        if len(und.edges) > MAX_ENUM_EDGES:
            report.skipped_guard += 1
            continue
        report.checked_undirected += 1
        if not is_un2qbmg(und):
            report.counterexamples.append(("undirected", und))
    return report


def search_unexplained_graphs(max_vertices: int = 7) -> list[UndirectedGraph]:
    """Experimental: connected bipartite (P6, C6, Sunlet4)-free graphs that are not un2qBMGs.

    Only graphs whose one-vertex-deleted subgraphs are all un2qBMGs are
    returned, i.e. minimal ones.  Runs over the networkx graph atlas, so
    ``max_vertices`` is capped at 7.
    """
    import networkx as nx

    if max_vertices > 7:
        raise GuardError("graph atlas covers at most 7 vertices")
    found = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n < 2 or n > max_vertices or not nx.is_connected(h) or not nx.is_bipartite(h):
            continue
        if h.number_of_edges() > MAX_ENUM_EDGES:
            continue
        side = nx.bipartite.color(h)
        names = {v: f"v{v + 1}" for v in h.nodes}
        g = UndirectedGraph(names.values(), {names[v]: side[v] for v in h.nodes}, ((names[a], names[b]) for a, b in h.edges))
        if not forbidden_report(g).clean or is_un2qbmg(g):
            continue
        if all(is_un2qbmg(induced_subgraph(g, set(g.vertices) - {v})) for v in g.vertices):
            found.append(g)
    return found

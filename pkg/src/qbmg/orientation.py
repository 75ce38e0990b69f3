"""Symmetric pairs, orientations, acyclicity and K⊕S decompositions."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Optional, Union

from .graph import (
    ColoredDigraph,
    GraphError,
    GuardError,
    UndirectedGraph,
    equivalence_classes,
    induced_subdigraph,
    induced_subgraph,
    underlying,
)
from .recognition import AxiomReport, is_2qbmg

__all__ = [
    "Orientation",
    "KSDecomposition",
    "PreconditionError",
    "symmetric_pairs",
    "check_star_condition",
    "all_orientations",
    "consistent_orientation",
    "is_consistent",
    "is_acyclic",
    "maximal_bicliques",
    "ks_decomposition",
    "validate_ks",
    "dominating_biclique_pipeline",
    "biclique_no_symmetric_is_2qbmg",
    "MAX_ORIENTATION_PAIRS",
    "MAX_KS_VERTICES",
]

MAX_ORIENTATION_PAIRS = 20
MAX_KS_VERTICES = 24


class PreconditionError(ValueError):
    """Input violates an operation's precondition (not an axiom failure)."""


@dataclass(frozen=True)
class Orientation:
    base: ColoredDigraph
    kept_arcs: frozenset[tuple[str, str]]

    def __post_init__(self) -> None:
        if not self.kept_arcs <= self.base.arcs:
            raise GraphError("orientation keeps arcs that are not in the base digraph")
        for u, v in self.base.arcs:
            back = (v, u) in self.base.arcs
            if back and ((u, v) in self.kept_arcs) == ((v, u) in self.kept_arcs):
                raise GraphError(f"symmetric pair {{{u},{v}}} must keep exactly one arc")
            if not back and (u, v) not in self.kept_arcs:
                raise GraphError(f"non-symmetric arc ({u},{v}) must be kept")

    def digraph(self) -> ColoredDigraph:
        return ColoredDigraph(self.base.vertices, self.base.color, self.kept_arcs, check_coloring=False)

    def sorted_arcs(self) -> list[tuple[str, str]]:
        return sorted(self.kept_arcs)


@dataclass(frozen=True)
class KSDecomposition:
    """Partition into a biclique part K and a stable part S.

    ``parts`` holds one (K_i, S_i) per connected component; K and S are
    their unions.  For a connected graph there is a single part.
    """

    K: frozenset[str]
    S: frozenset[str]
    parts: tuple[tuple[frozenset[str], frozenset[str]], ...]

    @property
    def degenerate(self) -> bool:
        return any(not k for k, _ in self.parts)

    def lines(self) -> list[str]:
        return [f"K: {' '.join(sorted(self.K))}", f"S: {' '.join(sorted(self.S))}"]


def symmetric_pairs(g: ColoredDigraph) -> list[tuple[str, str]]:
    return sorted((u, v) for u, v in g.arcs if u < v and (v, u) in g.arcs)


def check_star_condition(g: ColoredDigraph) -> bool:
    """No two symmetric pairs share an endpoint."""
    seen: set[str] = set()
    for u, v in symmetric_pairs(g):
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def _orient(g: ColoredDigraph, sym: list[tuple[str, str]], choice: Iterable[int]) -> Orientation:
    drop = {(v, u) if c == 0 else (u, v) for (u, v), c in zip(sym, choice)}
    return Orientation(g, g.arcs - drop)


def all_orientations(g: ColoredDigraph, max_pairs: int = MAX_ORIENTATION_PAIRS) -> Iterator[Orientation]:
    """Every orientation; choice 0 keeps (u,v) with u < v, choice 1 keeps (v,u)."""
    sym = symmetric_pairs(g)
    if len(sym) > max_pairs:
        raise GuardError(f"{len(sym)} symmetric pairs exceed the guard of {max_pairs}")
    for choice in product((0, 1), repeat=len(sym)):
        yield _orient(g, sym, choice)


def is_consistent(o: Orientation, strict: bool = True) -> bool:
    """Strict: same equivalence partition as the base.  Non-strict: base
    equivalences survive, new ones may appear."""
    oriented = equivalence_classes(o.digraph()).as_partition()
    base = equivalence_classes(o.base).as_partition()
    if strict:
        return oriented == base
    return all(any(b <= p for p in oriented) for b in base)


def consistent_orientation(g: ColoredDigraph, strict: bool = True) -> Optional[Orientation]:
    """Lexicographically first consistent orientation, or None.

    ``strict`` selects the consistency notion of :func:`is_consistent`.
    Pairs are decided in sorted order (keep (u,v), u < v, first).  Once all
    symmetric pairs at two vertices are decided their equivalence in the
    orientation is fixed, so mismatches with the base prune the search.
    Only vertices with equal underlying neighborhoods can ever be
    equivalent, which keeps the checks local.
    """
    sym = symmetric_pairs(g)
    if len(sym) > MAX_ORIENTATION_PAIRS:
        raise GuardError(f"{len(sym)} symmetric pairs exceed the guard of {MAX_ORIENTATION_PAIRS}")
    base_eq = equivalence_classes(g)
    block = {v: i for i, b in enumerate(base_eq.blocks) for v in b}
    und = underlying(g)
    twins: dict[frozenset[str], list[str]] = {}
    for v in g.vertices:
        twins.setdefault(und.neighbors(v), []).append(v)
    # pair index after which every symmetric pair at v is decided
    last_pair: dict[str, int] = {v: -1 for v in g.vertices}
    for i, (u, v) in enumerate(sym):
        last_pair[u] = last_pair[v] = i
    checks_at: dict[int, list[tuple[str, str]]] = {}
    for group in twins.values():
        for i, a in enumerate(group):
            for b in group[i + 1:]:
                checks_at.setdefault(max(last_pair[a], last_pair[b]), []).append((a, b))

    out = {v: set(g.out_neighbors(v)) for v in g.vertices}
    inn = {v: set(g.in_neighbors(v)) for v in g.vertices}

    def agrees(a: str, b: str) -> bool:
        same = out[a] == out[b] and inn[a] == inn[b]
        if strict:
            return same == (block[a] == block[b])
        return same or block[a] != block[b]

    if not all(agrees(a, b) for a, b in checks_at.get(-1, ())):
        return None
    choice: list[int] = []

    def rec(i: int) -> bool:
        if i == len(sym):
            return True
        u, v = sym[i]
        for c in (0, 1):
            src, dst = (v, u) if c == 0 else (u, v)  # arc to drop
            out[src].discard(dst)
            inn[dst].discard(src)
            choice.append(c)
            if all(agrees(a, b) for a, b in checks_at.get(i, ())) and rec(i + 1):
                return True
            choice.pop()
            out[src].add(dst)
            inn[dst].add(src)
        return False

    if not rec(0):
        return None
    result = _orient(g, sym, choice)
    assert is_consistent(result, strict)
    return result


def is_acyclic(g: Union[ColoredDigraph, Orientation]) -> Optional[list[str]]:
    """Topological order (smallest available vertex first) or None on a directed cycle."""
    if isinstance(g, Orientation):
        g = g.digraph()
    sym = symmetric_pairs(g)
    if sym:
        raise PreconditionError(f"digraph is not oriented: symmetric pair {{{sym[0][0]},{sym[0][1]}}}")
    indeg = {v: len(g.in_neighbors(v)) for v in g.vertices}
    ready = [v for v, d in indeg.items() if d == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for w in g.out_neighbors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    return order if len(order) == len(g.vertices) else None


def _components(g: UndirectedGraph) -> list[list[str]]:
    seen: set[str] = set()
    comps = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = []
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def maximal_bicliques(g: UndirectedGraph) -> list[frozenset[str]]:
    """Maximal bicliques with both sides nonempty, by neighborhood-intersection closure.

    Closed color-0 sides are intersections of neighborhoods of color-1
    vertices; each closed side X pairs with its common neighborhood.
    """
    side1 = [v for v in g.vertices if g.color[v] == 1]
    closed: set[frozenset[str]] = set()
    frontier = {g.neighbors(v) for v in side1 if g.neighbors(v)}
    while frontier:
        closed |= frontier
        new = set()
        for x in frontier:
            for v in side1:
                y = x & g.neighbors(v)
                if y and y not in closed:
                    new.add(y)
        frontier = new
    result = set()
    for x in closed:
        common = frozenset(v for v in side1 if x <= g.neighbors(v))
        if common:
            result.add(x | common)
    return sorted(result, key=lambda k: (-len(k), sorted(k)))


def _is_biclique(g: UndirectedGraph, k: frozenset[str]) -> bool:
    a = [v for v in k if g.color[v] == 0]
    b = [v for v in k if g.color[v] == 1]
    if not a or not b:
        return False
    sub = induced_subgraph(g, k)
    return len(sub.edges) == len(a) * len(b)


def _valid_part(g: UndirectedGraph, comp: frozenset[str], k: frozenset[str]) -> bool:
    if not k:
        return len(comp) == 1
    if not k <= comp or not _is_biclique(g, k):
        return False
    s = comp - k
    if any(g.adjacent(u, v) for u in s for v in s):
        return False
    return all(g.neighbors(v) & k for v in s)


def validate_ks(g: UndirectedGraph, d: KSDecomposition) -> bool:
    """Independent re-check of partition, biclique, stability and domination."""
    if d.K | d.S != frozenset(g.vertices) or d.K & d.S:
        return False
    comps = {frozenset(c) for c in _components(g)}
    if {k | s for k, s in d.parts} != comps:
        return False
    if frozenset().union(*(k for k, _ in d.parts)) != d.K:
        return False
    if any(g.adjacent(u, v) for u in d.S for v in d.S):
        return False
    return all(_valid_part(g, k | s, k) for k, s in d.parts)


def ks_decomposition(g: UndirectedGraph) -> Optional[KSDecomposition]:
    """K⊕S split of every connected component with a dominating biclique K.

    Isolated vertices go to S.  Within a component the largest valid
    maximal biclique wins, ties broken lexicographically.
    """
    if len(g) > MAX_KS_VERTICES:
        raise GuardError(f"decomposition search limited to {MAX_KS_VERTICES} vertices, got {len(g)}")
    if any(g.color[v] not in (0, 1) for v in g.vertices) or any(
        len({g.color[v] for v in e}) != 2 for e in g.edges
    ):
        raise GraphError("ks_decomposition needs a properly two-colored bipartite graph")
    parts = []
    for comp in _components(g):
        cset = frozenset(comp)
        if len(comp) == 1:
            parts.append((frozenset(), cset))
            continue
        sub = induced_subgraph(g, comp)
        for k in maximal_bicliques(sub):
            if _valid_part(sub, cset, k):
                parts.append((k, cset - k))
                break
        else:
            return None
    d = KSDecomposition(
        K=frozenset().union(*(k for k, _ in parts)),
        S=frozenset().union(*(s for _, s in parts)),
        parts=tuple(parts),
    )
    if not validate_ks(g, d):
        raise AssertionError("decomposition failed independent validation")
    return d


def dominating_biclique_pipeline(
    g: ColoredDigraph, strict: bool = True
) -> Optional[tuple[Orientation, frozenset[str]]]:
    """Consistent orientation plus a dominating biclique whose oriented part is acyclic.

    Returns None when no consistent orientation (in the ``strict`` sense)
    exists.
    """
    report = is_2qbmg(g)
    if not report.passed:
        raise PreconditionError(f"input is not a 2qBMG: {report.violations[0].render()}")
    o = consistent_orientation(g, strict)
    if o is None:
        return None
    d = ks_decomposition(underlying(g))
    if d is None:
        raise AssertionError("un2qBMG without K⊕S decomposition")
    if is_acyclic(induced_subdigraph(o.digraph(), d.K)) is None:
        raise AssertionError("oriented biclique contains a directed cycle")
    return o, d.K


def biclique_no_symmetric_is_2qbmg(g: ColoredDigraph, k: Iterable[str]) -> AxiomReport:
    """Axiom report of the subdigraph induced on a symmetric-free biclique."""
    sub = induced_subdigraph(g, k)
    und = underlying(sub)
    if not _is_biclique(und, frozenset(sub.vertices)):
        raise PreconditionError("vertex set does not induce a biclique")
    sym = symmetric_pairs(sub)
    if sym:
        raise PreconditionError(f"induced subdigraph has symmetric pair {{{sym[0][0]},{sym[0][1]}}}")
    return is_2qbmg(sub)

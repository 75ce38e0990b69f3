"""Induced paths, induced cycles, Sunlet4 and chordal bipartiteness."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .graph import UndirectedGraph

__all__ = [
    "ForbiddenReport",
    "find_induced_path",
    "find_induced_cycle",
    "longest_induced_path",
    "is_bipartite",
    "is_chordal_bipartite",
    "find_sunlet4",
    "forbidden_report",
    "induces_path",
    "induces_cycle",
    "induces_sunlet4",
    "brute_force_induced_path",
    "brute_force_induced_cycle",
    "brute_force_sunlet4",
    "MAX_BRUTE_FORCE_VERTICES",
]

MAX_BRUTE_FORCE_VERTICES = 10


def _induced_edges(g: UndirectedGraph, vs: Sequence[str]) -> set[frozenset[str]]:
    keep = set(vs)
    return {e for e in g.edges if e <= keep}


def induces_path(g: UndirectedGraph, seq: Sequence[str]) -> bool:
    """``seq`` are distinct vertices inducing exactly the path seq[0]-...-seq[-1]."""
    if len(set(seq)) != len(seq):
        return False
    want = {frozenset(p) for p in zip(seq, seq[1:])}
    return _induced_edges(g, seq) == want


def induces_cycle(g: UndirectedGraph, seq: Sequence[str]) -> bool:
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    want = {frozenset(p) for p in zip(seq, [*seq[1:], seq[0]])}
    return _induced_edges(g, seq) == want


def induces_sunlet4(g: UndirectedGraph, seq: Sequence[str]) -> bool:
    """``seq`` = cycle a,b,c,d followed by their pendants pa,pb,pc,pd."""
    if len(seq) != 8 or len(set(seq)) != 8:
        return False
    cyc, pend = seq[:4], seq[4:]
    want = {frozenset(p) for p in zip(cyc, [*cyc[1:], cyc[0]])}
    want |= {frozenset(p) for p in zip(cyc, pend)}
    return _induced_edges(g, seq) == want


def find_induced_path(g: UndirectedGraph, k: int) -> Optional[list[str]]:
    """First induced path on ``k`` vertices in lexicographic DFS order."""
    if k < 2:
        raise ValueError("induced path search needs k >= 2")
    if k > len(g):
        return None
    path: list[str] = []
    on_path: set[str] = set()

    def extend() -> bool:
        if len(path) == k:
            return True
        last = path[-1]
        for x in sorted(g.neighbors(last)):
            if x in on_path:
                continue
            # x may touch only the current endpoint
            if len(g.neighbors(x) & on_path) != 1:
                continue
            path.append(x)
            on_path.add(x)
            if extend():
                return True
            path.pop()
            on_path.discard(x)
        return False

    for start in g.vertices:
        path[:] = [start]
        on_path.clear()
        on_path.add(start)
        if extend():
            return list(path)
    return None


def find_induced_cycle(g: UndirectedGraph, k: int) -> Optional[list[str]]:
    """First induced cycle on ``k`` vertices, starting at its smallest vertex."""
    if k < 3:
        raise ValueError("induced cycle search needs k >= 3")
    if k > len(g):
        return None
    path: list[str] = []
    on_path: set[str] = set()

    def extend() -> bool:
        first, last = path[0], path[-1]
        for x in sorted(g.neighbors(last)):
            if x in on_path or x < first:
                continue
            touching = g.neighbors(x) & on_path
            if len(path) == k - 1:
                if touching == {first, last} and path[1] < x:
                    path.append(x)
                    return True
                continue
            if touching != {last}:
                continue
            path.append(x)
            on_path.add(x)
            if extend():
                return True
            path.pop()
            on_path.discard(x)
        return False

    for start in g.vertices:
        path[:] = [start]
        on_path.clear()
        on_path.add(start)
        if extend():
            return list(path)
    return None


def longest_induced_path(g: UndirectedGraph, bound: int = 12) -> int:
    """Number of vertices of a longest induced path, searched up to ``bound``."""
    if len(g) == 0:
        return 0
    best = 1
    for k in range(2, min(bound, len(g)) + 1):
        if find_induced_path(g, k) is None:
            break
        best = k
    return best


def is_bipartite(g: UndirectedGraph) -> bool:
    side: dict[str, int] = {}
    for s in g.vertices:
        if s in side:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in side:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    return False
    return True


def is_chordal_bipartite(g: UndirectedGraph) -> bool:
    if not is_bipartite(g):
        return False
    return all(find_induced_cycle(g, k) is None for k in range(6, len(g) + 1, 2))


def find_sunlet4(g: UndirectedGraph) -> Optional[list[str]]:
    """Induced 4-cycle a-b-c-d with a private pendant on each cycle vertex."""
    if len(g) < 8:
        return None
    nb = g.neighbors
    for a in g.vertices:
        for b, d in combinations(sorted(nb(a)), 2):
            if b < a or d < a or g.adjacent(b, d):
                continue
            for c in sorted((nb(b) & nb(d)) - {a}):
                if c < a or g.adjacent(a, c):
                    continue
                cyc = [a, b, c, d]
                pend = _assign_pendants(g, cyc)
                if pend is not None:
                    return cyc + pend
    return None


def _assign_pendants(g: UndirectedGraph, cyc: list[str]) -> Optional[list[str]]:
    cset = set(cyc)
    options = []
    for v in cyc:
        opts = [p for p in sorted(g.neighbors(v)) if p not in cset and len(g.neighbors(p) & cset) == 1]
        if not opts:
            return None
        options.append(opts)
    chosen: list[str] = []

    def pick(i: int) -> bool:
        if i == 4:
            return True
        for p in options[i]:
            if p in chosen or any(g.adjacent(p, q) for q in chosen):
                continue
            chosen.append(p)
            if pick(i + 1):
                return True
            chosen.pop()
        return False

    return list(chosen) if pick(0) else None


def _guard(g: UndirectedGraph) -> None:
    if len(g) > MAX_BRUTE_FORCE_VERTICES:
        raise ValueError(f"brute-force oracle limited to {MAX_BRUTE_FORCE_VERTICES} vertices")


def _subset_degrees(g: UndirectedGraph, vs) -> tuple[dict[str, int], int]:
    keep = set(vs)
    deg = {v: len(g.neighbors(v) & keep) for v in vs}
    return deg, sum(deg.values()) // 2


def _connected(g: UndirectedGraph, vs) -> bool:
    keep = set(vs)
    start = next(iter(keep))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v) & keep:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == keep


def brute_force_induced_path(g: UndirectedGraph, k: int) -> bool:
    """Does some k-subset induce a path?  Checked by degree sequence and connectivity."""
    _guard(g)
    for vs in combinations(g.vertices, k):
        deg, m = _subset_degrees(g, vs)
        if m != k - 1 or max(deg.values()) > 2 or not _connected(g, vs):
            continue
        return True
    return False


def brute_force_induced_cycle(g: UndirectedGraph, k: int) -> bool:
    _guard(g)
    for vs in combinations(g.vertices, k):
        deg, _ = _subset_degrees(g, vs)
        if all(d == 2 for d in deg.values()) and _connected(g, vs):
            return True
    return False


def brute_force_sunlet4(g: UndirectedGraph) -> bool:
    _guard(g)
    for vs in combinations(g.vertices, 8):
        deg, m = _subset_degrees(g, vs)
        if m != 8 or sorted(deg.values()) != [1, 1, 1, 1, 3, 3, 3, 3]:
            continue
        hubs = [v for v in vs if deg[v] == 3]
        leaves = set(vs) - set(hubs)
        hub_deg, hub_m = _subset_degrees(g, hubs)
        if hub_m != 4 or any(d != 2 for d in hub_deg.values()):
            continue
        if len({next(iter(g.neighbors(p) & set(hubs))) for p in leaves}) == 4:
            return True
    return False


@dataclass(frozen=True)
class ForbiddenReport:
    p6: Optional[tuple[str, ...]]
    c6: Optional[tuple[str, ...]]
    sunlet4: Optional[tuple[str, ...]]
    chordal_bipartite: bool
    longest_induced_path_found: int

    @property
    def clean(self) -> bool:
        """No P6, no C6 and no Sunlet4."""
        return self.p6 is None and self.c6 is None and self.sunlet4 is None

    def lines(self) -> list[str]:
        def show(w):
            return "absent" if w is None else " ".join(w)

        return [
            f"P6: {show(self.p6)}",
            f"C6: {show(self.c6)}",
            f"Sunlet4: {show(self.sunlet4)}",
            f"chordal_bipartite: {str(self.chordal_bipartite).lower()}",
            f"longest_induced_path: {self.longest_induced_path_found}",
        ]


def forbidden_report(g: UndirectedGraph, path_bound: int = 12) -> ForbiddenReport:
    p6 = find_induced_path(g, 6)
    c6 = find_induced_cycle(g, 6)
    s4 = find_sunlet4(g)
    if p6 is not None and not induces_path(g, p6):
        raise AssertionError(f"P6 witness {p6} does not re-induce a path")
    if c6 is not None and not induces_cycle(g, c6):
        raise AssertionError(f"C6 witness {c6} does not re-induce a cycle")
    if s4 is not None and not induces_sunlet4(g, s4):
        raise AssertionError(f"Sunlet4 witness {s4} does not re-induce Sunlet4")
    return ForbiddenReport(
        p6=tuple(p6) if p6 else None,
        c6=tuple(c6) if c6 else None,
        sunlet4=tuple(s4) if s4 else None,
        chordal_bipartite=is_chordal_bipartite(g),
        longest_induced_path_found=longest_induced_path(g, path_bound),
    )

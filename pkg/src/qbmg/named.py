"""Small named graphs used throughout the tests and the classification checks.

Vertices are ``v1, v2, ...``; odd-numbered vertices get color 0.
"""

from .graph import ColoredDigraph, UndirectedGraph


def _colors(n):
    return {f"v{i}": (i + 1) % 2 for i in range(1, n + 1)}


def path_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(_colors(n), _colors(n), ((f"v{i}", f"v{i + 1}") for i in range(1, n)))


def cycle_graph(n: int) -> UndirectedGraph:
    if n % 2:
        raise ValueError("two-colored cycles need an even length")
    edges = [(f"v{i}", f"v{i % n + 1}") for i in range(1, n + 1)]
    return UndirectedGraph(_colors(n), _colors(n), edges)


def sunlet4() -> UndirectedGraph:
    """4-cycle v2-v3-v8-v5 with pendants v1, v4, v7, v6 on v2, v3, v8, v5."""
    edges = [
        ("v2", "v3"), ("v3", "v8"), ("v8", "v5"), ("v5", "v2"),
        ("v1", "v2"), ("v3", "v4"), ("v5", "v6"), ("v7", "v8"),
    ]
    return UndirectedGraph(_colors(8), _colors(8), edges)


def digraph(n: int, arcs) -> ColoredDigraph:
    """Digraph on v1..vn; ``arcs`` are pairs of vertex numbers."""
    return ColoredDigraph(_colors(n), _colors(n), ((f"v{a}", f"v{b}") for a, b in arcs))


def p5a() -> ColoredDigraph:
    return digraph(5, [(1, 2), (3, 2), (3, 4), (4, 5)])


def p5b() -> ColoredDigraph:
    return digraph(5, [(1, 2), (3, 2), (3, 4), (5, 4)])

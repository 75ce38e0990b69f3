"""Rooted leaf-colored phylogenetic trees, truncation maps and qBMG construction."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping

from .graph import ColoredDigraph

__all__ = [
    "TreeError",
    "PhyloTree",
    "TruncationMap",
    "lca",
    "best_matches",
    "build_qbmg",
    "build_bmg",
    "random_tree",
    "random_truncation",
    "root_truncation",
]


class TreeError(ValueError):
    pass


class PhyloTree:
    """Rooted phylogenetic tree given by parent links and a leaf coloring.

    ``sigma`` maps every leaf to a color index; ``color_names`` keeps the
    labels used in the input (index ``i`` is named ``color_names[i]``).
    """

    __slots__ = ("parent", "children", "root", "leaves", "sigma", "color_names", "depth")

    def __init__(
        self,
        parent: Mapping[str, str | None],
        sigma: Mapping[str, int],
        color_names: Iterable[str] | None = None,
    ) -> None:
        roots = [v for v, p in parent.items() if p is None]
        if len(roots) != 1:
            raise TreeError(f"expected exactly one root, found {len(roots)}")
        children: dict[str, list[str]] = {v: [] for v in parent}
        for v, p in parent.items():
            if p is not None:
                if p not in children:
                    raise TreeError(f"parent {p!r} of {v!r} is not a node")
                children[p].append(v)
        root = roots[0]
        depth = {root: 0}
        stack = [root]
        while stack:
            v = stack.pop()
            for c in children[v]:
                depth[c] = depth[v] + 1
                stack.append(c)
        if len(depth) != len(parent):
            raise TreeError("parent links contain a cycle or unreachable nodes")
        leaves = frozenset(v for v, cs in children.items() if not cs)
        for v, cs in children.items():
            if cs and len(cs) < 2:
                raise TreeError(f"inner node {v!r} has a single child; tree is not phylogenetic")
        if set(sigma) != leaves:
            raise TreeError("leaf coloring must be defined on exactly the leaves")
        self.parent = MappingProxyType(dict(parent))
        self.children = MappingProxyType({v: tuple(sorted(cs)) for v, cs in children.items()})
        self.root = root
        self.leaves = leaves
        self.sigma = MappingProxyType(dict(sigma))
        ncolors = max(sigma.values(), default=-1) + 1
        self.color_names = tuple(color_names) if color_names is not None else tuple(
            str(i) for i in range(ncolors)
        )
        self.depth = MappingProxyType(depth)

    @property
    def nodes(self) -> frozenset[str]:
        return frozenset(self.parent)

    @property
    def colors(self) -> frozenset[int]:
        return frozenset(self.sigma.values())

    def path_to_root(self, v: str) -> list[str]:
        """Nodes from ``v`` up to the root, both included."""
        path = [v]
        while self.parent[path[-1]] is not None:
            path.append(self.parent[path[-1]])
        return path

    def is_ancestor(self, a: str, v: str) -> bool:
        """``v`` lies below or at ``a`` (v ⪯ a)."""
        while v is not None:
            if v == a:
                return True
            if self.depth[v] <= self.depth[a]:
                return False
            v = self.parent[v]
        return False

    def to_newick(self) -> str:
        def rec(v: str) -> str:
            if v in self.leaves:
                return f"{v}:{self.color_names[self.sigma[v]]}"
            return "(" + ",".join(rec(c) for c in self.children[v]) + ")" + v

        return rec(self.root) + ";"

    def __repr__(self) -> str:
        return f"PhyloTree({self.to_newick()})"


@dataclass(frozen=True)
class TruncationMap:
    """u(x, s) for every leaf x and color s; unspecified cross-color pairs map to the root."""

    tree: PhyloTree
    explicit: Mapping[tuple[str, int], str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for (x, s), node in self.explicit.items():
            if x not in self.tree.leaves:
                raise TreeError(f"truncation for unknown leaf {x!r}")
            if node not in self.tree.parent:
                raise TreeError(f"truncation node {node!r} is not a tree node")
            if not self.tree.is_ancestor(node, x):
                raise TreeError(f"u({x},{s}) = {node!r} is not on the root-to-{x} path")
            if s == self.tree.sigma[x] and node != x:
                raise TreeError(f"u({x},{s}) must be {x} itself for the leaf's own color")
        object.__setattr__(self, "explicit", MappingProxyType(dict(self.explicit)))

    def __call__(self, x: str, s: int) -> str:
        if s == self.tree.sigma[x]:
            return x
        return self.explicit.get((x, s), self.tree.root)


def root_truncation(tree: PhyloTree) -> TruncationMap:
    return TruncationMap(tree)


def lca(tree: PhyloTree, x: str, y: str) -> str:
    for v in (x, y):
        if v not in tree.parent:
            raise TreeError(f"unknown node {v!r}")
    depth, parent = tree.depth, tree.parent
    while depth[x] > depth[y]:
        x = parent[x]
    while depth[y] > depth[x]:
        y = parent[y]
    while x != y:
        x, y = parent[x], parent[y]
    return x


def best_matches(tree: PhyloTree, x: str, s: int) -> frozenset[str]:
    """Leaves of color ``s`` whose lca with ``x`` is deepest."""
    if x not in tree.leaves:
        raise TreeError(f"unknown leaf {x!r}")
    candidates = [y for y in tree.leaves if tree.sigma[y] == s and y != x]
    if not candidates:
        return frozenset()
    lcas = {y: lca(tree, x, y) for y in candidates}
    deepest = max(tree.depth[a] for a in lcas.values())
    return frozenset(y for y, a in lcas.items() if tree.depth[a] == deepest)


def build_qbmg(tree: PhyloTree, u: TruncationMap | None = None) -> ColoredDigraph:
    """Quasi-best match graph of a two-colored tree under truncation map ``u``."""
    if u is None:
        u = root_truncation(tree)
    if u.tree is not tree:
        raise TreeError("truncation map belongs to a different tree")
    if tree.colors != {0, 1}:
        raise TreeError(f"tree must carry exactly the two colors 0 and 1, got {sorted(tree.colors)}")
    arcs = []
    for x in tree.leaves:
        s = 1 - tree.sigma[x]
        bm = best_matches(tree, x, s)
        if not bm:
            continue
        # all best matches of x share one lca
        anc = lca(tree, x, next(iter(bm)))
        if tree.is_ancestor(u(x, s), anc):
            arcs.extend((x, y) for y in bm)
    return ColoredDigraph(tree.leaves, tree.sigma, arcs)


def build_bmg(tree: PhyloTree) -> ColoredDigraph:
    return build_qbmg(tree, root_truncation(tree))


def random_tree(
    rng: random.Random,
    n_leaves: int,
    color_bias: float | None = None,
    max_children: int = 3,
) -> PhyloTree:
    """Random phylogenetic tree by recursive splitting of the leaf set.

    Each leaf is colored 0 with probability ``color_bias`` (drawn uniformly
    from [0.15, 0.85] when omitted); colorings missing a color are redrawn.
    Leaves of color 0 are named ``a<i>``, color 1 ``b<i>``.
    """
    if n_leaves < 2:
        raise TreeError("need at least two leaves for a two-colored tree")
    if color_bias is None:
        color_bias = rng.uniform(0.15, 0.85)
    while True:
        colors = [0 if rng.random() < color_bias else 1 for _ in range(n_leaves)]
        if 0 < sum(colors) < n_leaves:
            break
    counters = [0, 0]
    names = []
    for c in colors:
        counters[c] += 1
        names.append(f"{'ab'[c]}{counters[c]}")
    sigma = dict(zip(names, colors))
    parent: dict[str, str | None] = {}
    inner = [0]

    def split(items: list[str], par: str | None) -> None:
        if len(items) == 1:
            parent[items[0]] = par
            return
        if par is None:
            name = "rho"
        else:
            inner[0] += 1
            name = f"n{inner[0]}"
        parent[name] = par
        k = rng.randint(2, min(max_children, len(items)))
        rng.shuffle(items)
        cuts = sorted(rng.sample(range(1, len(items)), k - 1))
        bounds = [0, *cuts, len(items)]
        for lo, hi in zip(bounds, bounds[1:]):
            split(items[lo:hi], name)

    split(list(names), None)
    return PhyloTree(parent, sigma, ("A", "B"))


def random_truncation(rng: random.Random, tree: PhyloTree, p_root: float = 0.0) -> TruncationMap:
    """Pick u(x, s) uniformly on the root-to-x path for every cross color.

    With probability ``p_root`` the whole map is the all-root map instead.
    """
    if rng.random() < p_root:
        return root_truncation(tree)
    explicit = {}
    for x in sorted(tree.leaves):
        path = tree.path_to_root(x)
        for s in tree.colors:
            if s != tree.sigma[x]:
                explicit[(x, s)] = rng.choice(path)
    return TruncationMap(tree, explicit)

import random

import pytest

from conftest import generated_instances
from qbmg.forbidden import find_induced_cycle, find_induced_path
from qbmg.graph import underlying
from qbmg.io import parse_tree_text
from qbmg.recognition import is_2qbmg, is_color_sink_free
from qbmg.tree import (
    PhyloTree,
    TreeError,
    TruncationMap,
    best_matches,
    build_bmg,
    build_qbmg,
    lca,
    random_tree,
    random_truncation,
)

CHERRY = "((a1:A,b1:B)v,b2:B)rho;"
TWO_CHERRIES = "((a1:A,b1:B)v,(a2:A,b2:B)w)rho;"
CATERPILLAR = "(((a1:A,b1:B)v,a2:A)w,b2:B)rho;"


def ancestors(tree, x):
    out = [x]
    while tree.parent[out[-1]] is not None:
        out.append(tree.parent[out[-1]])
    return out


def oracle_qbmg_arcs(tree, u):
    """Arcs from the definition, with lca taken as the first shared ancestor."""

    def slow_lca(x, y):
        ay = set(ancestors(tree, y))
        return next(a for a in ancestors(tree, x) if a in ay)

    arcs = set()
    for x in tree.leaves:
        others = [y for y in tree.leaves if tree.sigma[y] != tree.sigma[x]]
        for y in others:
            l = slow_lca(x, y)
            same = [z for z in others if tree.sigma[z] == tree.sigma[y]]
            best = all(slow_lca(x, z) in ancestors(tree, l) for z in same)
            if best and u(x, tree.sigma[y]) in ancestors(tree, l):
                arcs.add((x, y))
    return arcs


def test_lca_examples():
    t = parse_tree_text(CHERRY)
    assert lca(t, "a1", "a1") == "a1"
    assert lca(t, "a1", "b1") == "v"
    assert lca(t, "a1", "b2") == "rho"
    with pytest.raises(TreeError):
        lca(t, "a1", "zz")


def test_best_matches_examples():
    t = parse_tree_text(CHERRY)
    A, B = 0, 1
    assert best_matches(t, "a1", B) == {"b1"}
    assert best_matches(t, "b2", A) == {"a1"}
    assert best_matches(parse_tree_text(TWO_CHERRIES), "a1", B) == {"b1"}


def test_build_qbmg_two_leaves():
    t = parse_tree_text("(x:A,y:B)rho;")
    assert build_qbmg(t).arcs == {("x", "y"), ("y", "x")}
    assert build_bmg(t).arcs == {("x", "y"), ("y", "x")}


def test_build_qbmg_cherry():
    t = parse_tree_text(CHERRY)
    assert build_qbmg(t, TruncationMap(t)).arcs == {("a1", "b1"), ("b1", "a1"), ("b2", "a1")}
    u = TruncationMap(t, {("b2", 0): "b2"})
    g = build_qbmg(t, u)
    assert g.arcs == {("a1", "b1"), ("b1", "a1")}
    assert g.out_neighbors("b2") == frozenset()


def test_build_bmg_caterpillar():
    t = parse_tree_text(CATERPILLAR)
    expected = {("a1", "b1"), ("b1", "a1"), ("a2", "b1"), ("b2", "a1"), ("b2", "a2")}
    assert oracle_qbmg_arcs(t, TruncationMap(t)) == expected
    g = build_bmg(t)
    assert g.arcs == expected
    assert is_color_sink_free(g)


def test_truncation_map_validation():
    t = parse_tree_text(CHERRY)
    with pytest.raises(TreeError):
        TruncationMap(t, {("b2", 0): "v"})  # v is not above b2
    with pytest.raises(TreeError):
        TruncationMap(t, {("a1", 0): "v"})  # own color must map to the leaf
    u = TruncationMap(t)
    assert u("a1", 1) == "rho" and u("a1", 0) == "a1"


def test_tree_invariants_enforced():
    with pytest.raises(TreeError):
        PhyloTree({"r": None, "x": "r"}, {"x": 0})  # unary root
    with pytest.raises(TreeError):
        PhyloTree({"r": None, "s": None}, {"r": 0, "s": 1})
    with pytest.raises(TreeError):
        PhyloTree({"r": None, "a": "r", "b": "r"}, {"a": 0})


def test_single_color_tree_rejected():
    t = parse_tree_text("(a1:A,a2:A)rho;")
    with pytest.raises(TreeError):
        build_qbmg(t)


def test_random_generator_shapes():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(2, 16)
        t = random_tree(rng, n)
        assert len(t.leaves) == n
        assert t.colors == {0, 1}
        for v, cs in t.children.items():
            assert not cs or len(cs) >= 2
        u = random_truncation(rng, t)
        for x in t.leaves:
            for s in (0, 1):
                assert t.is_ancestor(u(x, s), x)


def test_construction_matches_definition_oracle():
    for tree, u, g in generated_instances(8, 300, 2, 10):
        assert g.arcs == oracle_qbmg_arcs(tree, u)


def test_generated_qbmgs_satisfy_axioms_and_forbidden_freeness():
    for _, _, g in generated_instances(9, 300):
        assert is_2qbmg(g).passed
        und = underlying(g)
        assert find_induced_path(und, 6) is None
        assert find_induced_cycle(und, 6) is None


def test_bmg_is_sink_free_and_dominates_truncations():
    rng = random.Random(10)
    for _ in range(300):
        t = random_tree(rng, rng.randint(2, 16))
        bmg = build_bmg(t)
        assert is_color_sink_free(bmg)
        assert build_qbmg(t, random_truncation(rng, t)).arcs <= bmg.arcs

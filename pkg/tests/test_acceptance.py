"""Acceptance criteria, one printed PASS/FAIL line each.

Lines are also collected into the terminal summary by conftest.
"""

import random
import time

import pytest

from conftest import ACCEPTANCE_LINES, random_bipartite_digraph, random_general_digraph
from qbmg import named
from qbmg.enumeration import enumerate_2qbmgs, hereditary_spot_check, realizability, verify_paper_claims
from qbmg.forbidden import (
    brute_force_induced_cycle,
    brute_force_induced_path,
    find_induced_cycle,
    find_induced_path,
    forbidden_report,
)
from qbmg.graph import UndirectedGraph, induced_subdigraph, underlying
from qbmg.orientation import (
    all_orientations,
    check_star_condition,
    consistent_orientation,
    dominating_biclique_pipeline,
    is_acyclic,
    ks_decomposition,
    symmetric_pairs,
    validate_ks,
)
from qbmg.recognition import check_n1, check_n2, is_2qbmg, n1_holds_setform, n2_holds_setform
from qbmg.tree import build_qbmg, random_tree, random_truncation

SEED = 20261016
N_INSTANCES = 1000


def report(tag, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {tag}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


@pytest.fixture(scope="module")
def instances():
    """1000 (tree, truncation) pairs with 2..16 leaves; build time kept for criterion 3."""
    rng = random.Random(SEED)
    pairs = []
    for _ in range(N_INSTANCES):
        tree = random_tree(rng, rng.randint(2, 16))
        pairs.append((tree, random_truncation(rng, tree, p_root=0.2)))
    return pairs


@pytest.fixture(scope="module")
def qbmgs(instances):
    return [build_qbmg(t, u) for t, u in instances]


def test_criterion_1_classification_counts():
    mode = verify_paper_claims().matching_mode
    start = time.perf_counter()
    got = {}
    for name, g in (("P5", named.path_graph(5)), ("P4", named.path_graph(4)), ("C4", named.cycle_graph(4))):
        res = enumerate_2qbmgs(g, mode)
        got[name] = (len(res), res.space)
    elapsed = time.perf_counter() - start
    ok = got == {"P5": (6, 81), "P4": (4, 27), "C4": (10, 81)} and elapsed < 1.0
    detail = ", ".join(f"{k}={n} classes/{s} assignments" for k, (n, s) in got.items())
    assert report("1 classification counts", ok, f"{detail}; mode={mode}; {elapsed:.3f}s (< 1 s)")


def test_criterion_2_forbidden_graphs():
    start = time.perf_counter()
    got = {}
    for name, g in (("P6", named.path_graph(6)), ("C6", named.cycle_graph(6)), ("Sunlet4", named.sunlet4())):
        res = realizability(g, exhaustive=True)
        got[name] = (res.realizable, res.space, res.passing)
    elapsed = time.perf_counter() - start
    want = {"P6": (False, 243, 0), "C6": (False, 729, 0), "Sunlet4": (False, 6561, 0)}
    ok = got == want and elapsed < 5.0
    detail = ", ".join(f"{k}: un2qBMG={r} over {s}" for k, (r, s, _) in got.items())
    assert report("2 forbidden graphs", ok, f"{detail}; {elapsed:.3f}s (< 5 s)")


def test_criterion_3_construction_soundness(instances):
    start = time.perf_counter()
    failures = 0
    for tree, u in instances:
        assert tree.colors == {0, 1}
        if not is_2qbmg(build_qbmg(tree, u)).passed:
            failures += 1
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 30.0
    assert report("3 construction soundness", ok, f"{failures}/{N_INSTANCES} violations; {elapsed:.2f}s (< 30 s)")


def test_criterion_4_underlying_graph_properties(qbmgs):
    failures = 0
    for g in qbmgs:
        r = forbidden_report(underlying(g))
        if r.p6 is not None or r.c6 is not None or not r.chordal_bipartite:
            failures += 1
    assert report("4 underlying P6/C6-free, chordal bipartite", failures == 0, f"{failures}/{N_INSTANCES} failures")


def test_criterion_5_hereditary_closure():
    rep = hereditary_spot_check(500, random.Random(SEED + 5), 2, 16, undirected_quota=100)
    ok = rep.ok and rep.checked_digraph == 500 and rep.checked_undirected == 100
    detail = (
        f"{rep.checked_digraph} subdigraphs, {rep.checked_undirected} underlying graphs, "
        f"{len(rep.counterexamples)} counterexamples"
    )
    assert report("5 hereditary closure", ok, detail)


def test_criterion_6_decomposition(qbmgs):
    failures = 0
    for g in qbmgs:
        und = underlying(g)
        d = ks_decomposition(und)
        if d is None or not validate_ks(und, d):
            failures += 1
    p5 = ks_decomposition(named.path_graph(5))
    p5_ok = p5.K == {"v2", "v3", "v4"} and p5.S == {"v1", "v5"}
    ok = failures == 0 and p5_ok
    detail = f"{failures}/{N_INSTANCES} failures; P5 -> K={sorted(p5.K)}, S={sorted(p5.S)}"
    assert report("6 K+S decomposition", ok, detail)


def directed_cycle(d):
    """Some directed cycle of ``d`` as a vertex list, by DFS colouring."""
    state, stack = {}, []

    def visit(v):
        state[v] = 1
        stack.append(v)
        for w in sorted(d.out_neighbors(v)):
            if state.get(w) == 1:
                return stack[stack.index(w):]
            if w not in state and (cyc := visit(w)):
                return cyc
        state[v] = 2
        stack.pop()
        return None

    for v in d.vertices:
        if v not in state and (cyc := visit(v)):
            return cyc
    return None


def test_criterion_7a_all_orientations_acyclic(qbmgs):
    checked = cyclic = 0
    example = None
    for g in qbmgs:
        if len(symmetric_pairs(g)) > 6:
            continue
        checked += 1
        for o in all_orientations(g):
            if is_acyclic(o) is None:
                cyclic += 1
                example = example or directed_cycle(o.digraph())
                break
    detail = f"{checked} graphs with <= 6 symmetric pairs, {cyclic} with a cyclic orientation"
    if example:
        detail += f" (e.g. cycle {'>'.join(example + example[:1])})"
    assert report("7a every orientation acyclic", cyclic == 0, detail)


def test_criterion_7b_consistent_orientation_under_star(qbmgs):
    star = [g for g in qbmgs if check_star_condition(g)]
    failures = sum(consistent_orientation(g) is None for g in star)
    detail = f"{len(star)} graphs satisfy the star condition, {failures} without a consistent orientation"
    assert report("7b consistent orientation under (*)", failures == 0, detail)


def test_criterion_7c_pipeline_acyclic_biclique(qbmgs):
    star = [g for g in qbmgs if check_star_condition(g)]
    returned = failures = 0
    for g in star:
        res = dominating_biclique_pipeline(g)
        if res is None:
            # empty result is allowed only when no consistent orientation exists
            failures += consistent_orientation(g) is not None
            continue
        returned += 1
        o, k = res
        und = underlying(g)
        # isolated vertices form degenerate parts and need no dominator
        dominated = all(und.neighbors(v) & k for v in g.vertices if v not in k and und.neighbors(v))
        acyclic = is_acyclic(induced_subdigraph(o.digraph(), k)) is not None
        failures += not (dominated and acyclic)
    detail = f"{returned}/{len(star)} pipeline results, {failures} without a dominating acyclic biclique"
    assert report("7c pipeline dominating acyclic biclique", failures == 0, detail)


def test_criterion_8_oracle_agreement(qbmgs):
    rng = random.Random(SEED + 8)
    mismatches = 0
    for i in range(10_000):
        n = rng.randint(1, 9)
        g = random_bipartite_digraph(rng, n) if i % 2 else random_general_digraph(rng, n)
        mismatches += n1_holds_setform(g) != (not check_n1(g, first_only=True))
        mismatches += n2_holds_setform(g) != (not check_n2(g, first_only=True))

    corpus = [named.path_graph(n) for n in range(2, 11)]
    corpus += [named.cycle_graph(n) for n in (4, 6, 8, 10)] + [named.sunlet4()]
    corpus += [underlying(g) for g in qbmgs if len(g) <= 10]
    for _ in range(200):
        n = rng.randint(2, 10)
        vs = [f"x{j}" for j in range(n)]
        color = {v: j % 2 for j, v in enumerate(vs)}
        p = rng.random()
        edges = [(a, b) for j, a in enumerate(vs) for b in vs[j + 1:] if color[a] != color[b] and rng.random() < p]
        corpus.append(UndirectedGraph(vs, color, edges))
    dfs_mismatch = 0
    for h in corpus:
        for k in range(2, len(h) + 1):
            dfs_mismatch += (find_induced_path(h, k) is not None) != brute_force_induced_path(h, k)
        for k in range(4, len(h) + 1, 2):
            dfs_mismatch += (find_induced_cycle(h, k) is not None) != brute_force_induced_cycle(h, k)
    ok = mismatches == 0 and dfs_mismatch == 0
    detail = f"set/witness forms: {mismatches} mismatches on 10000 digraphs; DFS/brute force: {dfs_mismatch} mismatches on {len(corpus)} graphs"
    assert report("8 oracle agreement", ok, detail)

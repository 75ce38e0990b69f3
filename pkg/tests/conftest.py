import random

import pytest

from qbmg import kernels
from qbmg.graph import ColoredDigraph
from qbmg.tree import build_qbmg, random_tree, random_truncation

ACCEPTANCE_LINES: list[str] = []


def generated_instances(seed, count, min_leaves=2, max_leaves=16, p_root=0.2):
    """(tree, truncation, qbmg) triples from the random generators."""
    rng = random.Random(seed)
    for _ in range(count):
        tree = random_tree(rng, rng.randint(min_leaves, max_leaves))
        u = random_truncation(rng, tree, p_root=p_root)
        yield tree, u, build_qbmg(tree, u)


def random_bipartite_digraph(rng, n, density=None, sym=None):
    """Random properly colored digraph; each cross pair is absent, one arc, or both."""
    density = rng.random() if density is None else density
    sym = rng.random() * 0.5 if sym is None else sym
    vs = [f"x{i}" for i in range(n)]
    color = {v: rng.randint(0, 1) for v in vs}
    arcs = []
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            if color[u] == color[v] or rng.random() > density:
                continue
            r = rng.random()
            if r < sym:
                arcs += [(u, v), (v, u)]
            elif r < (1 + sym) / 2:
                arcs.append((u, v))
            else:
                arcs.append((v, u))
    return ColoredDigraph(vs, color, arcs)


def random_general_digraph(rng, n, p=None):
    p = rng.random() * 0.6 if p is None else p
    vs = [f"x{i}" for i in range(n)]
    arcs = [(u, v) for u in vs for v in vs if u != v and rng.random() < p]
    return ColoredDigraph(vs, {v: 0 for v in vs}, arcs, check_coloring=False)


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture(params=["python", "cython"])
def kernel_impl(request):
    if request.param == "python":
        return kernels._pykernels
    mod = kernels.compiled_module()
    if mod is None:
        pytest.skip("compiled kernels not built")
    return mod


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

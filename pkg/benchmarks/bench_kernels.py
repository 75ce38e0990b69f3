"""Compare the compiled and pure-Python kernels on the hot loops.

    python benchmarks/bench_kernels.py [--repeat N]

Each workload runs through both backends on identical inputs; results
must agree before timings are reported.
"""

import argparse
import random
import time

from qbmg import kernels, named
from qbmg.graph import UndirectedGraph
from qbmg.kernels import _pykernels


def edge_index(g):
    index = {v: i for i, v in enumerate(g.vertices)}
    return len(g), [(index[a], index[b]) for a, b in g.sorted_edges()]


def complete_bipartite(p, q):
    left = [f"a{i}" for i in range(p)]
    right = [f"b{i}" for i in range(q)]
    color = {**{v: 0 for v in left}, **{v: 1 for v in right}}
    return UndirectedGraph(left + right, color, [(a, b) for a in left for b in right])


def random_masks(seed, count, max_n=12):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        masks = [0] * n
        for i in range(n):
            for j in range(n):
                if i % 2 != j % 2 and rng.random() < 0.4:
                    masks[i] |= 1 << j
        out.append(masks)
    return out


def workloads():
    searches = {
        "C4 enumerate": named.cycle_graph(4),
        "Sunlet4 exhaustive": named.sunlet4(),
        "K3,3 enumerate": complete_bipartite(3, 3),
        "K3,4 enumerate": complete_bipartite(3, 4),
    }
    for name, g in searches.items():
        n, edges = edge_index(g)
        yield name, (lambda mod, n=n, e=edges: mod.search_assignments(n, e, collect=False))
    batch = random_masks(1, 20000)
    yield "20000 axiom checks", (lambda mod: sum(mod.axioms_hold(m) for m in batch))


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    cmod = kernels.compiled_module()
    if cmod is None:
        print("compiled kernels not built; only the Python backend is timed")
    print(f"{'workload':<22}{'python [s]':>12}{'cython [s]':>12}{'speedup':>10}  result")
    for name, run in workloads():
        tp, rp = best_of(lambda: run(_pykernels), args.repeat)
        if cmod is None:
            print(f"{name:<22}{tp:>12.4f}{'-':>12}{'-':>10}  {rp}")
            continue
        tc, rc = best_of(lambda: run(cmod), args.repeat)
        if rc != rp:
            raise SystemExit(f"{name}: backends disagree ({rp} vs {rc})")
        print(f"{name:<22}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x  {rp}")


if __name__ == "__main__":
    main()

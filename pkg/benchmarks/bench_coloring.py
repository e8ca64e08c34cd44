"""Benchmark the exact-coloring kernels: compiled extension vs pure Python.

Runs the identical Zykov branch-and-bound search through both kernels on
random graphs (where the search actually branches) and on the hexagonal
interference graphs (where the bounds close at the root), checks they
return identical colorings, and prints per-instance timings.

Usage: python benchmarks/bench_coloring.py [--repeats N]
"""

import argparse
import random
import statistics
import sys
import time

from hexchan import _zykov_py
from hexchan.interference import build_interference_graph
from hexchan.lattice import CONTROL_REUSE_METRIC, DATA_REUSE_METRIC, build_lattice, twelve_cell_lattice

try:
    from hexchan import _zykov
except ImportError:
    _zykov = None


def random_instance(seed, n, p):
    rng = random.Random(seed)
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    return n, edges


def lattice_instance(lattice, threshold):
    graph = build_interference_graph(lattice, None, threshold)
    return len(graph.vertices), graph.edge_index_pairs()


def time_solve(kernel, n, edges, repeats):
    times = []
    labels = None
    for _ in range(repeats):
        start = time.perf_counter()
        labels = kernel.solve(n, edges)
        times.append(time.perf_counter() - start)
    return statistics.median(times), list(labels)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3, help="timing repeats per instance (median)")
    args = parser.parse_args(argv)

    if _zykov is None:
        print("compiled kernel not built; nothing to compare "
              "(reinstall without HEXCHAN_SKIP_EXT to build it)")
        return 1

    instances = [
        ("fixture-12 t16", *lattice_instance(twelve_cell_lattice(), CONTROL_REUSE_METRIC)),
        ("lattice N=4 t16", *lattice_instance(build_lattice(4, 1.0), CONTROL_REUSE_METRIC)),
        ("lattice N=6 t16", *lattice_instance(build_lattice(6, 1.0), CONTROL_REUSE_METRIC)),
        ("lattice N=6 t12", *lattice_instance(build_lattice(6, 1.0), DATA_REUSE_METRIC)),
    ]
    for n, p in ((14, 0.5), (18, 0.5), (22, 0.5), (26, 0.5), (30, 0.5), (32, 0.4)):
        instances.append((f"random n={n} p={p}", *random_instance(1000 + n, n, p)))

    header = f"{'instance':18} {'|V|':>4} {'|E|':>5} {'chi':>3} {'compiled':>12} {'python':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, n, edges in instances:
        t_c, labels_c = time_solve(_zykov, n, edges, args.repeats)
        t_p, labels_p = time_solve(_zykov_py, n, edges, args.repeats)
        if labels_c != labels_p:
            print(f"{name}: KERNEL MISMATCH", file=sys.stderr)
            return 1
        chi = len(set(labels_c)) if labels_c else 0
        print(f"{name:18} {n:>4} {len(edges):>5} {chi:>3} {t_c * 1e3:>10.3f}ms {t_p * 1e3:>10.3f}ms {t_p / t_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

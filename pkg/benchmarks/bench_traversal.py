"""Benchmark the traversal kernels: compiled extension vs pure Python.

Builds a synthetic citation-network-shaped CSR adjacency (the exact input
format GraphIndex feeds the kernels), then times reachable() and
simple_path_counts() on both backends over the same start nodes. Outputs
are cross-checked for equality before timings are reported.

Run from the repository root:

    python3 benchmarks/bench_traversal.py
    python3 benchmarks/bench_traversal.py --nodes 2000 --degree 8 --cutoff 2
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from scholargraph.query import _traversal_py

try:
    from scholargraph.query import _traversal_cy
except ImportError:
    _traversal_cy = None


def build_csr(nodes: int, degree: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Random undirected graph with ~degree edges per node, CSR form."""
    rng = random.Random(seed)
    neighbor_sets: list[set[int]] = [set() for _ in range(nodes)]
    for a in range(nodes):
        for _ in range(degree):
            b = rng.randrange(nodes)
            if a == b:
                continue
            neighbor_sets[a].add(b)
            neighbor_sets[b].add(a)
    indptr = np.zeros(nodes + 1, dtype=np.int32)
    for i, neigh in enumerate(neighbor_sets):
        indptr[i + 1] = indptr[i] + len(neigh)
    indices = np.empty(int(indptr[-1]), dtype=np.int32)
    for i, neigh in enumerate(neighbor_sets):
        indices[indptr[i] : indptr[i + 1]] = sorted(neigh)
    return indptr, indices


def time_kernel(fn, indptr, indices, starts, cutoff, repeats: int) -> float:
    """Best-of-repeats wall time for one full pass over the start nodes."""
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for start in starts:
            fn(indptr, indices, start, cutoff)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nodes", type=int, default=600)
    parser.add_argument("--degree", type=int, default=6, help="edges added per node")
    parser.add_argument("--cutoff", type=int, default=2, help="traversal depth bound")
    parser.add_argument("--starts", type=int, default=40, help="start nodes per pass")
    parser.add_argument("--repeats", type=int, default=3, help="passes; best is kept")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    indptr, indices = build_csr(args.nodes, args.degree, args.seed)
    rng = random.Random(args.seed + 1)
    starts = [rng.randrange(args.nodes) for _ in range(args.starts)]
    print(
        f"graph: {args.nodes} nodes, {len(indices) // 2} undirected edges, "
        f"cutoff {args.cutoff}, {args.starts} start nodes per pass"
    )

    backends = [("python", _traversal_py)]
    if _traversal_cy is not None:
        backends.insert(0, ("cython", _traversal_cy))
    else:
        print("compiled backend not built; timing pure Python only")

    if _traversal_cy is not None:
        for start in starts:
            for name in ("reachable", "simple_path_counts"):
                got_cy = getattr(_traversal_cy, name)(indptr, indices, start, args.cutoff)
                got_py = getattr(_traversal_py, name)(indptr, indices, start, args.cutoff)
                assert np.array_equal(got_cy, got_py), f"{name} backends disagree at {start}"
        print("backends agree on all outputs")

    print(f"{'kernel':<20} {'backend':<8} {'per call':>12} {'per pass':>12}")
    timings: dict[tuple[str, str], float] = {}
    for kernel_name in ("reachable", "simple_path_counts"):
        for backend_name, module in backends:
            elapsed = time_kernel(
                getattr(module, kernel_name), indptr, indices, starts, args.cutoff, args.repeats
            )
            timings[(kernel_name, backend_name)] = elapsed
            per_call = elapsed / args.starts
            print(
                f"{kernel_name:<20} {backend_name:<8} "
                f"{per_call * 1e3:>10.3f}ms {elapsed * 1e3:>10.1f}ms"
            )
    if _traversal_cy is not None:
        for kernel_name in ("reachable", "simple_path_counts"):
            ratio = timings[(kernel_name, "python")] / timings[(kernel_name, "cython")]
            print(f"{kernel_name}: compiled is {ratio:.1f}x faster")


if __name__ == "__main__":
    main()

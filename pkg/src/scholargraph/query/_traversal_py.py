"""Pure-Python traversal kernels over CSR adjacency arrays.

Behavioral twin of the compiled module ``_traversal_cy``; the two must
return identical values for identical inputs. Inputs are the CSR arrays
built by GraphIndex: ``indptr`` of length n+1 and ``indices`` holding
sorted neighbor ids (undirected, no self-loops, no parallel edges).
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def reachable(indptr, indices, start: int, cutoff: int) -> np.ndarray:
    """Node ids reachable from start within cutoff hops, excluding start, sorted."""
    n = len(indptr) - 1
    depth = [-1] * n
    depth[start] = 0
    frontier = [start]
    reached = []
    level = 0
    while frontier and level < cutoff:
        nxt = []
        for u in frontier:
            for k in range(indptr[u], indptr[u + 1]):
                v = indices[k]
                if depth[v] < 0:
                    depth[v] = level + 1
                    reached.append(v)
                    nxt.append(v)
        frontier = nxt
        level += 1
    reached.sort()
    return np.asarray(reached, dtype=np.int32)


def simple_path_counts(indptr, indices, start: int, cutoff: int) -> np.ndarray:
    """counts[v] = number of simple paths start..v of length 1..cutoff.

    A simple path repeats no vertex, so counts[start] is always 0 and
    {v : counts[v] > 0} equals the reachable set at the same cutoff.
    """
    n = len(indptr) - 1
    counts = np.zeros(n, dtype=np.int64)
    on_path = bytearray(n)
    on_path[start] = 1

    def walk(u: int, depth: int) -> None:
        for k in range(indptr[u], indptr[u + 1]):
            v = indices[k]
            if on_path[v]:
                continue
            counts[v] += 1
            if depth + 1 < cutoff:
                on_path[v] = 1
                walk(v, depth + 1)
                on_path[v] = 0

    walk(start, 0)
    return counts

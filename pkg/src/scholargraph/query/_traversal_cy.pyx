# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled traversal kernels over CSR adjacency arrays.

Behavioral twin of ``_traversal_py``; see that module for the contract.
"""

import numpy as np

BACKEND = "cython"


def reachable(int[::1] indptr, int[::1] indices, int start, int cutoff):
    """Node ids reachable from start within cutoff hops, excluding start, sorted."""
    cdef Py_ssize_t n = indptr.shape[0] - 1
    depth_arr = np.full(n, -1, dtype=np.int32)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef int[::1] depth = depth_arr
    cdef int[::1] queue = queue_arr
    cdef int head = 0, tail = 0, u, v, k, lvl

    depth[start] = 0
    queue[tail] = start
    tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        lvl = depth[u]
        if lvl >= cutoff:
            continue
        for k in range(indptr[u], indptr[u + 1]):
            v = indices[k]
            if depth[v] < 0:
                depth[v] = lvl + 1
                queue[tail] = v
                tail += 1
    return np.flatnonzero(depth_arr > 0).astype(np.int32)


cdef void _walk(int[::1] indptr, int[::1] indices, signed char[::1] on_path,
                long long[::1] counts, int u, int depth, int cutoff):
    cdef int k, v
    for k in range(indptr[u], indptr[u + 1]):
        v = indices[k]
        if on_path[v]:
            continue
        counts[v] += 1
        if depth + 1 < cutoff:
            on_path[v] = 1
            _walk(indptr, indices, on_path, counts, v, depth + 1, cutoff)
            on_path[v] = 0


def simple_path_counts(int[::1] indptr, int[::1] indices, int start, int cutoff):
    """counts[v] = number of simple paths start..v of length 1..cutoff."""
    cdef Py_ssize_t n = indptr.shape[0] - 1
    counts_arr = np.zeros(n, dtype=np.longlong)
    on_path_arr = np.zeros(n, dtype=np.int8)
    cdef long long[::1] counts = counts_arr
    cdef signed char[::1] on_path = on_path_arr
    on_path[start] = 1
    _walk(indptr, indices, on_path, counts, start, 0, cutoff)
    return counts_arr

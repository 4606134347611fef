"""Traversal kernels: compiled and pure backends against brute-force oracles."""

import random

import numpy as np
import pytest

from scholargraph.errors import UnknownEntityError
from scholargraph.query import _traversal_py
from scholargraph.query.index import BACKEND_NAME, GraphIndex
from tests.conftest import random_graph
from tests.oracles import all_simple_paths, oracle_reachable, undirected_adjacency

try:
    from scholargraph.query import _traversal_cy
except ImportError:
    _traversal_cy = None

BACKENDS = [_traversal_py] if _traversal_cy is None else [_traversal_py, _traversal_cy]


def random_csr(rng: random.Random, max_nodes: int = 14):
    """Random undirected simple graph as (indptr, indices, adjacency dict)."""
    n = rng.randint(1, max_nodes)
    pairs = set()
    for _ in range(rng.randint(0, n * 2)):
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b:
            pairs.add((min(a, b), max(a, b)))
    adj = undirected_adjacency(pairs)
    for node in range(n):
        adj.setdefault(node, set())
    indptr = np.zeros(n + 1, dtype=np.int32)
    chunks = []
    for node in range(n):
        neigh = sorted(adj[node])
        indptr[node + 1] = indptr[node] + len(neigh)
        chunks.extend(neigh)
    indices = np.array(chunks, dtype=np.int32)
    return indptr, indices, adj


@pytest.mark.parametrize("kernels", BACKENDS, ids=lambda m: m.BACKEND)
class TestKernels:
    def test_reachable_matches_oracle(self, kernels):
        rng = random.Random(7101)
        for _ in range(60):
            indptr, indices, adj = random_csr(rng)
            start = rng.randrange(len(indptr) - 1)
            cutoff = rng.randint(1, 4)
            got = kernels.reachable(indptr, indices, start, cutoff)
            assert list(got) == sorted(oracle_reachable(adj, start, cutoff))

    def test_path_counts_match_oracle(self, kernels):
        rng = random.Random(7102)
        for _ in range(60):
            indptr, indices, adj = random_csr(rng)
            start = rng.randrange(len(indptr) - 1)
            cutoff = rng.randint(1, 4)
            counts = kernels.simple_path_counts(indptr, indices, start, cutoff)
            expected = np.zeros(len(indptr) - 1, dtype=np.int64)
            for path in all_simple_paths(adj, start, cutoff):
                expected[path[-1]] += 1
            assert np.array_equal(np.asarray(counts), expected)

    def test_reachability_equals_positive_counts(self, kernels):
        rng = random.Random(7103)
        for _ in range(40):
            indptr, indices, _ = random_csr(rng)
            start = rng.randrange(len(indptr) - 1)
            cutoff = rng.randint(1, 4)
            counts = np.asarray(kernels.simple_path_counts(indptr, indices, start, cutoff))
            reach = kernels.reachable(indptr, indices, start, cutoff)
            assert np.array_equal(np.flatnonzero(counts > 0), np.asarray(reach))

    def test_start_excluded_even_with_cycles(self, kernels):
        # triangle: cycles return to the start but the start never counts
        indptr = np.array([0, 2, 4, 6], dtype=np.int32)
        indices = np.array([1, 2, 0, 2, 0, 1], dtype=np.int32)
        counts = np.asarray(kernels.simple_path_counts(indptr, indices, 0, 3))
        assert counts[0] == 0
        # to node 1: [0,1], [0,2,1]; length-3 simple paths all end at start
        assert counts[1] == 2 and counts[2] == 2
        assert list(kernels.reachable(indptr, indices, 0, 3)) == [1, 2]

    def test_isolated_node(self, kernels):
        indptr = np.array([0, 0], dtype=np.int32)
        indices = np.array([], dtype=np.int32)
        assert list(kernels.reachable(indptr, indices, 0, 2)) == []
        assert np.asarray(kernels.simple_path_counts(indptr, indices, 0, 2)).tolist() == [0]


@pytest.mark.skipif(_traversal_cy is None, reason="compiled backend unavailable")
def test_backends_agree_exactly():
    rng = random.Random(7104)
    for _ in range(80):
        indptr, indices, _ = random_csr(rng, max_nodes=24)
        start = rng.randrange(len(indptr) - 1)
        cutoff = rng.randint(1, 5)
        py_counts = np.asarray(_traversal_py.simple_path_counts(indptr, indices, start, cutoff))
        cy_counts = np.asarray(_traversal_cy.simple_path_counts(indptr, indices, start, cutoff))
        assert np.array_equal(py_counts, cy_counts)
        assert np.array_equal(
            np.asarray(_traversal_py.reachable(indptr, indices, start, cutoff)),
            np.asarray(_traversal_cy.reachable(indptr, indices, start, cutoff)),
        )


class TestGraphIndex:
    def test_ids_are_iri_sorted(self, case_graph):
        idx = case_graph.index()
        iris = [idx.iri_at(i) for i in range(len(idx))]
        assert iris == sorted(case_graph.entities)
        for i, iri in enumerate(iris):
            assert idx.id_of(iri) == i
            assert idx.etype_at(i) is case_graph.entity(iri).etype

    def test_unknown_iri_rejected(self, case_graph):
        with pytest.raises(UnknownEntityError):
            case_graph.index().id_of("http://nowhere/entity/x")

    def test_adjacency_is_undirected_deduplicated(self, case_graph, case_iris):
        idx = case_graph.index()
        p1 = idx.id_of(case_iris["p01"])
        p2 = idx.id_of(case_iris["p02"])
        # p01 cites p02: both directions in the adjacency
        assert p2 in idx.indices[idx.indptr[p1] : idx.indptr[p1 + 1]]
        assert p1 in idx.indices[idx.indptr[p2] : idx.indptr[p2 + 1]]
        # neighbor lists are sorted and duplicate-free
        for node in range(len(idx)):
            row = idx.indices[idx.indptr[node] : idx.indptr[node + 1]].tolist()
            assert row == sorted(set(row))

    def test_self_loops_dropped(self):
        rng = random.Random(7105)
        for _ in range(20):
            g = random_graph(rng)
            idx = GraphIndex(g)
            for node in range(len(idx)):
                row = idx.indices[idx.indptr[node] : idx.indptr[node + 1]]
                assert node not in row

    def test_kernel_dispatch(self, case_graph, case_iris):
        idx = case_graph.index()
        assert idx.backend == BACKEND_NAME
        start = idx.id_of(case_iris["p01"])
        reach = idx.reachable_ids(start, 1)
        counts = idx.path_counts(start, 1)
        assert np.array_equal(np.flatnonzero(np.asarray(counts) > 0), np.asarray(reach))

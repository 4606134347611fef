"""Immutable CSR snapshot of a knowledge graph for traversal kernels.

The index maps entity iris to dense integer ids (iri-sorted, so ids are
stable for a given graph) and stores the undirected adjacency as
indptr/indices arrays. Attribute literals are not edges; only the nine
entity-to-entity predicates contribute, with self-loops dropped and
parallel predicates between the same pair collapsed.

The kernel backend is chosen once at import: the compiled module when it
is available, the pure-Python twin otherwise or when the environment
variable SCHOLARGRAPH_PURE_PYTHON is set to a non-empty value.
"""

from __future__ import annotations

import os
from typing import TYPE_CHECKING

import numpy as np

from ..errors import UnknownEntityError
from ..kg.model import EntityType

if TYPE_CHECKING:
    from ..kg.model import KnowledgeGraph


def _load_backend():
    if not os.environ.get("SCHOLARGRAPH_PURE_PYTHON"):
        try:
            from . import _traversal_cy as kernels

            return kernels
        except ImportError:
            pass
    from . import _traversal_py as kernels

    return kernels


_KERNELS = _load_backend()
BACKEND_NAME: str = _KERNELS.BACKEND


class GraphIndex:
    """Read-only view; graphs rebuild it after any mutation."""

    def __init__(self, graph: "KnowledgeGraph"):
        iris = sorted(graph.entities)
        self._iris = iris
        self._ids = {iri: i for i, iri in enumerate(iris)}
        self._types = [graph.entities[iri].etype for iri in iris]
        n = len(iris)
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        for triple in graph.triples:
            a = self._ids[triple.s]
            b = self._ids[triple.o]
            if a == b:
                continue
            neighbor_sets[a].add(b)
            neighbor_sets[b].add(a)
        indptr = np.zeros(n + 1, dtype=np.int32)
        for i, neigh in enumerate(neighbor_sets):
            indptr[i + 1] = indptr[i] + len(neigh)
        indices = np.empty(int(indptr[-1]), dtype=np.int32)
        for i, neigh in enumerate(neighbor_sets):
            indices[indptr[i] : indptr[i + 1]] = sorted(neigh)
        self.indptr = indptr
        self.indices = indices

    # -- mapping --------------------------------------------------------

    def __len__(self) -> int:
        return len(self._iris)

    @property
    def backend(self) -> str:
        return BACKEND_NAME

    def id_of(self, iri: str) -> int:
        try:
            return self._ids[iri]
        except KeyError:
            raise UnknownEntityError(f"unknown entity: {iri}") from None

    def iri_at(self, node_id: int) -> str:
        return self._iris[node_id]

    def etype_at(self, node_id: int) -> EntityType:
        return self._types[node_id]

    # -- kernels ----------------------------------------------------------

    def reachable_ids(self, start: int, cutoff: int) -> np.ndarray:
        return _KERNELS.reachable(self.indptr, self.indices, start, cutoff)

    def path_counts(self, start: int, cutoff: int) -> np.ndarray:
        return _KERNELS.simple_path_counts(self.indptr, self.indices, start, cutoff)

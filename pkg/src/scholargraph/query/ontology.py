"""Type-level ontology graph and hop distances between entity types.

The ontology is the 5-node graph induced by the predicate domain/range
table, treated as undirected. Query depth for a (source type, target
type) pair is the shortest path length here, with one adjustment for
same-type queries: a type with a self-loop predicate (Paper, via cites)
gets distance 1 so those edges are traversed, and any other same-type
pair gets 2 (out to a neighbor and back).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..kg.model import PREDICATE_DOMAIN_RANGE, EntityType


def _canonical(a: EntityType, b: EntityType) -> tuple[EntityType, EntityType]:
    return (a, b) if a.value <= b.value else (b, a)


@dataclass(frozen=True)
class OntologyGraph:
    nodes: frozenset[EntityType]
    edges: frozenset[tuple[EntityType, EntityType]]

    def neighbors(self, t: EntityType) -> set[EntityType]:
        out = set()
        for a, b in self.edges:
            if a is t and b is not t:
                out.add(b)
            elif b is t and a is not t:
                out.add(a)
        return out

    def has_self_loop(self, t: EntityType) -> bool:
        return (t, t) in self.edges

    def distance(self, a: EntityType, b: EntityType) -> int:
        if a is b:
            return 1 if self.has_self_loop(a) else 2
        seen = {a}
        frontier = {a}
        hops = 0
        while frontier:
            hops += 1
            frontier = {n for t in frontier for n in self.neighbors(t)} - seen
            if b in frontier:
                return hops
            seen |= frontier
        raise ValueError(f"no ontology path between {a.value} and {b.value}")


@lru_cache(maxsize=1)
def default_ontology() -> OntologyGraph:
    edges = {_canonical(d, r) for d, r in PREDICATE_DOMAIN_RANGE.values()}
    return OntologyGraph(nodes=frozenset(EntityType), edges=frozenset(edges))


def ontology_distance(a: EntityType, b: EntityType, ontology: OntologyGraph | None = None) -> int:
    return (ontology or default_ontology()).distance(a, b)

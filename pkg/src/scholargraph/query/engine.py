"""Semantic query over the knowledge graph plus the related graph ops.

The core operation scores candidate target entities by counting simple
undirected paths from each source, bounded by the ontology distance
between the source and target types, and keeps the top-k by (score
descending, iri ascending). Fuzzy attribute lookup, target-internal edge
extraction, result comparison, and concept co-occurrence weighting live
here as well because they all rank or join over the same graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ..kg.model import EntityType, KnowledgeGraph, Predicate
from .ontology import ontology_distance

CONCEPT_PREDICATES = (
    Predicate.HAS_DATA,
    Predicate.HAS_APPLICATION,
    Predicate.HAS_METHOD,
    Predicate.HAS_VISUALIZATION,
    Predicate.HAS_EVALUATION,
)


@dataclass(frozen=True)
class QuerySpec:
    source_iris: tuple[str, ...]
    target_type: EntityType
    k: int

    def __post_init__(self):
        object.__setattr__(self, "source_iris", tuple(self.source_iris))
        if not self.source_iris:
            raise ValueError("source_iris must be non-empty")
        if any(not iri for iri in self.source_iris):
            raise ValueError("source iris must be non-empty strings")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")


@dataclass(frozen=True)
class QueryResult:
    sources: tuple[str, ...]
    targets: tuple[tuple[str, int], ...]
    cross_edges: tuple[tuple[str, str], ...]
    internal_edges: tuple[tuple[str, str], ...] | None = None

    def __post_init__(self):
        seen = set()
        last = None
        for iri, score in self.targets:
            if last is not None and (-score, iri) < last:
                raise ValueError("targets must be sorted by score desc, iri asc")
            last = (-score, iri)
            seen.add(iri)
        sources = set(self.sources)
        for s, t in self.cross_edges:
            if s not in sources or t not in seen:
                raise ValueError(f"cross edge ({s}, {t}) outside sources x targets")

    def node_set(self) -> set[str]:
        return set(self.sources) | {iri for iri, _ in self.targets}

    def edge_set(self) -> set[tuple[str, str]]:
        edges = set(self.cross_edges)
        if self.internal_edges:
            edges |= set(self.internal_edges)
        return edges

    def to_dict(self) -> dict:
        payload = {
            "sources": list(self.sources),
            "targets": [{"iri": iri, "score": score} for iri, score in self.targets],
            "cross_edges": [list(edge) for edge in self.cross_edges],
        }
        if self.internal_edges is not None:
            payload["internal_edges"] = [list(edge) for edge in self.internal_edges]
        return payload


@dataclass(frozen=True)
class ComparisonResult:
    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    common: frozenset[str]

    def __post_init__(self):
        if not self.common <= set(self.nodes):
            raise ValueError("common nodes must be a subset of merged nodes")

    def to_dict(self) -> dict:
        return {
            "nodes": list(self.nodes),
            "edges": [list(edge) for edge in self.edges],
            "common": sorted(self.common),
        }


@dataclass(frozen=True, order=True)
class CooccurrenceLink:
    concept_a: str
    concept_b: str
    weight: int

    def __post_init__(self):
        if not self.concept_a < self.concept_b:
            raise ValueError("concept_a must be lexicographically smaller than concept_b")
        if self.weight < 1:
            raise ValueError("weight must be >= 1")


# -- traversal wrappers ------------------------------------------------


def reachable(iri: str, cutoff: int, graph: KnowledgeGraph) -> set[str]:
    """Entities within cutoff undirected hops of iri, excluding iri itself."""
    if cutoff < 1:
        raise ValueError(f"cutoff must be >= 1, got {cutoff}")
    index = graph.index()
    start = index.id_of(iri)
    return {index.iri_at(int(i)) for i in index.reachable_ids(start, cutoff)}


def path_score(a: str, b: str, cutoff: int, graph: KnowledgeGraph) -> int:
    """Number of simple undirected paths between a and b of length <= cutoff."""
    if cutoff < 1:
        raise ValueError(f"cutoff must be >= 1, got {cutoff}")
    index = graph.index()
    counts = index.path_counts(index.id_of(a), cutoff)
    return int(counts[index.id_of(b)])


def semantic_query(spec: QuerySpec, graph: KnowledgeGraph) -> QueryResult:
    index = graph.index()
    source_ids = [index.id_of(iri) for iri in spec.source_iris]

    scores: dict[int, int] = {}
    edge_pairs: set[tuple[str, str]] = set()
    for iri, start in zip(spec.source_iris, source_ids):
        depth = ontology_distance(index.etype_at(start), spec.target_type)
        counts = index.path_counts(start, depth)
        for node_id in np.flatnonzero(counts):
            node_id = int(node_id)
            if index.etype_at(node_id) is not spec.target_type:
                continue
            scores[node_id] = scores.get(node_id, 0) + int(counts[node_id])
            edge_pairs.add((iri, index.iri_at(node_id)))

    ranked = sorted(
        ((index.iri_at(node_id), score) for node_id, score in scores.items()),
        key=lambda pair: (-pair[1], pair[0]),
    )
    targets = tuple(ranked[: spec.k])
    surviving = {iri for iri, _ in targets}
    cross_edges = tuple(sorted(pair for pair in edge_pairs if pair[1] in surviving))
    return QueryResult(sources=spec.source_iris, targets=targets, cross_edges=cross_edges)


# -- fuzzy lookup ------------------------------------------------------


def bounded_levenshtein(a: str, b: str, bound: int) -> int | None:
    """Edit distance between a and b, or None once it must exceed bound."""
    if bound < 0:
        return None
    if abs(len(a) - len(b)) > bound:
        return None
    if not a or not b:
        dist = len(a) or len(b)
        return dist if dist <= bound else None
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        current = [i]
        best = i
        for j, cb in enumerate(b, start=1):
            cost = min(
                previous[j] + 1,
                current[j - 1] + 1,
                previous[j - 1] + (ca != cb),
            )
            current.append(cost)
            if cost < best:
                best = cost
        if best > bound:
            return None
        previous = current
    return previous[-1] if previous[-1] <= bound else None


def _match_tier(name: str, term: str) -> int | None:
    if name == term:
        return 0
    if term in name:
        return 1
    bound = int(0.2 * len(term))
    if bounded_levenshtein(term, name, bound) is not None:
        return 2
    return None


def fuzzy_query(
    terms: Sequence[str],
    etype: EntityType,
    graph: KnowledgeGraph,
    limit: int = 20,
) -> list[str]:
    """Entity iris of etype whose display name matches any term.

    Exact case-insensitive matches rank first, then substring matches,
    then names within edit distance 0.2 * len(term); ties break by iri.
    """
    cleaned = [t.strip() for t in terms if t and t.strip()]
    if not cleaned:
        raise ValueError("terms must contain at least one non-blank string")
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    folded = [t.casefold() for t in cleaned]
    ranked: list[tuple[int, str]] = []
    for entity in graph.entities_of_type(etype):
        name = entity.display_name.casefold()
        tiers = [tier for tier in (_match_tier(name, term) for term in folded) if tier is not None]
        if tiers:
            ranked.append((min(tiers), entity.iri))
    ranked.sort()
    return [iri for _, iri in ranked[:limit]]


# -- joins over a target set -------------------------------------------


def _pairs_sharing_paper(
    graph: KnowledgeGraph, members: set[str], predicates: Iterable[Predicate]
) -> set[tuple[str, str]]:
    by_paper: dict[str, set[str]] = {}
    for predicate in predicates:
        for triple in graph.triples_with_predicate(predicate):
            if triple.o in members:
                by_paper.setdefault(triple.s, set()).add(triple.o)
    edges: set[tuple[str, str]] = set()
    for linked in by_paper.values():
        for a, b in itertools.combinations(sorted(linked), 2):
            edges.add((a, b))
    return edges


def internal_edges(targets: Iterable[str], graph: KnowledgeGraph) -> list[tuple[str, str]]:
    """Edges among the targets themselves, per target type.

    Papers are joined by citation (as stored, directed); authors by
    shared papers; concepts by co-occurrence on a paper; journals and
    conferences by shared papers. Pairs other than citations are
    canonicalized with the smaller iri first.
    """
    present = [iri for iri in targets if iri in graph]
    by_type: dict[EntityType, set[str]] = {}
    for iri in present:
        by_type.setdefault(graph.entity(iri).etype, set()).add(iri)

    edges: set[tuple[str, str]] = set()
    papers = by_type.get(EntityType.PAPER, set())
    if papers:
        for triple in graph.triples_with_predicate(Predicate.CITES):
            if triple.s in papers and triple.o in papers:
                edges.add((triple.s, triple.o))
    authors = by_type.get(EntityType.AUTHOR, set())
    if authors:
        edges |= _pairs_sharing_paper(graph, authors, (Predicate.CREATOR,))
    concepts = by_type.get(EntityType.CONCEPT, set())
    if concepts:
        edges |= _pairs_sharing_paper(graph, concepts, CONCEPT_PREDICATES)
    journals = by_type.get(EntityType.JOURNAL, set())
    if journals:
        edges |= _pairs_sharing_paper(graph, journals, (Predicate.APPEARS_IN_JOURNAL,))
    conferences = by_type.get(EntityType.CONFERENCE, set())
    if conferences:
        edges |= _pairs_sharing_paper(graph, conferences, (Predicate.APPEARS_IN_CONFERENCE,))
    return sorted(edges)


def compare_graphs(results: Sequence[QueryResult]) -> ComparisonResult:
    """Merge two or more query results and mark the nodes common to all."""
    results = list(results)
    if len(results) < 2:
        raise ValueError("compare_graphs requires at least two results")
    node_sets = [result.node_set() for result in results]
    merged_nodes = sorted(set().union(*node_sets))
    merged_edges: set[tuple[str, str]] = set()
    for result in results:
        merged_edges |= result.edge_set()
    common = frozenset(set.intersection(*node_sets))
    return ComparisonResult(
        nodes=tuple(merged_nodes), edges=tuple(sorted(merged_edges)), common=common
    )


def cooccurrence_links(
    concepts: Iterable[str], graph: KnowledgeGraph
) -> list[CooccurrenceLink]:
    """Weight every unordered concept pair by the papers linking to both."""
    members = set(concepts)
    papers_of: dict[str, set[str]] = {}
    for predicate in CONCEPT_PREDICATES:
        for triple in graph.triples_with_predicate(predicate):
            if triple.o in members:
                papers_of.setdefault(triple.o, set()).add(triple.s)
    links = []
    for a, b in itertools.combinations(sorted(papers_of), 2):
        weight = len(papers_of[a] & papers_of[b])
        if weight:
            links.append(CooccurrenceLink(concept_a=a, concept_b=b, weight=weight))
    return links

"""Multi-hop semantic query over the knowledge graph."""

from .engine import (
    ComparisonResult,
    CooccurrenceLink,
    QueryResult,
    QuerySpec,
    bounded_levenshtein,
    compare_graphs,
    cooccurrence_links,
    fuzzy_query,
    internal_edges,
    path_score,
    reachable,
    semantic_query,
)
from .index import BACKEND_NAME, GraphIndex
from .ontology import OntologyGraph, default_ontology, ontology_distance

__all__ = [
    "BACKEND_NAME",
    "ComparisonResult",
    "CooccurrenceLink",
    "GraphIndex",
    "OntologyGraph",
    "QueryResult",
    "QuerySpec",
    "bounded_levenshtein",
    "compare_graphs",
    "cooccurrence_links",
    "default_ontology",
    "fuzzy_query",
    "internal_edges",
    "ontology_distance",
    "path_score",
    "reachable",
    "semantic_query",
]

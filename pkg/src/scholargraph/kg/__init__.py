"""Typed triple store: ontology, graph construction, linking, Turtle I/O."""

from .model import (
    Entity,
    EntityType,
    GraphStats,
    KnowledgeGraph,
    PREDICATE_DOMAIN_RANGE,
    Predicate,
    entity_iri,
)
from .build import BuildReport, build_graph
from .linking import LinkedResource, NormalizedConcept, SpotlightClient, StaticLinker, normalize_concept, normalize_concepts
from .turtle import parse_turtle, serialize_turtle

__all__ = [
    "EntityType",
    "Entity",
    "Predicate",
    "PREDICATE_DOMAIN_RANGE",
    "GraphStats",
    "KnowledgeGraph",
    "entity_iri",
    "build_graph",
    "BuildReport",
    "LinkedResource",
    "NormalizedConcept",
    "SpotlightClient",
    "StaticLinker",
    "normalize_concept",
    "normalize_concepts",
    "serialize_turtle",
    "parse_turtle",
]

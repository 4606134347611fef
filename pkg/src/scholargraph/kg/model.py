"""Graph model: five entity types, nine predicates, and the triple store.

Entities carry literal attributes (title, name, year, ...) in a plain map;
triples link entity iris through a closed predicate vocabulary whose
domain/range is enforced at insertion. After building, a graph is frozen
and safe for unlimited concurrent readers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from urllib.parse import quote, unquote

from ..errors import UnknownEntityError

DEFAULT_NAMESPACE = "http://scholargraph.example.org"


class _ValueOrdered(enum.Enum):
    """Enum ordered by its string value so triples sort deterministically."""

    def __lt__(self, other):
        if isinstance(other, type(self)):
            return self.value < other.value
        return NotImplemented


class EntityType(_ValueOrdered):
    PAPER = "Paper"
    CONCEPT = "Concept"
    AUTHOR = "Author"
    JOURNAL = "Journal"
    CONFERENCE = "Conference"

    @classmethod
    def from_value(cls, value: str) -> "EntityType":
        for member in cls:
            if member.value == value:
                return member
        raise ValueError(f"unknown entity type: {value!r}")


class Predicate(_ValueOrdered):
    CITES = "cites"
    CREATOR = "creator"
    APPEARS_IN_JOURNAL = "appearsInJournal"
    APPEARS_IN_CONFERENCE = "appearsInConference"
    HAS_DATA = "hasData"
    HAS_APPLICATION = "hasApplication"
    HAS_METHOD = "hasMethod"
    HAS_VISUALIZATION = "hasVisualization"
    HAS_EVALUATION = "hasEvaluation"

    @classmethod
    def from_value(cls, value: str) -> "Predicate":
        for member in cls:
            if member.value == value:
                return member
        raise ValueError(f"unknown predicate: {value!r}")


PREDICATE_DOMAIN_RANGE: dict[Predicate, tuple[EntityType, EntityType]] = {
    Predicate.CITES: (EntityType.PAPER, EntityType.PAPER),
    Predicate.CREATOR: (EntityType.PAPER, EntityType.AUTHOR),
    Predicate.APPEARS_IN_JOURNAL: (EntityType.PAPER, EntityType.JOURNAL),
    Predicate.APPEARS_IN_CONFERENCE: (EntityType.PAPER, EntityType.CONFERENCE),
    Predicate.HAS_DATA: (EntityType.PAPER, EntityType.CONCEPT),
    Predicate.HAS_APPLICATION: (EntityType.PAPER, EntityType.CONCEPT),
    Predicate.HAS_METHOD: (EntityType.PAPER, EntityType.CONCEPT),
    Predicate.HAS_VISUALIZATION: (EntityType.PAPER, EntityType.CONCEPT),
    Predicate.HAS_EVALUATION: (EntityType.PAPER, EntityType.CONCEPT),
}

# Literal attribute vocabulary allowed on entities.
ATTRIBUTE_NAMES = ("title", "year", "url", "name", "dbpediaUrl")

_REQUIRED_ATTRIBUTE = {
    EntityType.PAPER: "title",
    EntityType.CONCEPT: "name",
    EntityType.AUTHOR: "name",
    EntityType.JOURNAL: "name",
    EntityType.CONFERENCE: "name",
}


def entity_iri(namespace: str, etype: EntityType, key: str) -> str:
    """IRI scheme: <namespace>/<etype-lowercase>/<urlencoded-key>."""
    return f"{namespace.rstrip('/')}/{etype.value.lower()}/{quote(key, safe='')}"


def iri_key(iri: str) -> str:
    """Recover the url-decoded key segment of an entity iri."""
    return unquote(iri.rsplit("/", 1)[-1])


@dataclass(frozen=True)
class Entity:
    iri: str
    etype: EntityType
    attributes: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        required = _REQUIRED_ATTRIBUTE[self.etype]
        if not self.attributes.get(required):
            raise ValueError(
                f"{self.etype.value} entity {self.iri} missing required attribute {required!r}"
            )

    @property
    def display_name(self) -> str:
        return self.attributes.get("title") or self.attributes.get("name") or self.iri


@dataclass(frozen=True, order=True)
class Triple:
    s: str
    p: Predicate
    o: str


@dataclass(frozen=True)
class GraphStats:
    entity_counts: dict[EntityType, int]
    relation_counts: dict[Predicate, int]

    @property
    def total_entities(self) -> int:
        return sum(self.entity_counts.values())

    @property
    def total_relations(self) -> int:
        return sum(self.relation_counts.values())

    def to_dict(self) -> dict:
        return {
            "entities": {t.value: self.entity_counts.get(t, 0) for t in EntityType},
            "relations": {p.value: self.relation_counts.get(p, 0) for p in Predicate},
            "total_entities": self.total_entities,
            "total_relations": self.total_relations,
        }


class KnowledgeGraph:
    """Entity set plus deduplicated triple list with ontology enforcement."""

    def __init__(self, namespace: str = DEFAULT_NAMESPACE):
        self.namespace = namespace.rstrip("/")
        self._entities: dict[str, Entity] = {}
        self._triples: list[Triple] = []
        self._triple_set: set[Triple] = set()
        self._index = None  # built lazily by query.index.GraphIndex

    # -- construction -------------------------------------------------

    def add_entity(self, entity: Entity) -> Entity:
        existing = self._entities.get(entity.iri)
        if existing is not None:
            if existing.etype is not entity.etype:
                raise ValueError(
                    f"iri {entity.iri} already bound to type {existing.etype.value}"
                )
            return existing
        self._entities[entity.iri] = entity
        self._index = None
        return entity

    def add_triple(self, s: str, p: Predicate, o: str) -> bool:
        """Insert a triple; returns False when it is already present."""
        for iri in (s, o):
            if iri not in self._entities:
                raise UnknownEntityError(f"triple endpoint not in graph: {iri}")
        domain, rng = PREDICATE_DOMAIN_RANGE[p]
        if self._entities[s].etype is not domain or self._entities[o].etype is not rng:
            raise ValueError(
                f"{p.value} requires {domain.value}->{rng.value}, got "
                f"{self._entities[s].etype.value}->{self._entities[o].etype.value}"
            )
        triple = Triple(s=s, p=p, o=o)
        if triple in self._triple_set:
            return False
        self._triple_set.add(triple)
        self._triples.append(triple)
        self._index = None
        return True

    # -- access -------------------------------------------------------

    @property
    def entities(self) -> dict[str, Entity]:
        return self._entities

    @property
    def triples(self) -> list[Triple]:
        return self._triples

    def entity(self, iri: str) -> Entity:
        try:
            return self._entities[iri]
        except KeyError:
            raise UnknownEntityError(f"unknown entity: {iri}") from None

    def __contains__(self, iri: str) -> bool:
        return iri in self._entities

    def entities_of_type(self, etype: EntityType) -> list[Entity]:
        return [e for e in self._entities.values() if e.etype is etype]

    def triples_with_predicate(self, p: Predicate) -> list[Triple]:
        return [t for t in self._triples if t.p is p]

    def objects(self, s: str, p: Predicate) -> list[str]:
        return [t.o for t in self._triples if t.s == s and t.p is p]

    def subjects(self, p: Predicate, o: str) -> list[str]:
        return [t.s for t in self._triples if t.p is p and t.o == o]

    def stats(self) -> GraphStats:
        entity_counts = {t: 0 for t in EntityType}
        for entity in self._entities.values():
            entity_counts[entity.etype] += 1
        relation_counts = {p: 0 for p in Predicate}
        for triple in self._triples:
            relation_counts[triple.p] += 1
        return GraphStats(entity_counts=entity_counts, relation_counts=relation_counts)

    def index(self):
        """Frozen traversal index over the current graph (cached)."""
        from ..query.index import GraphIndex

        if self._index is None:
            self._index = GraphIndex(self)
        return self._index

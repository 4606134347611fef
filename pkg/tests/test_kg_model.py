"""Graph model: entities, triples, ontology enforcement, stats."""

import pytest

from scholargraph.errors import UnknownEntityError
from scholargraph.kg.model import (
    ATTRIBUTE_NAMES,
    DEFAULT_NAMESPACE,
    Entity,
    EntityType,
    KnowledgeGraph,
    Predicate,
    Triple,
    entity_iri,
    iri_key,
)
from tests.conftest import add_entity


def test_entity_iri_scheme():
    iri = entity_iri("http://example.org/kg/", EntityType.CONCEPT, "topic model")
    assert iri == "http://example.org/kg/concept/topic%20model"
    assert iri_key(iri) == "topic model"


def test_iri_key_round_trips_awkward_characters():
    key = 'a/b "c" \n 100%'
    iri = entity_iri(DEFAULT_NAMESPACE, EntityType.PAPER, key)
    assert "/" not in iri.rsplit("/", 1)[-1]
    assert iri_key(iri) == key


def test_entity_requires_label_attribute():
    with pytest.raises(ValueError):
        Entity(iri="x", etype=EntityType.PAPER, attributes={"year": "2020"})
    with pytest.raises(ValueError):
        Entity(iri="x", etype=EntityType.CONCEPT, attributes={})
    Entity(iri="x", etype=EntityType.PAPER, attributes={"title": "T"})
    Entity(iri="x", etype=EntityType.AUTHOR, attributes={"name": "A"})


def test_display_name_prefers_title_then_name():
    paper = Entity(iri="p", etype=EntityType.PAPER, attributes={"title": "T"})
    author = Entity(iri="a", etype=EntityType.AUTHOR, attributes={"name": "N"})
    assert paper.display_name == "T"
    assert author.display_name == "N"


def test_attribute_vocabulary():
    assert ATTRIBUTE_NAMES == ("title", "year", "url", "name", "dbpediaUrl")


def test_add_entity_idempotent_and_type_stable():
    g = KnowledgeGraph()
    iri = add_entity(g, EntityType.PAPER, "p1")
    original = g.entity(iri)
    again = g.add_entity(Entity(iri=iri, etype=EntityType.PAPER, attributes={"title": "other"}))
    assert again is original  # first writer wins
    with pytest.raises(ValueError):
        g.add_entity(Entity(iri=iri, etype=EntityType.JOURNAL, attributes={"name": "J"}))


def test_add_triple_enforces_domain_and_range():
    g = KnowledgeGraph()
    p = add_entity(g, EntityType.PAPER, "p1")
    c = add_entity(g, EntityType.CONCEPT, "text mining")
    a = add_entity(g, EntityType.AUTHOR, "ada")
    assert g.add_triple(p, Predicate.HAS_METHOD, c)
    with pytest.raises(ValueError):
        g.add_triple(c, Predicate.HAS_METHOD, p)  # wrong domain
    with pytest.raises(ValueError):
        g.add_triple(p, Predicate.CREATOR, c)  # wrong range
    with pytest.raises(ValueError):
        g.add_triple(a, Predicate.CITES, p)


def test_add_triple_requires_known_endpoints():
    g = KnowledgeGraph()
    p = add_entity(g, EntityType.PAPER, "p1")
    with pytest.raises(UnknownEntityError):
        g.add_triple(p, Predicate.CITES, "http://nowhere/paper/p2")
    with pytest.raises(UnknownEntityError):
        g.add_triple("http://nowhere/paper/p0", Predicate.CITES, p)


def test_add_triple_deduplicates():
    g = KnowledgeGraph()
    p1 = add_entity(g, EntityType.PAPER, "p1")
    p2 = add_entity(g, EntityType.PAPER, "p2")
    assert g.add_triple(p1, Predicate.CITES, p2) is True
    assert g.add_triple(p1, Predicate.CITES, p2) is False
    assert len(g.triples) == 1
    # reverse direction is a distinct triple
    assert g.add_triple(p2, Predicate.CITES, p1) is True


def test_self_citation_allowed_by_model():
    g = KnowledgeGraph()
    p = add_entity(g, EntityType.PAPER, "p1")
    assert g.add_triple(p, Predicate.CITES, p)


def test_lookup_helpers():
    g = KnowledgeGraph()
    p1 = add_entity(g, EntityType.PAPER, "p1")
    p2 = add_entity(g, EntityType.PAPER, "p2")
    c = add_entity(g, EntityType.CONCEPT, "text mining")
    g.add_triple(p1, Predicate.CITES, p2)
    g.add_triple(p1, Predicate.HAS_DATA, c)
    g.add_triple(p2, Predicate.HAS_DATA, c)
    assert p1 in g and "http://nowhere" not in g
    assert g.entity(p1).iri == p1
    with pytest.raises(UnknownEntityError):
        g.entity("http://nowhere")
    assert {e.iri for e in g.entities_of_type(EntityType.PAPER)} == {p1, p2}
    assert g.objects(p1, Predicate.CITES) == [p2]
    assert sorted(g.subjects(Predicate.HAS_DATA, c)) == sorted([p1, p2])
    assert len(g.triples_with_predicate(Predicate.HAS_DATA)) == 2


def test_stats_counts_by_type_and_predicate(case_graph):
    stats = case_graph.stats()
    assert stats.entity_counts[EntityType.PAPER] == 10
    assert stats.entity_counts[EntityType.CONCEPT] == 8
    assert stats.entity_counts[EntityType.AUTHOR] == 6
    assert stats.entity_counts[EntityType.JOURNAL] == 3
    assert stats.entity_counts[EntityType.CONFERENCE] == 3
    assert stats.total_entities == 30
    assert stats.relation_counts[Predicate.CITES] == 6
    assert stats.total_relations == len(case_graph.triples)
    as_dict = stats.to_dict()
    assert as_dict["entities"]["Paper"] == 10
    assert as_dict["total_relations"] == stats.total_relations


def test_triples_sort_deterministically():
    t1 = Triple(s="a", p=Predicate.CITES, o="b")
    t2 = Triple(s="a", p=Predicate.CREATOR, o="b")
    t3 = Triple(s="a", p=Predicate.CITES, o="c")
    assert sorted([t2, t3, t1]) == [t1, t3, t2]


def test_index_invalidated_by_mutation():
    g = KnowledgeGraph()
    p1 = add_entity(g, EntityType.PAPER, "p1")
    idx = g.index()
    assert g.index() is idx  # cached
    p2 = add_entity(g, EntityType.PAPER, "p2")
    idx2 = g.index()
    assert idx2 is not idx
    assert len(idx2) == 2
    g.add_triple(p1, Predicate.CITES, p2)
    assert g.index() is not idx2

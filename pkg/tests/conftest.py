"""Shared fixtures: deterministic graphs, corpus files, pipeline docs."""

from __future__ import annotations

import json
import random
from pathlib import Path

import pytest

from scholargraph.kg.model import (
    Entity,
    EntityType,
    KnowledgeGraph,
    Predicate,
    entity_iri,
)

FIXTURES = Path(__file__).parent / "fixtures"


def add_entity(graph: KnowledgeGraph, etype: EntityType, key: str, **attrs) -> str:
    if etype is EntityType.PAPER:
        attrs.setdefault("title", key)
    else:
        attrs.setdefault("name", key)
    iri = entity_iri(graph.namespace, etype, key)
    graph.add_entity(Entity(iri=iri, etype=etype, attributes=attrs))
    return iri


def random_graph(rng: random.Random, max_nodes: int = 20) -> KnowledgeGraph:
    """Ontology-conformant random graph with <= max_nodes entities."""
    graph = KnowledgeGraph()
    pools: dict[EntityType, list[str]] = {t: [] for t in EntityType}
    budget = rng.randint(2, max_nodes)
    n_papers = max(1, rng.randint(1, max(1, budget // 2)))
    for i in range(n_papers):
        pools[EntityType.PAPER].append(
            add_entity(graph, EntityType.PAPER, f"p{i:02d}", title=f"Paper {i:02d}")
        )
    others = [EntityType.CONCEPT, EntityType.AUTHOR, EntityType.JOURNAL, EntityType.CONFERENCE]
    remaining = budget - n_papers
    for _ in range(remaining):
        etype = rng.choice(others)
        key = f"{etype.value.lower()}{len(pools[etype]):02d}"
        pools[etype].append(add_entity(graph, etype, key))
    attempts = rng.randint(0, budget * 3)
    predicates = list(Predicate)
    for _ in range(attempts):
        predicate = rng.choice(predicates)
        from scholargraph.kg.model import PREDICATE_DOMAIN_RANGE

        domain, rng_type = PREDICATE_DOMAIN_RANGE[predicate]
        if not pools[domain] or not pools[rng_type]:
            continue
        graph.add_triple(rng.choice(pools[domain]), predicate, rng.choice(pools[rng_type]))
    return graph


@pytest.fixture(scope="session")
def case_graph() -> KnowledgeGraph:
    """30-node fixture: 10 papers, 8 concepts, 6 authors, 3 journals, 3 conferences."""
    g = KnowledgeGraph()
    p = {
        i: add_entity(g, EntityType.PAPER, f"p{i:02d}", title=f"Paper {i:02d}", year=str(2010 + i))
        for i in range(1, 11)
    }
    c = {}
    for name in (
        "text mining",
        "topic model",
        "sentiment analysis",
        "word embedding",
        "network analysis",
        "graph drawing",
        "user study",
        "crowdsourcing",
    ):
        c[name] = add_entity(g, EntityType.CONCEPT, name)
    g.entity(c["text mining"]).attributes["dbpediaUrl"] = "http://dbpedia.org/resource/Text_mining"
    g.entity(c["topic model"]).attributes["dbpediaUrl"] = "http://dbpedia.org/resource/Topic_model"
    a = {
        name: add_entity(g, EntityType.AUTHOR, name)
        for name in (
            "ada lovelace",
            "alan turing",
            "grace hopper",
            "edsger dijkstra",
            "barbara liskov",
            "donald knuth",
        )
    }
    j = {name: add_entity(g, EntityType.JOURNAL, name) for name in ("tvcg", "cgf", "jov")}
    v = {name: add_entity(g, EntityType.CONFERENCE, name) for name in ("vis", "chi", "kdd")}

    g.add_triple(p[1], Predicate.HAS_APPLICATION, c["text mining"])
    g.add_triple(p[2], Predicate.HAS_METHOD, c["text mining"])
    g.add_triple(p[3], Predicate.HAS_DATA, c["text mining"])
    g.add_triple(p[4], Predicate.HAS_METHOD, c["text mining"])
    g.add_triple(p[5], Predicate.HAS_METHOD, c["topic model"])
    g.add_triple(p[5], Predicate.HAS_DATA, c["word embedding"])
    g.add_triple(p[6], Predicate.HAS_METHOD, c["network analysis"])
    g.add_triple(p[6], Predicate.HAS_VISUALIZATION, c["graph drawing"])
    g.add_triple(p[7], Predicate.HAS_EVALUATION, c["user study"])
    g.add_triple(p[7], Predicate.HAS_DATA, c["crowdsourcing"])
    g.add_triple(p[8], Predicate.HAS_APPLICATION, c["sentiment analysis"])
    g.add_triple(p[8], Predicate.HAS_METHOD, c["topic model"])
    g.add_triple(p[9], Predicate.HAS_DATA, c["word embedding"])
    g.add_triple(p[9], Predicate.HAS_METHOD, c["topic model"])
    g.add_triple(p[10], Predicate.HAS_APPLICATION, c["sentiment analysis"])
    g.add_triple(p[10], Predicate.HAS_METHOD, c["network analysis"])

    g.add_triple(p[1], Predicate.CITES, p[5])
    g.add_triple(p[2], Predicate.CITES, p[5])
    g.add_triple(p[1], Predicate.CITES, p[2])
    g.add_triple(p[3], Predicate.CITES, p[6])
    g.add_triple(p[7], Predicate.CITES, p[3])
    g.add_triple(p[9], Predicate.CITES, p[10])

    g.add_triple(p[1], Predicate.CREATOR, a["ada lovelace"])
    g.add_triple(p[2], Predicate.CREATOR, a["ada lovelace"])
    g.add_triple(p[2], Predicate.CREATOR, a["alan turing"])
    g.add_triple(p[3], Predicate.CREATOR, a["grace hopper"])
    g.add_triple(p[4], Predicate.CREATOR, a["alan turing"])
    g.add_triple(p[5], Predicate.CREATOR, a["edsger dijkstra"])
    g.add_triple(p[6], Predicate.CREATOR, a["barbara liskov"])
    g.add_triple(p[7], Predicate.CREATOR, a["donald knuth"])
    g.add_triple(p[8], Predicate.CREATOR, a["ada lovelace"])

    g.add_triple(p[1], Predicate.APPEARS_IN_JOURNAL, j["tvcg"])
    g.add_triple(p[5], Predicate.APPEARS_IN_JOURNAL, j["tvcg"])
    g.add_triple(p[2], Predicate.APPEARS_IN_JOURNAL, j["cgf"])
    g.add_triple(p[9], Predicate.APPEARS_IN_JOURNAL, j["jov"])

    g.add_triple(p[3], Predicate.APPEARS_IN_CONFERENCE, v["vis"])
    g.add_triple(p[6], Predicate.APPEARS_IN_CONFERENCE, v["vis"])
    g.add_triple(p[4], Predicate.APPEARS_IN_CONFERENCE, v["chi"])
    g.add_triple(p[10], Predicate.APPEARS_IN_CONFERENCE, v["kdd"])
    g.add_triple(p[7], Predicate.APPEARS_IN_CONFERENCE, v["kdd"])
    return g


@pytest.fixture(scope="session")
def case_iris(case_graph) -> dict[str, str]:
    """Short handle -> iri for the case fixture."""
    ns = case_graph.namespace
    handles = {}
    for i in range(1, 11):
        handles[f"p{i:02d}"] = entity_iri(ns, EntityType.PAPER, f"p{i:02d}")
    for name in (
        "text mining",
        "topic model",
        "sentiment analysis",
        "word embedding",
        "network analysis",
        "graph drawing",
        "user study",
        "crowdsourcing",
    ):
        handles[name] = entity_iri(ns, EntityType.CONCEPT, name)
    for name in (
        "ada lovelace",
        "alan turing",
        "grace hopper",
        "edsger dijkstra",
        "barbara liskov",
        "donald knuth",
    ):
        handles[name] = entity_iri(ns, EntityType.AUTHOR, name)
    for name in ("tvcg", "cgf", "jov"):
        handles[name] = entity_iri(ns, EntityType.JOURNAL, name)
    for name in ("vis", "chi", "kdd"):
        handles[name] = entity_iri(ns, EntityType.CONFERENCE, name)
    return handles


@pytest.fixture(scope="session")
def case_pipeline_doc() -> dict:
    with (FIXTURES / "case_pipeline.json").open("r", encoding="utf-8") as handle:
        return json.load(handle)


@pytest.fixture()
def corpus_path() -> Path:
    return FIXTURES / "corpus.jsonl"


@pytest.fixture()
def corpus_records(corpus_path):
    from scholargraph.corpus.ingest import parse_corpus

    with corpus_path.open("r", encoding="utf-8") as handle:
        return parse_corpus(handle)

"""HTTP facade: every endpoint mirrors the corresponding in-process call."""

import copy

import pytest
from fastapi.testclient import TestClient

from scholargraph import __version__
from scholargraph.dataflow.executor import execute
from scholargraph.dataflow.pipeline import parse_pipeline
from scholargraph.kg.model import EntityType
from scholargraph.query.engine import fuzzy_query
from scholargraph.service.app import create_app


@pytest.fixture(scope="module")
def client(case_graph):
    return TestClient(create_app(case_graph))


def strip_durations(trace_doc: dict) -> dict:
    doc = copy.deepcopy(trace_doc)
    for entry in doc["components"].values():
        entry.pop("duration_ms")
    return doc


def assert_error_envelope(response, status: int, code: str) -> dict:
    assert response.status_code == status
    body = response.json()
    assert set(body) == {"error"}
    assert set(body["error"]) == {"code", "message", "details"}
    assert body["error"]["code"] == code
    return body["error"]


class TestHealthz:
    def test_reports_version_and_sizes(self, client, case_graph):
        body = client.get("/healthz").json()
        stats = case_graph.stats()
        assert body == {
            "status": "ok",
            "version": __version__,
            "total_entities": stats.total_entities,
            "total_relations": stats.total_relations,
        }


class TestStats:
    def test_matches_in_process_stats(self, client, case_graph):
        assert client.get("/stats").json() == case_graph.stats().to_dict()

    def test_case_graph_counts(self, client):
        body = client.get("/stats").json()
        assert body["entities"]["Paper"] == 10
        assert body["entities"]["Concept"] == 8
        assert body["total_entities"] == 30
        assert body["relations"]["cites"] == 6


class TestSearch:
    def test_matches_in_process_fuzzy_query(self, client, case_graph):
        response = client.get(
            "/entities/search", params={"q": "text mining", "type": "Concept"}
        )
        assert response.status_code == 200
        body = response.json()
        expected = fuzzy_query(["text mining"], EntityType.CONCEPT, case_graph, limit=20)
        assert body["iris"] == expected
        assert body["entities"][0]["label"] == "text mining"
        assert body["entities"][0]["type"] == "Concept"

    def test_multiple_terms_comma_separated(self, client, case_graph):
        body = client.get(
            "/entities/search", params={"q": "topic model, word embedding", "type": "Concept"}
        ).json()
        expected = fuzzy_query(
            ["topic model", "word embedding"], EntityType.CONCEPT, case_graph, limit=20
        )
        assert body["iris"] == expected

    def test_paging_offsets_into_full_ranking(self, client, case_graph):
        full = fuzzy_query(["Paper"], EntityType.PAPER, case_graph, limit=10)
        body = client.get(
            "/entities/search",
            params={"q": "Paper", "type": "Paper", "limit": 2, "offset": 1},
        ).json()
        assert body["iris"] == full[1:3]
        assert body["limit"] == 2 and body["offset"] == 1

    def test_unknown_type_is_bad_request(self, client):
        response = client.get("/entities/search", params={"q": "x", "type": "Preprint"})
        error = assert_error_envelope(response, 400, "bad_request")
        assert error["details"] == {"field": "type"}

    def test_blank_terms_are_bad_request(self, client):
        response = client.get("/entities/search", params={"q": " , ", "type": "Concept"})
        error = assert_error_envelope(response, 400, "bad_request")
        assert error["details"] == {"field": "q"}

    def test_negative_limit_is_bad_request(self, client):
        response = client.get(
            "/entities/search", params={"q": "x", "type": "Concept", "limit": -1}
        )
        error = assert_error_envelope(response, 400, "bad_request")
        assert error["details"]["errors"]
        assert "limit" in error["details"]["errors"][0]["loc"]

    def test_missing_type_is_bad_request(self, client):
        response = client.get("/entities/search", params={"q": "x"})
        assert_error_envelope(response, 400, "bad_request")


class TestConceptDetail:
    def test_encoded_iri(self, client, case_iris):
        iri = case_iris["text mining"]
        response = client.get(f"/concepts/{iri}")
        assert response.status_code == 200
        body = response.json()
        assert body["iri"] == iri
        assert body["name"] == "text mining"
        assert body["dbpedia_url"] == "http://dbpedia.org/resource/Text_mining"
        assert body["attributes"]["name"] == "text mining"

    def test_decoded_iri_resolves_to_stored_form(self, client, case_iris):
        iri = case_iris["text mining"]
        response = client.get(f"/concepts/{iri.replace('%20', ' ')}")
        assert response.status_code == 200
        assert response.json()["iri"] == iri

    def test_concept_without_dbpedia_url(self, client, case_iris):
        body = client.get(f"/concepts/{case_iris['word embedding']}").json()
        assert body["dbpedia_url"] is None

    def test_unknown_iri_is_not_found(self, client):
        response = client.get("/concepts/http://scholargraph.example.org/concept/ghost")
        error = assert_error_envelope(response, 404, "not_found")
        assert error["details"]["iri"].endswith("ghost")

    def test_non_concept_is_not_found(self, client, case_iris):
        response = client.get(f"/concepts/{case_iris['p01']}")
        error = assert_error_envelope(response, 404, "not_found")
        assert "not a concept" in error["message"]


class TestValidateEndpoint:
    def test_valid_document(self, client, case_pipeline_doc):
        body = client.post("/pipelines/validate", json=case_pipeline_doc).json()
        assert body == {"valid": True, "violations": []}

    def test_violations_reported(self, client):
        doc = {
            "components": {
                "e": {
                    "kind": "expander",
                    "params": {"target_type": "Paper", "k": 3, "output_mode": "entities"},
                }
            },
            "wires": [],
        }
        body = client.post("/pipelines/validate", json=doc).json()
        assert body["valid"] is False
        assert body["violations"] == [
            {
                "code": "input_unwired",
                "message": "input port e.in is not wired",
                "components": ["e"],
            }
        ]

    def test_malformed_document_is_bad_request(self, client):
        doc = {"components": {"a": {"kind": "mystery"}}, "wires": []}
        response = client.post("/pipelines/validate", json=doc)
        assert_error_envelope(response, 400, "bad_request")


class TestExecuteEndpoint:
    def test_matches_in_process_execution(self, client, case_graph, case_pipeline_doc):
        response = client.post("/pipelines/execute", json=case_pipeline_doc)
        assert response.status_code == 200
        expected = execute(parse_pipeline(case_pipeline_doc), case_graph).to_dict()
        assert strip_durations(response.json()) == strip_durations(expected)

    def test_trace_payloads_present(self, client, case_pipeline_doc, case_iris):
        body = client.post("/pipelines/execute", json=case_pipeline_doc).json()
        assert body["order"] == ["q1", "e1", "e2", "viz"]
        q1 = body["components"]["q1"]
        assert q1["status"] == "ok"
        assert q1["payload"] == {"iris": [case_iris["text mining"]]}

    def test_invalid_pipeline_names_components(self, client):
        doc = {
            "components": {
                "q": {
                    "kind": "querier",
                    "params": {"terms": ["x"], "etype": "Concept", "limit": 5},
                },
                "viz": {"kind": "node_visualizer", "params": {}},
            },
            "wires": [{"from": "q.out", "to": "viz.in"}],
        }
        response = client.post("/pipelines/execute", json=doc)
        error = assert_error_envelope(response, 422, "validation_failed")
        assert error["message"] == "pipeline failed validation"
        assert error["details"]["components"] == ["q", "viz"]
        codes = [v["code"] for v in error["details"]["violations"]]
        assert codes == ["type_mismatch"]

    def test_malformed_document_is_bad_request(self, client):
        response = client.post("/pipelines/execute", json={"components": []})
        assert_error_envelope(response, 400, "bad_request")

    def test_non_object_body_is_bad_request(self, client):
        response = client.post("/pipelines/execute", json=[1, 2, 3])
        assert_error_envelope(response, 400, "bad_request")


class TestErrorEnvelopeEverywhere:
    def test_unknown_route(self, client):
        assert_error_envelope(client.get("/nope"), 404, "not_found")

    def test_method_not_allowed(self, client):
        assert_error_envelope(client.post("/stats"), 405, "bad_request")

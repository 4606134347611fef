"""Topological pipeline execution over an immutable graph.

Each component's payload is recorded in the trace together with status
and timing. A component whose upstream failed is marked skipped rather
than run; payload types are asserted against the declared ports on both
ends of every wire at runtime.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field

from ..concepts.labels import ConceptLabel
from ..errors import PayloadTypeError, PipelineValidationError
from ..kg.build import ROLE_PREDICATE
from ..kg.model import ATTRIBUTE_NAMES, EntityType, KnowledgeGraph
from ..query.engine import (
    QuerySpec,
    compare_graphs,
    cooccurrence_links,
    fuzzy_query,
    internal_edges,
    semantic_query,
)
from .components import ComponentKind, ComponentSpec
from .pipeline import Pipeline, topological_order, validate
from .ports import (
    EntityListPayload,
    Payload,
    PortType,
    SubgraphPayload,
    TableRowsPayload,
    VizDataPayload,
    WebUriPayload,
)

_VIEWER_PAYLOAD = {
    ComponentKind.NODE_VISUALIZER: PortType.VIZ_DATA,
    ComponentKind.TABLE_VIEWER: PortType.TABLE_ROWS,
    ComponentKind.NODE_VIEWER: PortType.WEB_URI,
}


@dataclass
class ComponentResult:
    status: str  # ok | error | skipped
    payload: Payload | None = None
    error: str | None = None
    duration_ms: float = 0.0

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "port": self.payload.port_type.value if self.payload is not None else None,
            "payload": self.payload.to_dict() if self.payload is not None else None,
            "error": self.error,
            "duration_ms": round(self.duration_ms, 3),
        }


@dataclass
class ExecutionTrace:
    results: dict[str, ComponentResult]
    order: tuple[str, ...]
    graph: KnowledgeGraph = field(repr=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "order": list(self.order),
            "components": {cid: result.to_dict() for cid, result in self.results.items()},
        }


# -- component handlers -------------------------------------------------


def _run_querier(spec: ComponentSpec, inputs: dict, graph: KnowledgeGraph) -> Payload:
    terms = [t for t in spec.params["terms"] if isinstance(t, str) and t.strip()]
    etype = EntityType.from_value(spec.params["etype"])
    limit = spec.params.get("limit", 20)
    return EntityListPayload(tuple(fuzzy_query(terms, etype, graph, limit)))


def _empty_expander_payload(mode: str) -> Payload:
    if mode == "entities":
        return EntityListPayload(())
    if mode in ("cross_graph", "internal_graph"):
        return SubgraphPayload((), ())
    return WebUriPayload(None, None)


def _run_expander(spec: ComponentSpec, inputs: dict, graph: KnowledgeGraph) -> Payload:
    source: EntityListPayload = inputs["in"]
    mode = spec.params.get("output_mode", "entities")
    if not source.iris:
        return _empty_expander_payload(mode)
    query_spec = QuerySpec(
        source_iris=tuple(source.iris),
        target_type=EntityType.from_value(spec.params["target_type"]),
        k=spec.params["k"],
    )
    result = semantic_query(query_spec, graph)
    target_iris = [iri for iri, _ in result.targets]
    if mode == "entities":
        return EntityListPayload(tuple(target_iris))
    if mode == "cross_graph":
        nodes = list(dict.fromkeys(result.sources))
        nodes.extend(iri for iri in target_iris if iri not in set(nodes))
        return SubgraphPayload(tuple(nodes), result.cross_edges)
    if mode == "internal_graph":
        return SubgraphPayload(tuple(target_iris), tuple(internal_edges(target_iris, graph)))
    # web_uri: the top-ranked concept is the deterministic stand-in for
    # the UI's clicked selection
    if not target_iris:
        return WebUriPayload(None, None)
    top = target_iris[0]
    return WebUriPayload(top, graph.entity(top).attributes.get("dbpediaUrl"))


def _run_comparer(spec: ComponentSpec, inputs: dict, graph: KnowledgeGraph) -> Payload:
    payloads = [inputs[name] for name, _ in spec.input_ports()]
    comparison = compare_graphs(payloads)
    return SubgraphPayload(
        comparison.nodes, comparison.edges, common=tuple(sorted(comparison.common))
    )


def _node_link_data(sub: SubgraphPayload, graph: KnowledgeGraph) -> dict:
    degree: Counter = Counter()
    for a, b in sub.edges:
        degree[a] += 1
        degree[b] += 1
    nodes = []
    for iri in sub.nodes:
        if iri in graph:
            entity = graph.entity(iri)
            etype, label = entity.etype.value, entity.display_name
        else:
            etype, label = None, iri
        nodes.append({"id": iri, "type": etype, "label": label, "degree": degree[iri]})
    return {"nodes": nodes, "edges": [list(edge) for edge in sub.edges]}


def _concept_role(graph: KnowledgeGraph, iri: str, graphwide: Counter) -> str | None:
    incident = Counter()
    for role, predicate in ROLE_PREDICATE.items():
        count = len(graph.subjects(predicate, iri))
        if count:
            incident[role] = count
    if not incident:
        return None
    best = max(incident.values())
    tied = [role for role, count in incident.items() if count == best]
    if len(tied) == 1:
        return tied[0].value
    # tie on incident edges: prefer the role with more edges graph-wide,
    # then declaration order of the roles
    order = list(ROLE_PREDICATE)
    tied.sort(key=lambda role: (-graphwide[role], order.index(role)))
    return tied[0].value


def _sankey_data(sub: SubgraphPayload, graph: KnowledgeGraph) -> dict:
    concepts = [
        iri
        for iri in sub.nodes
        if iri in graph and graph.entity(iri).etype is EntityType.CONCEPT
    ]
    graphwide: Counter = Counter()
    for role, predicate in ROLE_PREDICATE.items():
        graphwide[role] = len(graph.triples_with_predicate(predicate))
    groups: dict[str, list[str]] = {}
    for label in ConceptLabel:
        groups[label.value] = []
    for iri in concepts:
        role = _concept_role(graph, iri, graphwide)
        if role is not None:
            groups[role].append(iri)
    groups = {role: members for role, members in groups.items() if members}
    links = [
        {"source": link.concept_a, "target": link.concept_b, "weight": link.weight}
        for link in cooccurrence_links(concepts, graph)
    ]
    return {"groups": groups, "links": links}


def _run_node_visualizer(spec: ComponentSpec, inputs: dict, graph: KnowledgeGraph) -> Payload:
    sub: SubgraphPayload = inputs["in"]
    chart = spec.params.get("chart", "node_link")
    if chart == "node_link":
        return VizDataPayload("node_link", _node_link_data(sub, graph))
    return VizDataPayload("sankey", _sankey_data(sub, graph))


def build_table(iris, graph: KnowledgeGraph) -> TableRowsPayload:
    """One row per known entity: iri, type, then the attributes present."""
    entities = [graph.entity(iri) for iri in iris if iri in graph]
    present = [a for a in ATTRIBUTE_NAMES if any(a in e.attributes for e in entities)]
    columns = ("iri", "type", *present)
    rows = tuple(
        (e.iri, e.etype.value, *(e.attributes.get(a, "") for a in present)) for e in entities
    )
    return TableRowsPayload(columns, rows)


def _run_table_viewer(spec: ComponentSpec, inputs: dict, graph: KnowledgeGraph) -> Payload:
    payload = inputs["in"]
    iris = payload.iris if isinstance(payload, EntityListPayload) else payload.nodes
    return build_table(iris, graph)


def _run_node_viewer(spec: ComponentSpec, inputs: dict, graph: KnowledgeGraph) -> Payload:
    return inputs["in"]


_HANDLERS = {
    ComponentKind.QUERIER: _run_querier,
    ComponentKind.EXPANDER: _run_expander,
    ComponentKind.COMPARER: _run_comparer,
    ComponentKind.NODE_VISUALIZER: _run_node_visualizer,
    ComponentKind.TABLE_VIEWER: _run_table_viewer,
    ComponentKind.NODE_VIEWER: _run_node_viewer,
}


def _expected_payload_type(spec: ComponentSpec) -> PortType:
    viewer = _VIEWER_PAYLOAD.get(spec.kind)
    if viewer is not None:
        return viewer
    return spec.output_ports()[0][1]


def execute(pipeline: Pipeline, graph: KnowledgeGraph) -> ExecutionTrace:
    violations = validate(pipeline)
    if violations:
        raise PipelineValidationError(violations)

    feeds = {(w.to_component, w.to_port): w.from_component for w in pipeline.wires}
    order = topological_order(pipeline)
    results: dict[str, ComponentResult] = {}

    for cid in order:
        spec = pipeline.components[cid]
        inputs: dict[str, Payload] = {}
        blocked_by = None
        failure: str | None = None
        for port, ptype in spec.input_ports():
            source_id = feeds[(cid, port)]
            upstream = results[source_id]
            if upstream.status != "ok":
                blocked_by = source_id
                break
            payload = upstream.payload
            if payload is None or payload.port_type is not ptype:
                failure = (
                    f"input {cid}.{port} expected {ptype.value}, got "
                    f"{payload.port_type.value if payload else 'nothing'}"
                )
                break
            inputs[port] = payload
        if blocked_by is not None:
            results[cid] = ComponentResult(
                status="skipped",
                error=f"skipped: upstream component '{blocked_by}' did not produce output",
            )
            continue
        if failure is not None:
            results[cid] = ComponentResult(status="error", error=failure)
            continue

        started = time.perf_counter()
        try:
            payload = _HANDLERS[spec.kind](spec, inputs, graph)
            expected = _expected_payload_type(spec)
            if payload.port_type is not expected:
                raise PayloadTypeError(
                    f"component '{cid}' produced {payload.port_type.value}, "
                    f"declared {expected.value}"
                )
        except Exception as exc:
            results[cid] = ComponentResult(
                status="error",
                error=str(exc),
                duration_ms=(time.perf_counter() - started) * 1000.0,
            )
            continue
        results[cid] = ComponentResult(
            status="ok",
            payload=payload,
            duration_ms=(time.perf_counter() - started) * 1000.0,
        )

    return ExecutionTrace(results=results, order=tuple(order), graph=graph)


def trace_to_table(trace: ExecutionTrace, component_id: str) -> TableRowsPayload:
    """Tabulate an entity-bearing payload recorded in the trace."""
    if component_id not in trace.results:
        raise ValueError(f"unknown component: {component_id}")
    payload = trace.results[component_id].payload
    if isinstance(payload, EntityListPayload):
        return build_table(payload.iris, trace.graph)
    if isinstance(payload, SubgraphPayload):
        return build_table(payload.nodes, trace.graph)
    raise PayloadTypeError(
        f"component '{component_id}' did not produce an entity-bearing payload"
    )

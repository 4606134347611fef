"""Component kinds, their parameters, and derived port signatures.

A component's ports are a pure function of its kind and params, so the
validator and the UI derive the same signature from the same document.
Operator components produce dataflow outputs; viewer components consume
one input and keep their rendering payload in the trace only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from ..kg.model import EntityType
from .ports import PortType

EXPANDER_MODES = ("entities", "cross_graph", "internal_graph", "web_uri")
CHART_KINDS = ("node_link", "sankey")
TABLE_INPUT_TYPES = (PortType.ENTITY_LIST, PortType.SUBGRAPH)

_EXPANDER_OUTPUT = {
    "entities": PortType.ENTITY_LIST,
    "cross_graph": PortType.SUBGRAPH,
    "internal_graph": PortType.SUBGRAPH,
    "web_uri": PortType.WEB_URI,
}


class ComponentKind(enum.Enum):
    QUERIER = "querier"
    EXPANDER = "expander"
    COMPARER = "comparer"
    NODE_VISUALIZER = "node_visualizer"
    TABLE_VIEWER = "table_viewer"
    NODE_VIEWER = "node_viewer"

    @classmethod
    def from_value(cls, value: str) -> "ComponentKind":
        for member in cls:
            if member.value == value:
                return member
        raise ValueError(f"unknown component kind: {value!r}")


@dataclass(frozen=True)
class ComponentSpec:
    kind: ComponentKind
    params: dict = field(default_factory=dict)

    # -- port derivation ------------------------------------------------

    def input_ports(self) -> list[tuple[str, PortType]]:
        if self.kind is ComponentKind.QUERIER:
            return []
        if self.kind is ComponentKind.EXPANDER:
            return [("in", PortType.ENTITY_LIST)]
        if self.kind is ComponentKind.COMPARER:
            arity = self._arity()
            return [(f"in{i}", PortType.SUBGRAPH) for i in range(arity)]
        if self.kind is ComponentKind.NODE_VISUALIZER:
            return [("in", PortType.SUBGRAPH)]
        if self.kind is ComponentKind.TABLE_VIEWER:
            return [("in", self._table_input_type())]
        if self.kind is ComponentKind.NODE_VIEWER:
            return [("in", PortType.WEB_URI)]
        raise AssertionError(self.kind)

    def output_ports(self) -> list[tuple[str, PortType]]:
        if self.kind is ComponentKind.QUERIER:
            return [("out", PortType.ENTITY_LIST)]
        if self.kind is ComponentKind.EXPANDER:
            mode = self.params.get("output_mode", "entities")
            return [("out", _EXPANDER_OUTPUT.get(mode, PortType.ENTITY_LIST))]
        if self.kind is ComponentKind.COMPARER:
            return [("out", PortType.SUBGRAPH)]
        return []  # viewers are terminal

    def input_port_type(self, name: str) -> PortType | None:
        for port, ptype in self.input_ports():
            if port == name:
                return ptype
        return None

    def output_port_type(self, name: str) -> PortType | None:
        for port, ptype in self.output_ports():
            if port == name:
                return ptype
        return None

    def _arity(self) -> int:
        arity = self.params.get("arity", 2)
        return arity if isinstance(arity, int) and arity >= 2 else 2

    def _table_input_type(self) -> PortType:
        raw = self.params.get("input_type", PortType.ENTITY_LIST.value)
        try:
            ptype = PortType.from_value(raw) if isinstance(raw, str) else PortType.ENTITY_LIST
        except ValueError:
            return PortType.ENTITY_LIST
        return ptype if ptype in TABLE_INPUT_TYPES else PortType.ENTITY_LIST

    # -- parameter checking -----------------------------------------------

    def param_problems(self) -> list[str]:
        """Human-readable problems with this component's params."""
        problems: list[str] = []
        p = self.params
        if self.kind is ComponentKind.QUERIER:
            terms = p.get("terms")
            if not isinstance(terms, list) or not any(
                isinstance(t, str) and t.strip() for t in terms
            ):
                problems.append("querier requires a non-empty 'terms' list of strings")
            problems.extend(self._etype_problem("etype"))
            limit = p.get("limit", 20)
            if not isinstance(limit, int) or limit < 0:
                problems.append("'limit' must be a non-negative integer")
        elif self.kind is ComponentKind.EXPANDER:
            problems.extend(self._etype_problem("target_type"))
            k = p.get("k")
            if not isinstance(k, int) or k < 1:
                problems.append("'k' must be a positive integer")
            mode = p.get("output_mode", "entities")
            if mode not in EXPANDER_MODES:
                problems.append(
                    f"'output_mode' must be one of {', '.join(EXPANDER_MODES)}; got {mode!r}"
                )
            elif mode == "web_uri" and p.get("target_type") != EntityType.CONCEPT.value:
                problems.append("output_mode 'web_uri' requires target_type 'Concept'")
        elif self.kind is ComponentKind.COMPARER:
            arity = p.get("arity", 2)
            if not isinstance(arity, int) or arity < 2:
                problems.append("'arity' must be an integer >= 2")
        elif self.kind is ComponentKind.NODE_VISUALIZER:
            chart = p.get("chart", "node_link")
            if chart not in CHART_KINDS:
                problems.append(f"'chart' must be one of {', '.join(CHART_KINDS)}; got {chart!r}")
        elif self.kind is ComponentKind.TABLE_VIEWER:
            raw = p.get("input_type", PortType.ENTITY_LIST.value)
            allowed = tuple(t.value for t in TABLE_INPUT_TYPES)
            if raw not in allowed:
                problems.append(f"'input_type' must be one of {', '.join(allowed)}; got {raw!r}")
        return problems

    def _etype_problem(self, key: str) -> list[str]:
        raw = self.params.get(key)
        if not isinstance(raw, str):
            return [f"'{key}' is required and must be an entity type name"]
        try:
            EntityType.from_value(raw)
        except ValueError:
            valid = ", ".join(t.value for t in EntityType)
            return [f"'{key}' must be one of {valid}; got {raw!r}"]
        return []

    # -- document mapping -------------------------------------------------

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "params": dict(self.params)}

    @classmethod
    def from_dict(cls, doc: Any) -> "ComponentSpec":
        from ..errors import PipelineFormatError

        if not isinstance(doc, dict):
            raise PipelineFormatError("component entry must be an object")
        try:
            kind = ComponentKind.from_value(doc.get("kind"))
        except ValueError as exc:
            raise PipelineFormatError(str(exc)) from None
        params = doc.get("params", {})
        if not isinstance(params, dict):
            raise PipelineFormatError("component 'params' must be an object")
        return cls(kind=kind, params=params)

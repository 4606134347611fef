"""Port types and the typed payloads that flow across wires.

Every payload class declares the port type it satisfies; the executor
asserts the match at runtime on both ends of each wire. Payloads are
immutable values: components never mutate an upstream payload.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any


class PortType(enum.Enum):
    ENTITY_LIST = "EntityList"
    SUBGRAPH = "Subgraph"
    WEB_URI = "WebUri"
    TABLE_ROWS = "TableRows"
    VIZ_DATA = "VizData"

    @classmethod
    def from_value(cls, value: str) -> "PortType":
        for member in cls:
            if member.value == value:
                return member
        raise ValueError(f"unknown port type: {value!r}")


@dataclass(frozen=True)
class EntityListPayload:
    iris: tuple[str, ...]

    port_type = PortType.ENTITY_LIST

    def __post_init__(self):
        object.__setattr__(self, "iris", tuple(self.iris))

    def to_dict(self) -> dict:
        return {"iris": list(self.iris)}


@dataclass(frozen=True)
class SubgraphPayload:
    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    common: tuple[str, ...] | None = None

    port_type = PortType.SUBGRAPH

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if self.common is not None:
            object.__setattr__(self, "common", tuple(self.common))

    def node_set(self) -> set[str]:
        return set(self.nodes)

    def edge_set(self) -> set[tuple[str, str]]:
        return set(self.edges)

    def to_dict(self) -> dict:
        payload: dict[str, Any] = {
            "nodes": list(self.nodes),
            "edges": [list(edge) for edge in self.edges],
        }
        if self.common is not None:
            payload["common"] = list(self.common)
        return payload


@dataclass(frozen=True)
class WebUriPayload:
    concept: str | None
    uri: str | None

    port_type = PortType.WEB_URI

    def to_dict(self) -> dict:
        return {"concept": self.concept, "uri": self.uri}


@dataclass(frozen=True)
class TableRowsPayload:
    columns: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    port_type = PortType.TABLE_ROWS

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(self.columns))
        object.__setattr__(self, "rows", tuple(tuple(row) for row in self.rows))
        width = len(self.columns)
        for row in self.rows:
            if len(row) != width:
                raise ValueError(f"row width {len(row)} does not match {width} columns")

    def to_dict(self) -> dict:
        return {"columns": list(self.columns), "rows": [list(row) for row in self.rows]}


@dataclass(frozen=True)
class VizDataPayload:
    chart: str
    data: dict = field(default_factory=dict)

    port_type = PortType.VIZ_DATA

    def to_dict(self) -> dict:
        return {"chart": self.chart, **self.data}


Payload = EntityListPayload | SubgraphPayload | WebUriPayload | TableRowsPayload | VizDataPayload

"""Typed dataflow pipelines: components, validation, execution."""

from .components import (
    CHART_KINDS,
    EXPANDER_MODES,
    ComponentKind,
    ComponentSpec,
)
from .executor import (
    ComponentResult,
    ExecutionTrace,
    build_table,
    execute,
    trace_to_table,
)
from .pipeline import (
    Pipeline,
    Violation,
    Wire,
    parse_pipeline,
    topological_order,
    validate,
)
from .ports import (
    EntityListPayload,
    Payload,
    PortType,
    SubgraphPayload,
    TableRowsPayload,
    VizDataPayload,
    WebUriPayload,
)

__all__ = [
    "CHART_KINDS",
    "EXPANDER_MODES",
    "ComponentKind",
    "ComponentResult",
    "ComponentSpec",
    "EntityListPayload",
    "ExecutionTrace",
    "Payload",
    "Pipeline",
    "PortType",
    "SubgraphPayload",
    "TableRowsPayload",
    "Violation",
    "VizDataPayload",
    "WebUriPayload",
    "Wire",
    "build_table",
    "execute",
    "parse_pipeline",
    "topological_order",
    "trace_to_table",
    "validate",
]

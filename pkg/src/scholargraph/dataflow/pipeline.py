"""Pipeline document model and static validation.

The document format is the one the UI saves and the CLI accepts:

    {"components": {id: {"kind": ..., "params": {...}}},
     "wires": [{"from": "id.port", "to": "id.port"}]}

Violations are data, not exceptions: each one carries a code, a message
naming the component ids involved, and the ids themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..errors import PipelineFormatError
from .components import ComponentSpec


@dataclass(frozen=True)
class Wire:
    from_component: str
    from_port: str
    to_component: str
    to_port: str

    @property
    def source(self) -> str:
        return f"{self.from_component}.{self.from_port}"

    @property
    def target(self) -> str:
        return f"{self.to_component}.{self.to_port}"

    def to_dict(self) -> dict:
        return {"from": self.source, "to": self.target}


def _split_endpoint(raw: Any, side: str) -> tuple[str, str]:
    if not isinstance(raw, str) or "." not in raw:
        raise PipelineFormatError(f"wire '{side}' must be a 'component.port' string, got {raw!r}")
    component, _, port = raw.rpartition(".")
    if not component or not port:
        raise PipelineFormatError(f"wire '{side}' must be a 'component.port' string, got {raw!r}")
    return component, port


@dataclass(frozen=True)
class Pipeline:
    components: dict[str, ComponentSpec] = field(default_factory=dict)
    wires: tuple[Wire, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "wires", tuple(self.wires))
        for component_id in self.components:
            if "." in component_id:
                raise PipelineFormatError(f"component id may not contain '.': {component_id!r}")

    def to_dict(self) -> dict:
        return {
            "components": {cid: spec.to_dict() for cid, spec in self.components.items()},
            "wires": [wire.to_dict() for wire in self.wires],
        }

    @classmethod
    def from_dict(cls, doc: Any) -> "Pipeline":
        if not isinstance(doc, dict):
            raise PipelineFormatError("pipeline document must be an object")
        raw_components = doc.get("components", {})
        if not isinstance(raw_components, dict):
            raise PipelineFormatError("'components' must be an object keyed by component id")
        components = {
            str(cid): ComponentSpec.from_dict(entry) for cid, entry in raw_components.items()
        }
        raw_wires = doc.get("wires", [])
        if not isinstance(raw_wires, list):
            raise PipelineFormatError("'wires' must be a list")
        wires = []
        for entry in raw_wires:
            if not isinstance(entry, dict):
                raise PipelineFormatError("each wire must be an object with 'from' and 'to'")
            src, src_port = _split_endpoint(entry.get("from"), "from")
            dst, dst_port = _split_endpoint(entry.get("to"), "to")
            wires.append(
                Wire(
                    from_component=src,
                    from_port=src_port,
                    to_component=dst,
                    to_port=dst_port,
                )
            )
        return cls(components=components, wires=tuple(wires))


def parse_pipeline(doc: Any) -> Pipeline:
    return Pipeline.from_dict(doc)


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    components: tuple[str, ...]

    def to_dict(self) -> dict:
        return {"code": self.code, "message": self.message, "components": list(self.components)}


def validate(pipeline: Pipeline) -> list[Violation]:
    """Empty list iff the pipeline satisfies every static invariant."""
    violations: list[Violation] = []

    for cid in sorted(pipeline.components):
        for problem in pipeline.components[cid].param_problems():
            violations.append(
                Violation(code="bad_param", message=f"component '{cid}': {problem}", components=(cid,))
            )

    wired_inputs: dict[tuple[str, str], int] = {}
    for wire in pipeline.wires:
        missing = [cid for cid in (wire.from_component, wire.to_component) if cid not in pipeline.components]
        if missing:
            for cid in missing:
                violations.append(
                    Violation(
                        code="unknown_component",
                        message=f"wire {wire.source} -> {wire.target}: unknown component '{cid}'",
                        components=(cid,),
                    )
                )
            continue
        src_spec = pipeline.components[wire.from_component]
        dst_spec = pipeline.components[wire.to_component]
        out_type = src_spec.output_port_type(wire.from_port)
        in_type = dst_spec.input_port_type(wire.to_port)
        if out_type is None:
            violations.append(
                Violation(
                    code="unknown_port",
                    message=(
                        f"wire {wire.source} -> {wire.target}: component "
                        f"'{wire.from_component}' has no output port '{wire.from_port}'"
                    ),
                    components=(wire.from_component,),
                )
            )
        if in_type is None:
            violations.append(
                Violation(
                    code="unknown_port",
                    message=(
                        f"wire {wire.source} -> {wire.target}: component "
                        f"'{wire.to_component}' has no input port '{wire.to_port}'"
                    ),
                    components=(wire.to_component,),
                )
            )
        if out_type is not None and in_type is not None and out_type is not in_type:
            violations.append(
                Violation(
                    code="type_mismatch",
                    message=(
                        f"wire {wire.source} -> {wire.target}: output type "
                        f"{out_type.value} does not match input type {in_type.value}"
                    ),
                    components=(wire.from_component, wire.to_component),
                )
            )
        if in_type is not None:
            key = (wire.to_component, wire.to_port)
            wired_inputs[key] = wired_inputs.get(key, 0) + 1

    for (cid, port), count in sorted(wired_inputs.items()):
        if count > 1:
            violations.append(
                Violation(
                    code="input_multiwired",
                    message=f"input port {cid}.{port} is wired {count} times; expected once",
                    components=(cid,),
                )
            )

    for cid in sorted(pipeline.components):
        for port, _ in pipeline.components[cid].input_ports():
            if (cid, port) not in wired_inputs:
                violations.append(
                    Violation(
                        code="input_unwired",
                        message=f"input port {cid}.{port} is not wired",
                        components=(cid,),
                    )
                )

    violations.extend(_cycle_violations(pipeline))
    return violations


def _cycle_violations(pipeline: Pipeline) -> list[Violation]:
    known = set(pipeline.components)
    indegree = {cid: 0 for cid in known}
    successors: dict[str, set[str]] = {cid: set() for cid in known}
    for wire in pipeline.wires:
        if wire.from_component in known and wire.to_component in known:
            if wire.to_component not in successors[wire.from_component]:
                successors[wire.from_component].add(wire.to_component)
                indegree[wire.to_component] += 1
    ready = sorted(cid for cid, deg in indegree.items() if deg == 0)
    removed = 0
    while ready:
        cid = ready.pop(0)
        removed += 1
        for nxt in sorted(successors[cid]):
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                ready.append(nxt)
        ready.sort()
    if removed == len(known):
        return []
    cyclic = tuple(sorted(cid for cid, deg in indegree.items() if deg > 0))
    return [
        Violation(
            code="cycle",
            message="pipeline contains a cycle involving: " + ", ".join(cyclic),
            components=cyclic,
        )
    ]


def topological_order(pipeline: Pipeline) -> list[str]:
    """Deterministic execution order; assumes the pipeline is acyclic."""
    indegree = {cid: 0 for cid in pipeline.components}
    successors: dict[str, set[str]] = {cid: set() for cid in pipeline.components}
    for wire in pipeline.wires:
        if wire.to_component not in successors[wire.from_component]:
            successors[wire.from_component].add(wire.to_component)
            indegree[wire.to_component] += 1
    ready = sorted(cid for cid, deg in indegree.items() if deg == 0)
    order = []
    while ready:
        cid = ready.pop(0)
        order.append(cid)
        for nxt in sorted(successors[cid]):
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                ready.append(nxt)
        ready.sort()
    return order

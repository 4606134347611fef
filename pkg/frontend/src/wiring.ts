/**
 * Local wire checking with the service validator's exact violation text.
 *
 * Inline rejections must read identically to what POST /pipelines/validate
 * would return for the same wire, so the message formats here are pinned
 * (and tested) against the engine's strings.
 */

import type { PipelineDocument } from "./document.js";
import { splitEndpoint } from "./document.js";
import { inputPorts, inputPortType, outputPortType } from "./ports.js";

export type WireRejectionCode =
  | "unknown_component"
  | "unknown_port"
  | "type_mismatch"
  | "input_multiwired";

export type WireCheck =
  | { ok: true }
  | { ok: false; code: WireRejectionCode; message: string };

function reject(code: WireRejectionCode, message: string): WireCheck {
  return { ok: false, code, message };
}

/**
 * Would adding the wire `from` -> `to` to the document be accepted by the
 * validator? Reports the first violation the validator would raise.
 */
export function checkWire(doc: PipelineDocument, from: string, to: string): WireCheck {
  const source = splitEndpoint(from, "wire.from");
  const target = splitEndpoint(to, "wire.to");

  for (const component of [source.component, target.component]) {
    if (!(component in doc.components)) {
      return reject(
        "unknown_component",
        `wire ${from} -> ${to}: unknown component '${component}'`,
      );
    }
  }
  const sourceEntry = doc.components[source.component]!;
  const targetEntry = doc.components[target.component]!;

  const outType = outputPortType(sourceEntry, source.port);
  if (outType === null) {
    return reject(
      "unknown_port",
      `wire ${from} -> ${to}: component '${source.component}' has no output port '${source.port}'`,
    );
  }
  const inType = inputPortType(targetEntry, target.port);
  if (inType === null) {
    return reject(
      "unknown_port",
      `wire ${from} -> ${to}: component '${target.component}' has no input port '${target.port}'`,
    );
  }
  if (outType !== inType) {
    return reject(
      "type_mismatch",
      `wire ${from} -> ${to}: output type ${outType} does not match input type ${inType}`,
    );
  }

  const already = doc.wires.filter((wire) => wire.to === to).length;
  if (already > 0) {
    const times = already + 1;
    return reject(
      "input_multiwired",
      `input port ${to} is wired ${times} times; expected once`,
    );
  }
  return { ok: true };
}

/** Input ports of `component` that no wire feeds yet (run-readiness hint). */
export function unwiredInputs(doc: PipelineDocument, component: string): string[] {
  const entry = doc.components[component];
  if (!entry) {
    return [];
  }
  const wired = new Set(doc.wires.map((wire) => wire.to));
  return inputPorts(entry)
    .map((port) => port.name)
    .filter((name) => !wired.has(`${component}.${name}`));
}

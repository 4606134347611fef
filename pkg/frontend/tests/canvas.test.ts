import { describe, expect, it } from "vitest";

import { CanvasState } from "../src/canvas.js";

function studioPipeline(): CanvasState {
  const state = new CanvasState();
  const q1 = state.addComponent("querier");
  state.setParam(q1, "terms", ["text mining"]);
  const e1 = state.addComponent("expander");
  const e2 = state.addComponent("expander");
  state.setParam(e2, "output_mode", "cross_graph");
  const viz = state.addComponent("node_visualizer");
  expect(state.tryWire(`${q1}.out`, `${e1}.in`).ok).toBe(true);
  expect(state.tryWire(`${q1}.out`, `${e2}.in`).ok).toBe(true);
  expect(state.tryWire(`${e2}.out`, `${viz}.in`).ok).toBe(true);
  return state;
}

describe("component management", () => {
  it("generates dot-free ids that never collide", () => {
    const state = new CanvasState();
    const ids = [
      state.addComponent("querier"),
      state.addComponent("querier"),
      state.addComponent("node_visualizer"),
      state.addComponent("expander"),
    ];
    expect(ids).toEqual(["querier1", "querier2", "viz1", "expander1"]);
    expect(new Set(ids).size).toBe(ids.length);
    for (const id of ids) {
      expect(id).not.toContain(".");
      expect(state.positions.get(id)).toBeDefined();
    }
  });

  it("new components carry runnable default params", () => {
    const state = new CanvasState();
    const id = state.addComponent("expander");
    expect(state.component(id)?.params).toEqual({
      target_type: "Paper",
      k: 5,
      output_mode: "entities",
    });
  });

  it("removing a component drops its wires and selection", () => {
    const state = studioPipeline();
    expect(state.document.wires).toHaveLength(3);
    state.selection = "expander2";
    state.removeComponent("expander2");
    expect(state.component("expander2")).toBeNull();
    expect(state.selection).toBeNull();
    expect(state.document.wires).toEqual([{ from: "querier1.out", to: "expander1.in" }]);
  });
});

describe("wiring through the canvas", () => {
  it("rejected wires do not mutate the document", () => {
    const state = new CanvasState();
    const q = state.addComponent("querier");
    const viz = state.addComponent("node_visualizer");
    const check = state.tryWire(`${q}.out`, `${viz}.in`);
    expect(check.ok).toBe(false);
    expect(state.document.wires).toEqual([]);
  });

  it("unwire removes exactly the given wire", () => {
    const state = studioPipeline();
    state.unwire("querier1.out", "expander1.in");
    expect(state.document.wires.map((w) => w.to)).toEqual(["expander2.in", "viz1.in"]);
  });
});

describe("save and load", () => {
  it("save -> load -> save is byte-identical", () => {
    const state = studioPipeline();
    const saved = state.save();
    const other = new CanvasState();
    other.load(saved);
    expect(other.save()).toBe(saved);
  });

  it("load resets positions, selection, and the last trace", () => {
    const state = studioPipeline();
    state.selection = "querier1";
    state.lastTrace = { order: [], components: {} };
    state.load(state.save());
    expect(state.selection).toBeNull();
    expect(state.lastTrace).toBeNull();
    expect(state.positions.size).toBe(state.componentIds().length);
  });

  it("loading malformed text leaves the error to the caller", () => {
    const state = new CanvasState();
    expect(() => state.load("{}")).toThrowError(/'components'/);
  });
});

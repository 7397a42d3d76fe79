import { describe, expect, it } from "vitest";

import { RANKING_CRITERIA, WeightVector, boostedCriteria, clampQuantiles,
         initialState, normalizeWeights, requestBody,
         toRankRequest } from "../src/state.js";

function weights(values: number[]): WeightVector {
  const out = {} as WeightVector;
  RANKING_CRITERIA.forEach((criterion, index) => {
    out[criterion] = values[index]!;
  });
  return out;
}

describe("normalizeWeights", () => {
  it("sums to one", () => {
    const normalized = normalizeWeights(weights([1, 2, 3, 4, 5, 6]));
    const total = Object.values(normalized).reduce((a, b) => a + b, 0);
    expect(total).toBeCloseTo(1, 12);
  });

  it("is exactly stable under power-of-two rescaling", () => {
    const base = weights([3, 1, 4, 1, 5, 9]);
    for (const factor of [2, 0.5, 4, 0.25]) {
      const scaled = weights(RANKING_CRITERIA.map((c) => base[c] * factor));
      expect(normalizeWeights(scaled)).toEqual(normalizeWeights(base));
    }
  });

  it("rejects negative and all-zero vectors", () => {
    expect(() => normalizeWeights(weights([1, -1, 1, 1, 1, 1]))).toThrow(RangeError);
    expect(() => normalizeWeights(weights([0, 0, 0, 0, 0, 0]))).toThrow(RangeError);
  });
});

describe("requestBody", () => {
  it("proportional sliders produce identical payloads", () => {
    const a = initialState();
    a.scenario = "explicit";
    a.weights = weights([10, 20, 30, 40, 50, 60]);
    const b = { ...a, weights: weights([20, 40, 60, 80, 100, 120]) };
    expect(requestBody(b)).toBe(requestBody(a));
  });

  it("preset scenarios pass the preset name through", () => {
    const state = initialState();
    state.scenario = "correlation_boosted";
    expect(toRankRequest(state).scenario).toBe("correlation_boosted");
  });

  it("carries quantiles and function kind", () => {
    const state = initialState();
    state.alpha = 10;
    state.beta = 90;
    state.functionKind = "usual";
    const payload = toRankRequest(state);
    expect(payload.alpha).toBe(10);
    expect(payload.beta).toBe(90);
    expect(payload.function_kind).toBe("usual");
  });
});

describe("clampQuantiles", () => {
  it("keeps valid pairs", () => {
    expect(clampQuantiles(25, 75, "alpha")).toEqual({ alpha: 25, beta: 75 });
  });

  it("dragging alpha past beta pushes beta up", () => {
    expect(clampQuantiles(80, 75, "alpha")).toEqual({ alpha: 80, beta: 80 });
  });

  it("dragging beta past alpha pushes alpha down", () => {
    expect(clampQuantiles(25, 10, "beta")).toEqual({ alpha: 10, beta: 10 });
  });
});

describe("boostedCriteria", () => {
  it("flags only above-equal-share weights", () => {
    const boosted = boostedCriteria({
      PtsM: 0.05, DRM: 0.4, ORM: 0.05, EPts: 0.05, ASTM: 0.4, PCSpct: 0.05,
    });
    expect(boosted).toEqual(new Set(["DRM", "ASTM"]));
  });

  it("equal weights flag nothing", () => {
    const share = 1 / 6;
    const boosted = boostedCriteria({
      PtsM: share, DRM: share, ORM: share, EPts: share, ASTM: share, PCSpct: share,
    });
    expect(boosted.size).toBe(0);
  });
});

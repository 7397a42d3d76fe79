/** Explorer state and its translation into ranking requests. */

export const RANKING_CRITERIA = ["PtsM", "DRM", "ORM", "EPts", "ASTM", "PCSpct"] as const;
export type CriterionId = (typeof RANKING_CRITERIA)[number];

export const PROFILES = ["all", "PG", "SG", "F", "PF", "C"] as const;

export const FUNCTION_KINDS = [
  "usual", "u_shape", "v_shape", "level", "v_shape_indifference", "gaussian",
] as const;

export type ScenarioChoice = "equal" | "correlation_boosted" | "explicit";

export type WeightVector = Record<CriterionId, number>;

export interface ExplorerState {
  profile: string;
  scenario: ScenarioChoice;
  /** Raw slider positions; only their ratios matter. */
  weights: WeightVector;
  alpha: number;
  beta: number;
  functionKind: string;
  pinned: [string | null, string | null];
}

export function initialState(): ExplorerState {
  const weights = {} as WeightVector;
  for (const criterion of RANKING_CRITERIA) weights[criterion] = 1;
  return {
    profile: "all",
    scenario: "equal",
    weights,
    alpha: 25,
    beta: 75,
    functionKind: "v_shape_indifference",
    pinned: [null, null],
  };
}

/**
 * Sliders normalised to sum to one.
 *
 * Division by the exact sum means scaling every slider by the same power of
 * two reproduces bit-identical output, so proportional slider vectors send
 * identical request payloads.
 */
export function normalizeWeights(weights: WeightVector): WeightVector {
  let total = 0;
  for (const criterion of RANKING_CRITERIA) {
    const weight = weights[criterion];
    if (!Number.isFinite(weight) || weight < 0) {
      throw new RangeError(`weight for ${criterion} must be finite and >= 0`);
    }
    total += weight;
  }
  if (total <= 0) throw new RangeError("weights must have a positive sum");
  const normalized = {} as WeightVector;
  for (const criterion of RANKING_CRITERIA) {
    normalized[criterion] = weights[criterion] / total;
  }
  return normalized;
}

/** Keep alpha <= beta while the user drags either slider. */
export function clampQuantiles(alpha: number, beta: number,
                               moved: "alpha" | "beta"): { alpha: number; beta: number } {
  if (alpha <= beta) return { alpha, beta };
  return moved === "alpha" ? { alpha, beta: alpha } : { alpha: beta, beta };
}

export interface RankRequestPayload {
  profile: string;
  scenario: string | WeightVector;
  alpha: number;
  beta: number;
  function_kind: string;
}

export function toRankRequest(state: ExplorerState): RankRequestPayload {
  return {
    profile: state.profile,
    scenario: state.scenario === "explicit"
      ? normalizeWeights(state.weights)
      : state.scenario,
    alpha: state.alpha,
    beta: state.beta,
    function_kind: state.functionKind,
  };
}

export function requestBody(state: ExplorerState): string {
  return JSON.stringify(toRankRequest(state));
}

/** Criteria carrying more than an equal share of the weight. */
export function boostedCriteria(weights: Record<string, number>): Set<string> {
  const boosted = new Set<string>();
  const equalShare = 1 / RANKING_CRITERIA.length;
  for (const [criterion, weight] of Object.entries(weights)) {
    if (weight > equalShare + 1e-9) boosted.add(criterion);
  }
  return boosted;
}

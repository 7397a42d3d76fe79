/** Wiring: controls mutate state, state changes re-rank through the API. */

import { ApiClient, ApiResult, isAbortError } from "./api.js";
import { comparisonRows } from "./compare.js";
import { debounce } from "./debounce.js";
import { rankChanges } from "./diff.js";
import { Edge, layeredLayout } from "./layout.js";
import { RawNumber, asArray, asBoolean, asNumber, asObject, asString } from "./rawjson.js";
import { clearError, renderComparison, renderGraph, renderRankingTable,
         showError, OrderRow } from "./render.js";
import { CriterionId, ExplorerState, FUNCTION_KINDS, PROFILES,
         RANKING_CRITERIA, boostedCriteria, clampQuantiles, initialState,
         requestBody } from "./state.js";

interface PlayerInfo {
  id: string;
  position: string;
  indices: Record<string, RawNumber>;
}

const api = new ApiClient("");
const state: ExplorerState = initialState();

let allPlayers: PlayerInfo[] = [];
let lastResult: ApiResult | null = null;
let previousOrder: string[] = [];
let latestWeights: Record<string, number> = {};
let latestWeightTokens: Record<string, string> = {};

function byId<T extends HTMLElement>(id: string): T {
  const element = document.getElementById(id);
  if (!element) throw new Error(`missing #${id}`);
  return element as T;
}

const banner = () => byId<HTMLElement>("error-banner");

function playersInProfile(): PlayerInfo[] {
  if (state.profile === "all") return allPlayers;
  return allPlayers.filter((player) => player.position === state.profile);
}

// ---------------------------------------------------------------------------
// Response unpacking
// ---------------------------------------------------------------------------

function unpackOrder(result: ApiResult): OrderRow[] {
  const doc = asObject(result.doc, "response");
  return asArray(doc["total_order"] ?? null, "total_order").map((entry) => {
    const row = asObject(entry, "order entry");
    return {
      rankRaw: asNumber(row["rank"] ?? null, "rank").raw,
      player: asString(row["player"] ?? null, "player"),
      phiRaw: asNumber(row["phi_net"] ?? null, "phi_net").raw,
      tied: asBoolean(row["tied"] ?? null, "tied"),
    };
  });
}

function unpackFlows(result: ApiResult): Map<string, { raw: string; value: number }> {
  const doc = asObject(result.doc, "response");
  const flows = new Map<string, { raw: string; value: number }>();
  for (const entry of asArray(doc["flows"] ?? null, "flows")) {
    const row = asObject(entry, "flow entry");
    const phi = asNumber(row["phi_net"] ?? null, "phi_net");
    flows.set(asString(row["player"] ?? null, "player"),
              { raw: phi.raw, value: phi.value });
  }
  return flows;
}

function unpackPartialOrder(result: ApiResult): { edges: Edge[]; indifferent: Edge[] } {
  const doc = asObject(result.doc, "response");
  const partial = asObject(doc["partial_order"] ?? null, "partial_order");
  const toPairs = (value: unknown): Edge[] =>
    asArray(value as never, "pair list").map((pair) => {
      const [a, b] = asArray(pair, "pair");
      return [asString(a ?? null, "player"), asString(b ?? null, "player")];
    });
  return {
    edges: toPairs(partial["edges"] ?? null),
    indifferent: toPairs(partial["indifferent_pairs"] ?? null),
  };
}

function unpackWeights(result: ApiResult): void {
  const doc = asObject(result.doc, "response");
  const weights = asObject(doc["weights"] ?? null, "weights");
  latestWeights = {};
  latestWeightTokens = {};
  for (const criterion of RANKING_CRITERIA) {
    const weight = asNumber(weights[criterion] ?? null, criterion);
    latestWeights[criterion] = weight.value;
    latestWeightTokens[criterion] = weight.raw;
  }
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

function renderResult(result: ApiResult): void {
  const order = unpackOrder(result);
  const flows = unpackFlows(result);
  const partial = unpackPartialOrder(result);
  unpackWeights(result);

  const currentOrder = order.map((row) => row.player);
  const changes = rankChanges(previousOrder, currentOrder);
  renderRankingTable(byId<HTMLTableSectionElement>("ranking-body"), order,
                     changes, pickPlayer);
  previousOrder = currentOrder;

  const players = [...flows.keys()];
  const layout = layeredLayout(players, partial.edges, {
    score: (id) => flows.get(id)?.value ?? 0,
  });
  const phiByPlayer = new Map<string, string>();
  for (const [player, phi] of flows) phiByPlayer.set(player, phi.raw);
  renderGraph(byId<SVGSVGElement & HTMLElement>("graph") as unknown as SVGSVGElement,
              layout, partial.edges, partial.indifferent, phiByPlayer, pickPlayer);

  byId<HTMLElement>("incomparable-count").textContent = String(
    asNumber(asObject(asObject(result.doc)["partial_order"] ?? null)
             ["incomparable_pairs"] ?? null, "incomparable_pairs").raw);

  if (state.scenario !== "explicit") syncSlidersToWeights();
  updateWeightLabels();
  renderCompareView();
}

function renderCompareView(): void {
  const [leftId, rightId] = state.pinned;
  const pool = new Map(playersInProfile().map((player) => [player.id, player]));
  const left = leftId ? pool.get(leftId) ?? null : null;
  const right = rightId ? pool.get(rightId) ?? null : null;
  const rows = comparisonRows(
    [...RANKING_CRITERIA], left?.indices ?? null, right?.indices ?? null,
    boostedCriteria(latestWeights));
  renderComparison(byId<HTMLElement>("compare"), left?.id ?? null,
                   right?.id ?? null, rows);
}

// ---------------------------------------------------------------------------
// Refresh loop (one settled interaction = one API call, latest wins)
// ---------------------------------------------------------------------------

async function refresh(): Promise<void> {
  let body: string;
  try {
    body = requestBody(state);
  } catch (error) {
    showError(banner(), String(error));
    return;
  }
  try {
    const result = await api.rank(body);
    lastResult = result;
    clearError(banner());
    renderResult(result);
  } catch (error) {
    if (isAbortError(error)) return;
    showError(banner(),
              `ranking request failed: ${(error as Error).message ?? error}` +
              (lastResult ? " (showing last successful result)" : ""));
  }
}

const scheduleRefresh = debounce(() => { void refresh(); }, 250);

// ---------------------------------------------------------------------------
// Controls
// ---------------------------------------------------------------------------

function option(value: string, label = value): HTMLOptionElement {
  const element = document.createElement("option");
  element.value = value;
  element.textContent = label;
  return element;
}

function sliderFor(criterion: CriterionId): HTMLInputElement {
  return byId<HTMLInputElement>(`weight-${criterion}`);
}

function buildSliders(): void {
  const host = byId<HTMLElement>("sliders");
  for (const criterion of RANKING_CRITERIA) {
    const row = document.createElement("label");
    row.className = "slider-row";
    const name = document.createElement("span");
    name.textContent = criterion;
    const input = document.createElement("input");
    input.type = "range";
    input.min = "0";
    input.max = "1000";
    input.step = "1";
    input.id = `weight-${criterion}`;
    input.value = String(Math.round(state.weights[criterion] * 100));
    const share = document.createElement("span");
    share.className = "share";
    share.id = `share-${criterion}`;
    input.addEventListener("input", () => {
      state.weights[criterion] = Number(input.value);
      state.scenario = "explicit";
      byId<HTMLSelectElement>("scenario").value = "explicit";
      scheduleRefresh();
    });
    row.append(name, input, share);
    host.append(row);
  }
}

function syncSlidersToWeights(): void {
  for (const criterion of RANKING_CRITERIA) {
    const weight = latestWeights[criterion];
    if (weight === undefined) continue;
    state.weights[criterion] = weight * 1000;
    sliderFor(criterion).value = String(Math.round(weight * 1000));
  }
}

function updateWeightLabels(): void {
  for (const criterion of RANKING_CRITERIA) {
    byId<HTMLElement>(`share-${criterion}`).textContent =
      latestWeightTokens[criterion] ?? "";
  }
}

function pickPlayer(player: string): void {
  const [a, b] = state.pinned;
  state.pinned = a === null || (a !== null && b !== null) ? [player, null] : [a, player];
  byId<HTMLSelectElement>("pin-a").value = state.pinned[0] ?? "";
  byId<HTMLSelectElement>("pin-b").value = state.pinned[1] ?? "";
  renderCompareView();
}

function rebuildComparePickers(): void {
  const pool = playersInProfile();
  for (const [selectId, slot] of [["pin-a", 0], ["pin-b", 1]] as const) {
    const select = byId<HTMLSelectElement>(selectId);
    select.replaceChildren(option("", "(none)"));
    for (const player of pool) select.append(option(player.id));
    const pinned = state.pinned[slot];
    if (pinned && pool.some((player) => player.id === pinned)) {
      select.value = pinned;
    } else {
      state.pinned[slot] = null;
      select.value = "";
    }
  }
}

function bindControls(): void {
  const profile = byId<HTMLSelectElement>("profile");
  for (const code of PROFILES) profile.append(option(code));
  profile.value = state.profile;
  profile.addEventListener("change", () => {
    state.profile = profile.value;
    rebuildComparePickers();
    renderCompareView();
    scheduleRefresh();
  });

  const scenario = byId<HTMLSelectElement>("scenario");
  scenario.value = state.scenario;
  scenario.addEventListener("change", () => {
    state.scenario = scenario.value as ExplorerState["scenario"];
    scheduleRefresh();
  });

  const functionKind = byId<HTMLSelectElement>("function-kind");
  for (const kind of FUNCTION_KINDS) functionKind.append(option(kind));
  functionKind.value = state.functionKind;
  functionKind.addEventListener("change", () => {
    state.functionKind = functionKind.value;
    scheduleRefresh();
  });

  const alpha = byId<HTMLInputElement>("alpha");
  const beta = byId<HTMLInputElement>("beta");
  const syncQuantiles = (moved: "alpha" | "beta") => {
    const clamped = clampQuantiles(Number(alpha.value), Number(beta.value), moved);
    state.alpha = clamped.alpha;
    state.beta = clamped.beta;
    alpha.value = String(clamped.alpha);
    beta.value = String(clamped.beta);
    byId<HTMLElement>("alpha-value").textContent = `${clamped.alpha}%`;
    byId<HTMLElement>("beta-value").textContent = `${clamped.beta}%`;
    scheduleRefresh();
  };
  alpha.value = String(state.alpha);
  beta.value = String(state.beta);
  alpha.addEventListener("input", () => syncQuantiles("alpha"));
  beta.addEventListener("input", () => syncQuantiles("beta"));
  byId<HTMLElement>("alpha-value").textContent = `${state.alpha}%`;
  byId<HTMLElement>("beta-value").textContent = `${state.beta}%`;

  for (const [selectId, slot] of [["pin-a", 0], ["pin-b", 1]] as const) {
    const select = byId<HTMLSelectElement>(selectId);
    select.addEventListener("change", () => {
      state.pinned[slot] = select.value || null;
      renderCompareView();
    });
  }

  buildSliders();
}

async function start(): Promise<void> {
  bindControls();
  try {
    const result = await api.players();
    allPlayers = asArray(asObject(result.doc)["players"] ?? null, "players")
      .map((entry) => {
        const row = asObject(entry, "player");
        const indices: Record<string, RawNumber> = {};
        const rawIndices = asObject(row["indices"] ?? null, "indices");
        for (const [criterion, value] of Object.entries(rawIndices)) {
          indices[criterion] = asNumber(value, criterion);
        }
        return {
          id: asString(row["player_id"] ?? null, "player_id"),
          position: asString(row["position"] ?? null, "position"),
          indices,
        };
      });
    rebuildComparePickers();
    clearError(banner());
  } catch (error) {
    showError(banner(), `cannot load players: ${(error as Error).message ?? error}`);
  }
  void refresh();
}

void start();

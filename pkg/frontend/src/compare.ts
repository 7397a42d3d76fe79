/** Criterion-by-criterion head-to-head table between two pinned players. */

import { RawNumber } from "./rawjson.js";

export interface ComparisonRow {
  criterion: string;
  left: RawNumber | null;
  right: RawNumber | null;
  winner: "left" | "right" | "tie" | "none";
  boosted: boolean;
}

export function comparisonRows(criteria: readonly string[],
                               left: Record<string, RawNumber> | null,
                               right: Record<string, RawNumber> | null,
                               boosted: ReadonlySet<string>): ComparisonRow[] {
  return criteria.map((criterion) => {
    const a = left?.[criterion] ?? null;
    const b = right?.[criterion] ?? null;
    let winner: ComparisonRow["winner"] = "none";
    if (a !== null && b !== null) {
      winner = a.value === b.value ? "tie" : (a.value > b.value ? "left" : "right");
    }
    return { criterion, left: a, right: b, winner, boosted: boosted.has(criterion) };
  });
}

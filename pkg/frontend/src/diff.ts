/** Rank movement between two orderings; null marks players new to the list. */

export function rankChanges(previous: readonly string[],
                            current: readonly string[]): Map<string, number | null> {
  const previousRank = new Map<string, number>();
  previous.forEach((player, index) => previousRank.set(player, index + 1));
  const changes = new Map<string, number | null>();
  current.forEach((player, index) => {
    const before = previousRank.get(player);
    changes.set(player, before === undefined ? null : before - (index + 1));
  });
  return changes;
}

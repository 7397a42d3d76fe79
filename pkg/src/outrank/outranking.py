"""Partial-order verdicts from flow pairs and the covering-edge digraph."""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np

from .exceptions import InvalidInputError
from .flows import FlowResult


class Verdict(enum.Enum):
    """Pairwise outcome for an ordered pair of alternatives.

    DOMINATED marks the reverse direction of a PREFERRED pair, so that
    INDIFFERENT and INCOMPARABLE are strictly symmetric relations.
    """

    SELF = "self"
    PREFERRED = "preferred"
    DOMINATED = "dominated"
    INDIFFERENT = "indifferent"
    INCOMPARABLE = "incomparable"


_CODE = {
    Verdict.SELF: 0,
    Verdict.PREFERRED: 1,
    Verdict.DOMINATED: 2,
    Verdict.INDIFFERENT: 3,
    Verdict.INCOMPARABLE: 4,
}
_BY_CODE = {code: verdict for verdict, code in _CODE.items()}


@dataclass(frozen=True)
class OutrankingRelation:
    """Pairwise verdicts plus, once reduced, the covering edges of the partial order."""

    alternatives: tuple[str, ...]
    verdict_codes: np.ndarray
    edges: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(str(a) for a in self.alternatives))
        n = len(self.alternatives)
        codes = np.array(self.verdict_codes, dtype=np.int8)
        if codes.shape != (n, n):
            raise InvalidInputError("verdict table must be square, one row per alternative")
        if np.any(codes.diagonal() != _CODE[Verdict.SELF]):
            raise InvalidInputError("diagonal verdicts must be SELF")
        preferred = codes == _CODE[Verdict.PREFERRED]
        if not np.array_equal(preferred.T, codes == _CODE[Verdict.DOMINATED]):
            raise InvalidInputError("each PREFERRED entry needs a DOMINATED transpose")
        for verdict in (Verdict.INDIFFERENT, Verdict.INCOMPARABLE):
            mask = codes == _CODE[verdict]
            if not np.array_equal(mask, mask.T):
                raise InvalidInputError(f"{verdict.value} verdicts must be symmetric")
        codes.setflags(write=False)
        object.__setattr__(self, "verdict_codes", codes)
        object.__setattr__(self, "edges", tuple((str(u), str(v)) for u, v in self.edges))

    def index_of(self, alternative: str) -> int:
        try:
            return self.alternatives.index(alternative)
        except ValueError:
            raise InvalidInputError(f"unknown alternative {alternative!r}") from None

    def verdict(self, a: str, b: str) -> Verdict:
        return _BY_CODE[int(self.verdict_codes[self.index_of(a), self.index_of(b)])]

    def preferred_pairs(self) -> list[tuple[str, str]]:
        """Ordered (winner, loser) pairs, before any reduction."""
        rows, cols = np.nonzero(self.verdict_codes == _CODE[Verdict.PREFERRED])
        return [(self.alternatives[i], self.alternatives[j]) for i, j in zip(rows, cols)]

    def indifferent_pairs(self) -> list[tuple[str, str]]:
        """Unordered indifferent pairs, each listed once."""
        rows, cols = np.nonzero(self.verdict_codes == _CODE[Verdict.INDIFFERENT])
        return [(self.alternatives[i], self.alternatives[j])
                for i, j in zip(rows, cols) if i < j]

    def incomparable_pairs(self) -> list[tuple[str, str]]:
        """Unordered mutually incomparable pairs, each listed once."""
        rows, cols = np.nonzero(self.verdict_codes == _CODE[Verdict.INCOMPARABLE])
        return [(self.alternatives[i], self.alternatives[j])
                for i, j in zip(rows, cols) if i < j]


def promethee_i_relation(result: FlowResult) -> OutrankingRelation:
    """Pairwise verdicts from exact comparisons of the computed flow pairs.

    a beats b when its positive flow is no smaller and its negative flow no
    larger, with at least one strict; equal flow pairs are indifferent; flows
    pointing in opposite directions leave the pair incomparable.
    """
    n = len(result.alternatives)
    codes = np.zeros((n, n), dtype=np.int8)
    plus, minus = result.phi_plus, result.phi_minus
    for i in range(n):
        for j in range(i + 1, n):
            if plus[i] == plus[j] and minus[i] == minus[j]:
                verdict_ij = verdict_ji = _CODE[Verdict.INDIFFERENT]
            elif plus[i] >= plus[j] and minus[i] <= minus[j]:
                verdict_ij = _CODE[Verdict.PREFERRED]
                verdict_ji = _CODE[Verdict.DOMINATED]
            elif plus[j] >= plus[i] and minus[j] <= minus[i]:
                verdict_ij = _CODE[Verdict.DOMINATED]
                verdict_ji = _CODE[Verdict.PREFERRED]
            else:
                verdict_ij = verdict_ji = _CODE[Verdict.INCOMPARABLE]
            codes[i, j] = verdict_ij
            codes[j, i] = verdict_ji
    return OutrankingRelation(result.alternatives, codes)


def _check_nodes_edges(nodes, edges):
    node_list = [str(n) for n in nodes]
    if len(set(node_list)) != len(node_list):
        raise InvalidInputError("node ids must be pairwise distinct")
    known = set(node_list)
    edge_list = []
    seen = set()
    for u, v in edges:
        u, v = str(u), str(v)
        if u not in known or v not in known:
            raise InvalidInputError(f"edge ({u!r}, {v!r}) references an unknown node")
        if (u, v) in seen:
            continue
        seen.add((u, v))
        edge_list.append((u, v))
    return node_list, edge_list


def _topological_order(nodes, edges):
    """Kahn's algorithm; returns None when the graph has a cycle."""
    indegree = {u: 0 for u in nodes}
    outgoing = {u: [] for u in nodes}
    for u, v in edges:
        outgoing[u].append(v)
        indegree[v] += 1
    ready = [u for u in nodes if indegree[u] == 0]
    order = []
    while ready:
        node = ready.pop()
        order.append(node)
        for nxt in outgoing[node]:
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                ready.append(nxt)
    if len(order) != len(nodes):
        return None
    return order


def build_digraph(relation: OutrankingRelation) -> list[tuple[str, str]]:
    """All (winner, loser) edges of the relation, checked to be acyclic.

    Strict flow dominance composes transitively, so a cycle is impossible for
    verdicts produced by ``promethee_i_relation``; hitting one means internal
    state was corrupted and is treated as fatal.
    """
    edges = relation.preferred_pairs()
    if _topological_order(list(relation.alternatives), edges) is None:
        raise AssertionError("outranking verdicts produced a cycle; invariant violated")
    return edges


def transitive_reduction(nodes: Sequence[str],
                         edges: Iterable[tuple[str, str]]) -> list[tuple[str, str]]:
    """Unique minimal edge subset of a DAG with unchanged reachability.

    An edge (u, v) is redundant exactly when v can be reached from another
    successor of u. Cyclic input is rejected.
    """
    node_list, edge_list = _check_nodes_edges(nodes, edges)
    order = _topological_order(node_list, edge_list)
    if order is None:
        raise InvalidInputError("transitive reduction requires an acyclic graph")
    successors = {u: [] for u in node_list}
    for u, v in edge_list:
        successors[u].append(v)
    # Descendants in reverse topological order: every successor is finished
    # before the nodes pointing at it.
    descendants: dict[str, set[str]] = {}
    for node in reversed(order):
        reach = set(successors[node])
        for nxt in successors[node]:
            reach |= descendants[nxt]
        descendants[node] = reach
    kept = []
    for u, v in edge_list:
        via_other = any(w != v and v in descendants[w] for w in successors[u])
        if not via_other:
            kept.append((u, v))
    return kept


def with_reduced_edges(relation: OutrankingRelation) -> OutrankingRelation:
    """Attach the covering edges (transitive reduction of the preferred pairs)."""
    reduced = transitive_reduction(relation.alternatives, build_digraph(relation))
    return replace(relation, edges=tuple(reduced))


def longest_path_depths(nodes: Sequence[str],
                        edges: Iterable[tuple[str, str]]) -> dict[str, int]:
    """Layer of each node: length of the longest edge path reaching it from a source."""
    node_list, edge_list = _check_nodes_edges(nodes, edges)
    order = _topological_order(node_list, edge_list)
    if order is None:
        raise InvalidInputError("depth layering requires an acyclic graph")
    depth = {u: 0 for u in node_list}
    incoming = {u: [] for u in node_list}
    for u, v in edge_list:
        incoming[v].append(u)
    for node in order:
        if incoming[node]:
            depth[node] = 1 + max(depth[u] for u in incoming[node])
    return depth


def to_dot(relation: OutrankingRelation, flow_result: FlowResult,
           max_depth: int | None = None) -> str:
    """Graphviz text for the reduced relation.

    Nodes carry the alternative id and its net flow (4 decimals); covering
    preferred pairs become solid arrows, indifferent pairs dashed undirected
    links. ``max_depth`` keeps only nodes within the first ``max_depth``
    layers of the covering-edge DAG, mirroring a "top part of the graph" view.
    """
    if max_depth is not None and max_depth < 1:
        raise InvalidInputError("max_depth must be at least 1")
    depths = longest_path_depths(relation.alternatives, relation.edges)
    if max_depth is None:
        visible = set(relation.alternatives)
    else:
        visible = {node for node, d in depths.items() if d < max_depth}

    def escape(name: str) -> str:
        return name.replace("\\", "\\\\").replace('"', '\\"')

    def quote(name: str) -> str:
        return f'"{escape(name)}"'

    lines = ["digraph outranking {", "  rankdir=TB;", "  node [shape=box];"]
    for alt in relation.alternatives:
        if alt not in visible:
            continue
        phi = flow_result.phi_net[flow_result.index_of(alt)]
        label = f'"{escape(alt)}\\nphi = {phi:.4f}"'
        lines.append(f"  {quote(alt)} [label={label}];")
    for u, v in relation.edges:
        if u in visible and v in visible:
            lines.append(f"  {quote(u)} -> {quote(v)};")
    for a, b in relation.indifferent_pairs():
        if a in visible and b in visible:
            lines.append(f"  {quote(a)} -> {quote(b)} [dir=none, style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"

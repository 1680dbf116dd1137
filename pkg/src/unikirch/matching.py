"""Exact maximum matchings for forests and unicyclic graphs.

Forests are solved by greedy leaf matching (match a leaf to its
neighbor, delete both), which is exact on trees.  A unicyclic graph
splits on one cycle edge e = xy: its matching number is
max(m(G - e), 1 + m(G - x - y)), and both subproblems are forests.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum

from .graph import Graph, is_connected, without_vertices


@dataclass(frozen=True)
class MatchingResult:
    size: int
    edges: frozenset[tuple[int, int]]
    saturated: tuple[bool, ...]

    def edge_lines(self) -> list[str]:
        """The witness in the graph file format's edge syntax."""
        return [f"{u} {v}" for u, v in sorted(self.edges)]


class PerfectMatchingClass(Enum):
    """Structure classes of unicyclic graphs with a perfect matching."""

    CYCLE = "cycle"
    PENDANTS_ONLY = "pendants-on-cycle"
    HAS_PENDANT_P2 = "has-pendant-p2"


def _forest_matching(adj: dict[int, set[int]]) -> set[tuple[int, int]]:
    """Greedy leaf matching on a forest given as an adjacency dict.

    Raises ValueError if the input contains a cycle.
    """
    adj = {v: set(nb) for v, nb in adj.items()}
    matched: set[tuple[int, int]] = set()
    gone: set[int] = set()
    heap = [v for v, nb in adj.items() if len(nb) == 1]
    heapq.heapify(heap)
    while heap:
        u = heapq.heappop(heap)
        if u in gone or len(adj[u]) != 1:
            continue
        (v,) = adj[u]
        matched.add((u, v) if u < v else (v, u))
        for x in (u, v):
            gone.add(x)
            for y in adj[x]:
                if y not in gone:
                    adj[y].discard(x)
                    if len(adj[y]) == 1:
                        heapq.heappush(heap, y)
            adj[x] = set()
    if any(adj[v] for v in adj):
        raise ValueError("input is not a forest")
    return matched


def _has_cycle(adj: dict[int, set[int]]) -> bool:
    edges = sum(len(nb) for nb in adj.values()) // 2
    seen: set[int] = set()
    components = 0
    for s in adj:
        if s in seen:
            continue
        components += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for w in adj[x]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return edges > len(adj) - components


def _matching_edges(adj: dict[int, set[int]]) -> set[tuple[int, int]]:
    """Maximum matching of a forest or a graph with at most one cycle
    per component (adjacency-dict form, labels preserved)."""
    if not _has_cycle(adj):
        return _forest_matching(adj)
    deg = {v: len(nb) for v, nb in adj.items()}
    queue = [v for v, d in deg.items() if d == 1]
    alive = {v: True for v in adj}
    while queue:
        u = queue.pop()
        if not alive[u]:
            continue
        alive[u] = False
        for w in adj[u]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    core = {v for v in adj if alive[v] and deg[v] >= 2}
    x, y = min(
        (a, b) if a < b else (b, a) for a in core for b in adj[a] if b in core
    )
    without_edge = {v: set(nb) for v, nb in adj.items()}
    without_edge[x].discard(y)
    without_edge[y].discard(x)
    m1 = _forest_matching(without_edge)
    without_pair = {
        v: {w for w in nb if w not in (x, y)}
        for v, nb in adj.items()
        if v not in (x, y)
    }
    m2 = _forest_matching(without_pair)
    if len(m1) >= 1 + len(m2):
        return m1
    m2.add((x, y))
    return m2


def _result(g: Graph, edges: set[tuple[int, int]]) -> MatchingResult:
    sat = [False] * g.n
    for u, v in edges:
        sat[u] = True
        sat[v] = True
    return MatchingResult(len(edges), frozenset(edges), tuple(sat))


def matching_number_tree(g: Graph) -> MatchingResult:
    """Maximum matching of a tree by greedy leaf matching."""
    if g.edge_count != g.n - 1 or not is_connected(g):
        raise ValueError("expected a tree")
    return _result(g, _forest_matching(g.adjacency_dict()))


def matching_number(g: Graph) -> MatchingResult:
    """Maximum matching of a forest or a unicyclic graph."""
    if g.edge_count <= max(g.n - 1, 0):
        return _result(g, _forest_matching(g.adjacency_dict()))
    if g.edge_count == g.n and is_connected(g):
        return _result(g, _matching_edges(g.adjacency_dict()))
    raise ValueError("expected a forest or a unicyclic graph")


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and matching_number(g).size * 2 == g.n


def reduce_to_g0(g: Graph) -> tuple[Graph, int]:
    """Delete pendants that some maximum matching leaves unsaturated,
    until the order drops to twice the matching number.

    The matching number is preserved at every step, so the result has a
    perfect matching.  Cycles and graphs already of order 2m pass
    through unchanged.  When several pendants qualify the lowest vertex
    id goes first.
    """
    if g.edge_count != g.n or not is_connected(g):
        raise ValueError("expected a unicyclic graph")
    m = matching_number(g).size
    if g.n == 2 * m or all(g.degree(v) == 2 for v in range(g.n)):
        return g, 0
    adj = g.adjacency_dict()
    size = g.n
    while size > 2 * m:
        chosen = None
        for u in sorted(v for v, nb in adj.items() if len(nb) == 1):
            rest = {v: nb - {u} for v, nb in adj.items() if v != u}
            if len(_matching_edges(rest)) == m:
                chosen = u
                break
        if chosen is None:
            raise RuntimeError("no deletable pendant found")
        for w in adj[chosen]:
            adj[w].discard(chosen)
        del adj[chosen]
        size -= 1
    keep = sorted(adj)
    relabel = {v: i for i, v in enumerate(keep)}
    edges = frozenset(
        (relabel[v], relabel[w]) for v in keep for w in adj[v] if v < w
    )
    return Graph(len(keep), edges), g.n - 2 * m


def reduce_orders_diagnostic(g: Graph) -> tuple[Graph, ...]:
    """Explore every deletion order of the reduction and return the
    distinct end graphs (small inputs only; exponential by design)."""
    if g.edge_count != g.n or not is_connected(g):
        raise ValueError("expected a unicyclic graph")
    m = matching_number(g).size
    if g.n == 2 * m or all(g.degree(v) == 2 for v in range(g.n)):
        return (g,)

    results: dict[object, Graph] = {}

    def final_graph(adj: dict[int, set[int]]) -> Graph:
        keep = sorted(adj)
        relabel = {v: i for i, v in enumerate(keep)}
        edges = frozenset(
            (relabel[v], relabel[w]) for v in keep for w in adj[v] if v < w
        )
        return Graph(len(keep), edges)

    def explore(adj: dict[int, set[int]], size: int):
        if size == 2 * m:
            from .enumeration import canonical_code

            g0 = final_graph(adj)
            results[canonical_code(g0)] = g0
            return
        for u in sorted(v for v, nb in adj.items() if len(nb) == 1):
            rest = {v: nb - {u} for v, nb in adj.items() if v != u}
            if len(_matching_edges(rest)) == m:
                explore(rest, size - 1)

    explore(g.adjacency_dict(), g.n)
    return tuple(results[c] for c in sorted(results))


def classify_2m_m(g: Graph) -> PerfectMatchingClass:
    """Classify a unicyclic graph with a perfect matching: the cycle,
    pendants-on-cycle (maximum degree three), or a pendant P2 present."""
    if g.edge_count != g.n or not is_connected(g):
        raise ValueError("expected a unicyclic graph")
    if not has_perfect_matching(g):
        raise ValueError("expected a graph with a perfect matching")
    degrees = [g.degree(v) for v in range(g.n)]
    if all(d == 2 for d in degrees):
        return PerfectMatchingClass.CYCLE
    for v in range(g.n):
        if degrees[v] == 1 and degrees[g.adjacency[v][0]] == 2:
            return PerfectMatchingClass.HAS_PENDANT_P2
    return PerfectMatchingClass.PENDANTS_ONLY


def unsaturated_pendant_deletion_keeps_size(g: Graph, pendant: int) -> bool:
    """True when deleting the pendant keeps the matching number."""
    if g.degree(pendant) != 1:
        raise ValueError(f"vertex {pendant} is not a pendant")
    before = matching_number(g).size
    after = matching_number(without_vertices(g, [pendant])).size
    return after == before

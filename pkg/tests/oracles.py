"""Brute-force oracles, kept independent of the library's own algorithms.

Everything here is exhaustive and exponential on purpose: distances by
Floyd-Warshall, matchings by edge-subset search, isomorphism classes of
labeled unicyclic graphs by orbit closure under all vertex permutations,
trees by Prufer decoding.
"""

from __future__ import annotations

from itertools import combinations, permutations


def floyd_warshall(n: int, edges) -> list[list[float]]:
    inf = float("inf")
    dist = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in edges:
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == inf:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def brute_force_matching_size(edges) -> int:
    """Maximum number of pairwise disjoint edges, by branching."""
    edges = list(edges)

    def best(idx: int, used: frozenset) -> int:
        if idx == len(edges):
            return 0
        remaining = len(edges) - idx
        u, v = edges[idx]
        skip = best(idx + 1, used)
        if skip >= remaining:
            return skip
        if u in used or v in used:
            return skip
        return max(skip, 1 + best(idx + 1, used | {u, v}))

    return best(0, frozenset())


def _connected_subset(n: int, edge_list) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    merged = 0
    for u, v in edge_list:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            merged += 1
    return merged == n - 1


def labeled_unicyclic_classes(n: int) -> list[tuple[tuple[int, int], ...]]:
    """One labeled representative per isomorphism class of connected
    graphs with n vertices and n edges, by permutation orbit closure."""
    pairs = list(combinations(range(n), 2))
    pair_index = {p: i for i, p in enumerate(pairs)}
    perms = list(permutations(range(n)))
    perm_edge_maps = []
    for perm in perms:
        table = []
        for u, v in pairs:
            a, b = perm[u], perm[v]
            table.append(pair_index[(a, b) if a < b else (b, a)])
        perm_edge_maps.append(table)
    seen: set[int] = set()
    reps = []
    for subset in combinations(range(len(pairs)), n):
        mask = 0
        for i in subset:
            mask |= 1 << i
        if mask in seen:
            continue
        edge_list = [pairs[i] for i in subset]
        if not _connected_subset(n, edge_list):
            continue
        reps.append(tuple(edge_list))
        for table in perm_edge_maps:
            pm = 0
            for i in subset:
                pm |= 1 << table[i]
            seen.add(pm)
    return reps


def prufer_decode(seq: tuple[int, ...]) -> list[tuple[int, int]]:
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x) if leaf < x else (x, leaf))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = leaves
    edges.append((u, v) if u < v else (v, u))
    return edges


def all_labeled_trees(n: int):
    """Every labeled tree on n vertices via Prufer sequences."""
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return
    from itertools import product

    for seq in product(range(n), repeat=n - 2):
        yield prufer_decode(seq)


def rooted_tree_classes_bruteforce(n: int) -> int:
    """Number of rooted trees on n vertices up to rooted isomorphism,
    by canonical form under all permutations fixing the root."""
    perms = [p for p in permutations(range(n)) if p[0] == 0]
    classes = set()
    for edges in all_labeled_trees(n):
        for root in range(n):
            swap = {root: 0, 0: root}
            relabeled = []
            for u, v in edges:
                a, b = swap.get(u, u), swap.get(v, v)
                relabeled.append((a, b) if a < b else (b, a))
            best = None
            for p in perms:
                cand = tuple(
                    sorted((p[u], p[v]) if p[u] < p[v] else (p[v], p[u]) for u, v in relabeled)
                )
                if best is None or cand < best:
                    best = cand
            classes.add(best)
    return len(classes)

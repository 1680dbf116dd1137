"""Exact effective resistances and Kirchhoff indices.

Three independent routes are provided and cross-checked by the test
suite:

* a grounded-Laplacian linear solve over rationals,
* spanning-tree / separating-forest counting via integer determinants,
* the series closed form on a unicyclic decomposition (tree distance
  into the cycle, cycle resistance d(k-d)/k, tree distance out).

The unicyclic route is the hot path for enumeration sweeps; the two
matrix routes serve as oracles and as the general-graph fallback.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import (
    DisconnectedError,
    Graph,
    UnicyclicDecomposition,
    decompose_unicyclic,
    is_connected,
)


def r_cycle(n: int, d: int) -> Fraction:
    """Resistance between cycle vertices d apart on C_n: d(n-d)/n."""
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    if not 0 <= d <= n:
        raise ValueError(f"cycle gap {d} out of range for C_{n}")
    return Fraction(d * (n - d), n)


def kfv_cycle(n: int) -> Fraction:
    """Resistance row sum at any vertex of C_n: (n^2 - 1)/6."""
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Fraction(n * n - 1, 6)


def kf_cycle(n: int) -> Fraction:
    """Kirchhoff index of C_n: (n^3 - n)/12."""
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Fraction(n**3 - n, 12)


def _laplacian_int(g: Graph) -> list[list[int]]:
    lap = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    return lap


def _det_int(m: list[list[int]]) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _minor(m: list[list[int]], drop: set[int]) -> list[list[int]]:
    keep = [i for i in range(len(m)) if i not in drop]
    return [[m[i][j] for j in keep] for i in keep]


def spanning_tree_count(g: Graph) -> int:
    """Number of spanning trees (0 when disconnected)."""
    if g.n == 0:
        return 0
    if g.n == 1:
        return 1
    return _det_int(_minor(_laplacian_int(g), {0}))


def separating_forest_count(g: Graph, u: int, v: int) -> int:
    """Spanning 2-forests with u and v in different components."""
    if u == v:
        raise ValueError("endpoints must differ")
    return _det_int(_minor(_laplacian_int(g), {u, v}))


def resistance_forest(g: Graph, u: int, v: int) -> Fraction:
    """Effective resistance as separating forests / spanning trees."""
    if u == v:
        return Fraction(0)
    trees = spanning_tree_count(g)
    if trees == 0:
        raise DisconnectedError("resistance of a disconnected graph")
    return Fraction(separating_forest_count(g, u, v), trees)


def _solve(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination over rationals; raises on a singular system."""
    n = len(a)
    a = [row[:] for row in a]
    b = b[:]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise DisconnectedError("singular Laplacian system")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            b[col], b[pivot] = b[pivot], b[col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] == 0:
                continue
            f = a[r][col] * inv
            for c in range(col, n):
                a[r][c] -= f * a[col][c]
            b[r] -= f * b[col]
    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        s = b[r]
        for c in range(r + 1, n):
            s -= a[r][c] * x[c]
        x[r] = s / a[r][r]
    return x


def resistance_laplacian(g: Graph, u: int, v: int, ground: int = 0) -> Fraction:
    """Effective resistance by a grounded-Laplacian solve.

    One vertex is grounded, a unit current is injected at u and drawn
    at v, and the potential difference is the resistance.  The result
    is independent of the grounding choice.
    """
    if not (0 <= u < g.n and 0 <= v < g.n and 0 <= ground < g.n):
        raise ValueError("vertex out of range")
    if u == v:
        return Fraction(0)
    if not is_connected(g):
        raise DisconnectedError("resistance of a disconnected graph")
    idx = [w for w in range(g.n) if w != ground]
    pos = {w: i for i, w in enumerate(idx)}
    lap = _laplacian_int(g)
    a = [[Fraction(lap[r][c]) for c in idx] for r in idx]
    b = [Fraction(0)] * len(idx)
    if u != ground:
        b[pos[u]] = Fraction(1)
    if v != ground:
        b[pos[v]] = Fraction(-1)
    x = _solve(a, b)
    pot_u = x[pos[u]] if u != ground else Fraction(0)
    pot_v = x[pos[v]] if v != ground else Fraction(0)
    return pot_u - pot_v


def resistance_unicyclic(dec: UnicyclicDecomposition, u: int, v: int) -> Fraction:
    """Effective resistance from a unicyclic decomposition.

    Same branch: the connecting path is unique, so the resistance is
    the hop distance.  Different branches: tree distance to the first
    root, plus the cycle resistance between the roots, plus tree
    distance from the second root.
    """
    if u == v:
        return Fraction(0)
    bu = dec.branch_index[u]
    bv = dec.branch_index[v]
    if bu == bv:
        return Fraction(dec.branch_distance(u, v))
    k = len(dec.cycle)
    gap = abs(bu - bv)
    return Fraction(dec.depths[u] + dec.depths[v]) + r_cycle(k, gap)


@dataclass(frozen=True)
class ResistanceMatrix:
    n: int
    rows: tuple[tuple[Fraction, ...], ...]

    def r(self, u: int, v: int) -> Fraction:
        return self.rows[u][v]

    def row_sum(self, u: int) -> Fraction:
        return sum(self.rows[u], Fraction(0))


def format_resistance_matrix(mat: ResistanceMatrix) -> str:
    """n, then the row-major upper triangle as p/q tokens, one row per line."""
    lines = [str(mat.n)]
    for u in range(mat.n - 1):
        lines.append(" ".join(str(mat.rows[u][v]) for v in range(u + 1, mat.n)))
    return "\n".join(lines) + "\n"


def resistance_matrix_dense(g: Graph, ground: int = 0) -> ResistanceMatrix:
    """All-pairs resistances from the inverse of the grounded Laplacian."""
    if not is_connected(g):
        raise DisconnectedError("resistance matrix of a disconnected graph")
    n = g.n
    if n == 1:
        return ResistanceMatrix(1, ((Fraction(0),),))
    idx = [w for w in range(n) if w != ground]
    lap = _laplacian_int(g)
    a = [[Fraction(lap[r][c]) for c in idx] for r in idx]
    m = len(idx)
    inv = [[Fraction(i == j) for j in range(m)] for i in range(m)]
    for col in range(m):
        pivot = next(r for r in range(col, m) if a[r][col] != 0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            inv[col], inv[pivot] = inv[pivot], inv[col]
        f = 1 / a[col][col]
        a[col] = [x * f for x in a[col]]
        inv[col] = [x * f for x in inv[col]]
        for r in range(m):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    full = [[Fraction(0)] * n for _ in range(n)]
    for i, w in enumerate(idx):
        for j, x in enumerate(idx):
            full[w][x] = inv[i][j]
    rows = [[Fraction(0)] * n for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            r = full[u][u] + full[v][v] - 2 * full[u][v]
            rows[u][v] = r
            rows[v][u] = r
    return ResistanceMatrix(n, tuple(tuple(row) for row in rows))


def resistance_matrix_unicyclic(dec: UnicyclicDecomposition) -> ResistanceMatrix:
    n = dec.n
    k = len(dec.cycle)
    gap_r = [r_cycle(k, d) for d in range(k)]
    depths = dec.depths
    bidx = dec.branch_index
    branch_dist: list[dict[int, dict[int, int]]] = []
    for i, br in enumerate(dec.branches):
        adj = dec.branch_adjacency[i]
        table: dict[int, dict[int, int]] = {}
        for s in br.vertices:
            dist = {s: 0}
            stack = [s]
            while stack:
                x = stack.pop()
                for w in adj[x]:
                    if w not in dist:
                        dist[w] = dist[x] + 1
                        stack.append(w)
            table[s] = dist
        branch_dist.append(table)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for u in range(n):
        bu = bidx[u]
        for v in range(u + 1, n):
            bv = bidx[v]
            if bu == bv:
                r = Fraction(branch_dist[bu][u][v])
            else:
                r = Fraction(depths[u] + depths[v]) + gap_r[abs(bu - bv)]
            rows[u][v] = r
            rows[v][u] = r
    return ResistanceMatrix(n, tuple(tuple(row) for row in rows))


def resistance_matrix(g: Graph) -> ResistanceMatrix:
    """All-pairs resistances; unicyclic graphs take the closed-form route."""
    if g.edge_count == g.n and is_connected(g):
        return resistance_matrix_unicyclic(decompose_unicyclic(g))
    return resistance_matrix_dense(g)


def vertex_sums(g: Graph) -> list[Fraction]:
    mat = resistance_matrix(g)
    return [mat.row_sum(u) for u in range(g.n)]


def kirchhoff_index(g: Graph) -> Fraction:
    """Sum of effective resistances over unordered vertex pairs."""
    mat = resistance_matrix(g)
    total = Fraction(0)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            total += mat.rows[u][v]
    return total


def kirchhoff_index_dense(g: Graph) -> Fraction:
    """Kirchhoff index forced through the matrix route (oracle use)."""
    mat = resistance_matrix_dense(g)
    total = Fraction(0)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            total += mat.rows[u][v]
    return total


def kirchhoff_vertex_sum(g: Graph, u: int) -> Fraction:
    """Sum of resistances from u to every vertex."""
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range")
    return resistance_matrix(g).row_sum(u)


def kf_identified(
    kf_g: Fraction,
    kf_h: Fraction,
    kf_g_u: Fraction,
    kf_h_w: Fraction,
    size_g: int,
    size_h: int,
) -> Fraction:
    """Kirchhoff index of the vertex-identification of two graphs.

    Kf(GuH) = Kf(G) + Kf(H) + (|H|-1) Kf_G(u) + (|G|-1) Kf_H(w).
    """
    if size_g < 1 or size_h < 1:
        raise ValueError("graph sizes must be at least 1")
    return kf_g + kf_h + (size_h - 1) * kf_g_u + (size_g - 1) * kf_h_w

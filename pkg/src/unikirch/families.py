"""Constructors for the extremal unicyclic families and their closed forms.

U(k,t,i,j) is the cycle C_k with one pendant vertex on each of t
consecutive cycle vertices, plus i pendant vertices and j two-vertex
paths attached to a central vertex of the chosen t.  Unm(n,m) is the
hub family U(5, 1, n-2m, m-3).  Labels are fixed so every constructor
is reproducible byte for byte:

* cycle vertices 0..k-1, the chosen vertices being 0..t-1;
* the pendant of chosen vertex c is k + c;
* the central vertex is (t-1)//2 for t >= 1 and cycle vertex 0 for
  t = 0 (for even t the other central candidate gives an isomorphic
  graph);
* the i pendants are k+t .. k+t+i-1; each two-vertex path contributes
  (near, far) = (k+t+i+2p, k+t+i+2p+1) with the near vertex on the
  central vertex.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph
from .rational import format_rational
from .resistance import kf_cycle, kirchhoff_index, vertex_sums


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    edges = frozenset(
        ((i, i + 1) if i + 1 < n else (0, n - 1)) for i in range(n)
    )
    return Graph(n, edges)


def make_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("paths need at least 1 vertex")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def central_vertex(k: int, t: int) -> int:
    """The attachment vertex of U(k,t,i,j): (t-1)//2, or 0 when t = 0."""
    return (t - 1) // 2 if t >= 1 else 0


def make_ukt(k: int, t: int, i: int, j: int) -> Graph:
    """Build U(k,t,i,j) on k+t+i+2j vertices with the canonical labels."""
    if k < 3:
        raise ValueError("cycle length must be at least 3")
    if not 0 <= t <= k:
        raise ValueError(f"pendant arc length t={t} must satisfy 0 <= t <= k")
    if i < 0 or j < 0:
        raise ValueError("pendant and path counts must be non-negative")
    edges = set(make_cycle(k).edges)
    for c in range(t):
        edges.add((c, k + c))
    hub = central_vertex(k, t)
    nxt = k + t
    for _ in range(i):
        edges.add((hub, nxt))
        nxt += 1
    for _ in range(j):
        near, far = nxt, nxt + 1
        edges.add((hub, near))
        edges.add((near, far))
        nxt += 2
    return Graph(k + t + i + 2 * j, frozenset(edges))


def make_unm(n: int, m: int) -> Graph:
    """Build Unm(n,m) = U(5, 1, n-2m, m-3)."""
    if m < 3 or n < 2 * m:
        raise ValueError(f"Unm needs 3 <= m <= n/2, got n={n}, m={m}")
    return make_ukt(5, 1, n - 2 * m, m - 3)


def hub_vertex_unm() -> int:
    """The maximum-degree vertex of Unm(n,m) under the canonical labels."""
    return 0


def arc_pair_resistance_sum(k: int, t: int) -> Fraction:
    """Sum of pairwise cycle resistances over t consecutive vertices of
    C_k: t(t-1)(t+1)(2k-t) / (12k)."""
    if k < 3 or not 0 <= t <= k:
        raise ValueError(f"invalid arc parameters k={k}, t={t}")
    return Fraction(t * (t - 1) * (t + 1) * (2 * k - t), 12 * k)


def ukt_central_vertex_sum(k: int, t: int) -> Fraction:
    """Resistance row sum at the central vertex of U(k,t) in closed form."""
    if k < 3 or not 1 <= t <= k:
        raise ValueError(f"invalid parameters k={k}, t={t}")
    if t % 2 == 1:
        return Fraction(2 * k * k + 3 * t * t + 12 * t - 5, 12) - Fraction(t**3 - t, 12 * k)
    return Fraction(2 * k * k + 3 * t * t + 12 * t - 2, 12) - Fraction(t**3 + 2 * t, 12 * k)


def ukt_kf_closed_form(k: int, t: int) -> Fraction:
    """Kirchhoff index of U(k,t) = U(k,t,0,0) in closed form."""
    if k < 3 or not 0 <= t <= k:
        raise ValueError(f"invalid parameters k={k}, t={t}")
    poly = (
        k**3
        + 2 * k * k * t
        + 12 * k * t
        - k
        + 2 * t**3
        + 12 * t * t
        - 16 * t
    )
    return Fraction(poly, 12) + Fraction(t * t - t**4, 12 * k)


def girth_min_kf(n: int, k: int) -> Fraction:
    """Minimum Kirchhoff index of an n-vertex unicyclic graph with cycle
    length k, attained exactly at U(k,1,n-k-1,0)."""
    if not 3 <= k <= n - 1:
        raise ValueError(f"need 3 <= k <= n-1, got n={n}, k={k}")
    poly = -(k**3) + 2 * n * k * k - (12 * n - 13) * k + 12 * n * n - 14 * n
    return Fraction(poly, 12)


def unm_kf_closed_form(n: int, m: int) -> Fraction:
    """Kirchhoff index of Unm(n,m): n^2 + nm - 5n - 3m + 4."""
    if m < 3 or n < 2 * m:
        raise ValueError(f"Unm needs 3 <= m <= n/2, got n={n}, m={m}")
    return Fraction(n * n + n * m - 5 * n - 3 * m + 4)


_FAMILY_RE = re.compile(
    r"""
    (?:C(?P<cn>\d+))
    | (?:P(?P<pn>\d+))
    | (?:U\(\s*(?P<k>\d+)\s*,\s*(?P<t>\d+)\s*,\s*(?P<i>\d+)\s*,\s*(?P<j>\d+)\s*\))
    | (?:Unm\(\s*(?P<n>\d+)\s*,\s*(?P<m>\d+)\s*\))
    """,
    re.VERBOSE,
)


@dataclass(frozen=True, order=True)
class FamilySpec:
    """Symbolic description of a constructed graph.

    Textual forms: "C{n}", "P{n}", "U({k},{t},{i},{j})", "Unm({n},{m})".
    """

    kind: str
    params: tuple[int, ...]

    def text(self) -> str:
        if self.kind in ("C", "P"):
            return f"{self.kind}{self.params[0]}"
        inner = ",".join(str(p) for p in self.params)
        return f"{self.kind}({inner})"

    def build(self) -> Graph:
        if self.kind == "C":
            return make_cycle(*self.params)
        if self.kind == "P":
            return make_path(*self.params)
        if self.kind == "U":
            return make_ukt(*self.params)
        if self.kind == "Unm":
            return make_unm(*self.params)
        raise ValueError(f"unknown family kind {self.kind!r}")


def parse_family_spec(text: str) -> FamilySpec:
    m = _FAMILY_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"not a family spec: {text!r}")
    if m.group("cn") is not None:
        return FamilySpec("C", (int(m.group("cn")),))
    if m.group("pn") is not None:
        return FamilySpec("P", (int(m.group("pn")),))
    if m.group("k") is not None:
        return FamilySpec("U", tuple(int(m.group(x)) for x in ("k", "t", "i", "j")))
    return FamilySpec("Unm", (int(m.group("n")), int(m.group("m"))))


@dataclass(frozen=True)
class ExtremalPrediction:
    """A predicted set of Kirchhoff minimizers with the exact minimum value."""

    minimizers: tuple[FamilySpec, ...]
    value: Fraction
    applicability: str

    def texts(self) -> tuple[str, ...]:
        return tuple(sorted(s.text() for s in self.minimizers))

    def describe(self) -> str:
        return "{" + ", ".join(self.texts()) + "} = " + format_rational(self.value)


def _pred(specs, value, where) -> ExtremalPrediction:
    return ExtremalPrediction(tuple(specs), Fraction(value), where)


def _u(k, t, i, j) -> FamilySpec:
    return FamilySpec("U", (k, t, i, j))


def predicted_min_perfect(m: int) -> ExtremalPrediction:
    """Minimum Kirchhoff index over unicyclic graphs on 2m vertices with
    a perfect matching, with its unique minimizer."""
    if m < 2:
        raise ValueError("perfect-matching classes need m >= 2")
    if m <= 4:
        return _pred([FamilySpec("C", (2 * m,))], kf_cycle(2 * m), f"m={m}")
    if m == 5:
        return _pred([_u(8, 2, 0, 0)], Fraction(655, 8), "m=5")
    if m == 6:
        return _pred([_u(8, 4, 0, 0)], Fraction(271, 2), "m=6")
    if m == 7:
        return _pred([_u(7, 7, 0, 0)], Fraction(203), "m=7")
    return _pred(
        [FamilySpec("Unm", (2 * m, m))], Fraction(6 * m * m - 13 * m + 4), f"m={m}>=8"
    )


def predicted_min(n: int, m: int) -> ExtremalPrediction:
    """Minimum Kirchhoff index over unicyclic graphs with n vertices and
    matching number m, with the exact minimizer set."""
    if not 2 <= m <= n // 2:
        raise ValueError(f"need 2 <= m <= n/2, got n={n}, m={m}")
    if n == 2 * m:
        return predicted_min_perfect(m)
    unm = FamilySpec("Unm", (n, m))
    if m == 2:
        if n == 5:
            return _pred([FamilySpec("C", (5,))], kf_cycle(5), "m=2, n=5")
        if n <= 11:
            return _pred([_u(4, 1, n - 5, 0)], Fraction(2 * n * n - 5 * n - 2, 2), "m=2, 6<=n<=11")
        if n == 12:
            return _pred([_u(3, 1, 8, 0), _u(4, 1, 7, 0)], Fraction(113), "m=2, n=12")
        return _pred([_u(3, 1, n - 4, 0)], Fraction(3 * n * n - 8 * n + 3, 3), "m=2, n>=13")
    if m == 3:
        if n == 7:
            return _pred([FamilySpec("C", (7,))], kf_cycle(7), "m=3, n=7")
        return _pred([unm], unm_kf_closed_form(n, 3), "m=3, n>=8")
    if m == 4:
        if n == 9:
            return _pred([_u(7, 1, 1, 0), FamilySpec("C", (9,))], Fraction(60), "m=4, n=9")
        if n == 10:
            return _pred([_u(7, 1, 2, 0)], Fraction(79), "m=4, n=10")
        if n == 11:
            return _pred([_u(6, 2, 3, 0), _u(7, 1, 3, 0)], Fraction(100), "m=4, n=11")
        if n in (12, 13):
            return _pred([_u(6, 2, n - 8, 0)], Fraction(3 * n * n - n - 52, 3), "m=4, n=12,13")
        if n == 14:
            return _pred([unm, _u(6, 2, 6, 0)], Fraction(174), "m=4, n=14")
        return _pred([unm], unm_kf_closed_form(n, 4), "m=4, n>=15")
    if m == 5:
        if n <= 13:
            return _pred(
                [_u(7, 3, n - 10, 0)], Fraction(7 * n * n + 12 * n - 245, 7), "m=5, 11<=n<=13"
            )
        if n == 14:
            return _pred([unm, _u(6, 2, 4, 1), _u(7, 3, 4, 0)], Fraction(185), "m=5, n=14")
        return _pred([unm], unm_kf_closed_form(n, 5), "m=5, n>=15")
    if m == 6:
        if n == 13:
            return _pred([_u(8, 4, 1, 0)], Fraction(4 * n * n + 19 * n - 262, 4), "m=6, n=13")
        if n == 14:
            return _pred([unm, _u(6, 2, 2, 2), _u(7, 3, 2, 1)], Fraction(196), "m=6, n=14")
        return _pred([unm], unm_kf_closed_form(n, 6), "m=6, n>=15")
    if m == 7:
        return _pred([unm], unm_kf_closed_form(n, 7), "m=7, n>=15")
    return _pred([unm], unm_kf_closed_form(n, m), f"m={m}>=8, n>2m")


@dataclass(frozen=True)
class AttachResult:
    graph: Graph
    vertex: int
    argmin_vertices: tuple[int, ...]


def attach_pendants_at_min_vertex(g0: Graph, count: int) -> AttachResult:
    """Attach pendant vertices at a vertex minimizing the resistance row
    sum (lowest id on ties; all argmin vertices reported)."""
    if count < 0:
        raise ValueError("pendant count must be non-negative")
    sums = vertex_sums(g0)
    best = min(sums)
    argmins = tuple(v for v in range(g0.n) if sums[v] == best)
    target = argmins[0]
    edges = set(g0.edges)
    for p in range(count):
        edges.add((target, g0.n + p))
    return AttachResult(Graph(g0.n + count, frozenset(edges)), target, argmins)


def recognize_family(g: Graph) -> FamilySpec | None:
    """Match a graph against the named families (up to isomorphism).

    Candidates are tried in deterministic order: cycle, path, then
    U(k,t,i,j) for ascending (k, t, j).  Returns None when nothing fits.
    """
    from .enumeration import canonical_code

    n = g.n
    degs = [g.degree(v) for v in range(n)]
    if g.edge_count == n - 1:
        if n == 1 or (sorted(degs)[:2] == [1, 1] and all(d <= 2 for d in degs)):
            return FamilySpec("P", (n,))
        return None
    if g.edge_count != n:
        return None
    if all(d == 2 for d in degs):
        return FamilySpec("C", (n,))
    code = canonical_code(g)
    for k in range(3, n + 1):
        # t = 0 goes last: U(k,0,i,j) with i >= 1 duplicates U(k,1,i-1,j),
        # and the t >= 1 form is the conventional one
        for t in (*range(1, min(k, n - k) + 1), 0):
            rest = n - k - t
            for j in range(0, rest // 2 + 1):
                i = rest - 2 * j
                cand = FamilySpec("U", (k, t, i, j))
                if canonical_code(cand.build()) == code:
                    return cand
    return None

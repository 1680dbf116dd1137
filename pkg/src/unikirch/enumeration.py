"""Exhaustive enumeration of unicyclic graphs up to isomorphism.

Every unicyclic graph is a cycle of length k with a rooted branch tree
on each cycle vertex, so an isomorphism class corresponds to a circular
sequence of canonical rooted-tree codes up to the 2k dihedral
symmetries.  Rooted trees use the classical bottom-up encoding
code = "(" + sorted(children codes) + ")"; the class representative is
the lexicographically minimal branch-code sequence.

Generation walks cycle lengths in ascending order, distributes the
remaining vertices as rooted trees over the cycle positions from a
memoized table of rooted trees by size, keeps only dihedral-minimal
sequences, and emits each cycle length's classes in sorted order.
Graphs are built lazily, so consumers stream with constant memory per
class.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterator

from .graph import Graph, is_connected
from .matching import matching_number
from .resistance import kirchhoff_index
from .graph import wiener_index

_codes_by_size: dict[int, tuple[str, ...]] = {1: ("()",)}


def rooted_tree_codes(size: int) -> tuple[str, ...]:
    """All canonical rooted-tree codes on the given vertex count, sorted."""
    if size < 1:
        raise ValueError("tree size must be positive")
    for s in range(2, size + 1):
        if s in _codes_by_size:
            continue
        items: list[tuple[int, str]] = []
        for sz in range(1, s):
            items.extend((sz, c) for c in _codes_by_size[sz])
        prefix_end = [0] * s
        for idx, (sz, _) in enumerate(items):
            prefix_end[sz] = idx + 1
        out: list[str] = []

        def emit(remaining: int, max_i: int, acc: list[str]):
            if remaining == 0:
                out.append("(" + "".join(sorted(acc)) + ")")
                return
            top = min(max_i, prefix_end[remaining] - 1)
            for i in range(top, -1, -1):
                sz, code = items[i]
                acc.append(code)
                emit(remaining - sz, i, acc)
                acc.pop()

        emit(s - 1, len(items) - 1, [])
        _codes_by_size[s] = tuple(sorted(out))
    return _codes_by_size[size]


def rooted_tree_code(g: Graph, root: int) -> str:
    """Canonical code of a tree rooted at the given vertex."""
    if g.edge_count != g.n - 1 or not is_connected(g):
        raise ValueError("expected a tree")

    def enc(v: int, parent: int) -> str:
        kids = sorted(enc(w, v) for w in g.adjacency[v] if w != parent)
        return "(" + "".join(kids) + ")"

    return enc(root, -1)


def tree_from_code(code: str) -> Graph:
    """Rebuild a tree from a rooted code; the root gets label 0 and the
    remaining vertices are numbered in depth-first order."""
    edges = []
    stack = [0]
    nxt = 1
    for ch in code[1:-1]:
        if ch == "(":
            edges.append((stack[-1], nxt))
            stack.append(nxt)
            nxt += 1
        else:
            stack.pop()
    return Graph(nxt, frozenset(edges))


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Dihedral-minimal branch-code sequence of a unicyclic graph.

    Equal codes characterize isomorphic unicyclic graphs.
    """

    cycle_length: int
    branch_codes: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.cycle_length}:" + "".join(self.branch_codes)

    def stable_hash(self) -> str:
        return hashlib.sha256(str(self).encode()).hexdigest()[:16]


def _dihedral_min(seq: tuple[str, ...]) -> tuple[str, ...]:
    k = len(seq)
    best = seq
    for base in (seq, seq[::-1]):
        for r in range(k):
            cand = base[r:] + base[:r]
            if cand < best:
                best = cand
    return best


def _is_dihedral_min(seq: tuple[str, ...]) -> bool:
    k = len(seq)
    for base in (seq, seq[::-1]):
        for r in range(k):
            if base[r:] + base[:r] < seq:
                return False
    return True


def canonical_code(g: Graph) -> CanonicalCode:
    """Canonical code of a unicyclic graph."""
    from .graph import decompose_unicyclic

    dec = decompose_unicyclic(g)
    adjs = dec.branch_adjacency

    def enc(i: int, v: int, parent: int) -> str:
        kids = sorted(enc(i, w, v) for w in adjs[i][v] if w != parent)
        return "(" + "".join(kids) + ")"

    seq = tuple(enc(i, br.root, -1) for i, br in enumerate(dec.branches))
    return CanonicalCode(len(dec.cycle), _dihedral_min(seq))


def graph_from_code(code: CanonicalCode) -> Graph:
    """Build the canonical representative: cycle vertices 0..k-1, branch
    vertices appended in depth-first order per cycle position."""
    k = code.cycle_length
    edges = [((i, i + 1) if i + 1 < k else (0, k - 1)) for i in range(k)]
    nxt = k
    for i, bc in enumerate(code.branch_codes):
        stack = [i]
        for ch in bc[1:-1]:
            if ch == "(":
                a, b = stack[-1], nxt
                edges.append((a, b) if a < b else (b, a))
                stack.append(nxt)
                nxt += 1
            else:
                stack.pop()
    return Graph(nxt, frozenset(edges))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` non-negative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_with_codes(
    n: int,
    m: int | None = None,
    cycle_length: int | None = None,
) -> Iterator[tuple[CanonicalCode, Graph]]:
    """Stream (code, graph) pairs, one per isomorphism class, in
    ascending CanonicalCode order; optionally filter by matching number
    or by cycle length."""
    if n < 3:
        raise ValueError("unicyclic graphs need at least 3 vertices")
    if cycle_length is not None and not 3 <= cycle_length <= n:
        raise ValueError(f"cycle length {cycle_length} out of range for n={n}")
    ks = (cycle_length,) if cycle_length is not None else range(3, n + 1)
    for k in ks:
        minimal: list[tuple[str, ...]] = []
        for extra in _compositions(n - k, k):
            pools = [rooted_tree_codes(1 + e) for e in extra]
            for seq in product(*pools):
                if seq[0] != min(seq):
                    continue
                if _is_dihedral_min(seq):
                    minimal.append(seq)
        minimal.sort()
        for seq in minimal:
            code = CanonicalCode(k, seq)
            g = graph_from_code(code)
            if m is None or matching_number(g).size == m:
                yield code, g


def enumerate_unicyclic(n: int, m: int | None = None) -> Iterator[Graph]:
    """Stream one representative per isomorphism class of unicyclic
    graphs on n vertices, optionally filtered by matching number."""
    for _, g in enumerate_with_codes(n, m):
        yield g


def counts_by_matching(n: int) -> dict[int, int]:
    """Class counts per matching number at fixed vertex count."""
    out: dict[int, int] = {}
    for _, g in enumerate_with_codes(n):
        sz = matching_number(g).size
        out[sz] = out.get(sz, 0) + 1
    return dict(sorted(out.items()))


_INVARIANTS: dict[str, Callable[[Graph], Fraction]] = {
    "kirchhoff": kirchhoff_index,
    "wiener": wiener_index,
}


def extremal_search(
    n: int, m: int, invariant: str = "kirchhoff"
) -> tuple[tuple[CanonicalCode, ...], Fraction]:
    """Exact argmin set of the invariant over all unicyclic graphs with
    n vertices and matching number m."""
    if invariant not in _INVARIANTS:
        raise ValueError(f"unknown invariant {invariant!r}")
    fn = _INVARIANTS[invariant]
    best: Fraction | None = None
    argmin: list[CanonicalCode] = []
    for code, g in enumerate_with_codes(n, m):
        val = fn(g)
        if best is None or val < best:
            best = val
            argmin = [code]
        elif val == best:
            argmin.append(code)
    if best is None:
        raise ValueError(f"no unicyclic graphs with n={n}, m={m}")
    return tuple(argmin), best


def free_tree_codes(n: int) -> tuple[str, ...]:
    """Canonical codes of free trees: the minimum rooted code over all
    root choices."""
    if n < 1:
        raise ValueError("tree size must be positive")
    seen: set[str] = set()
    for code in rooted_tree_codes(n):
        g = tree_from_code(code)
        seen.add(min(rooted_tree_code(g, r) for r in range(n)))
    return tuple(sorted(seen))


def free_trees(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of trees on n vertices."""
    return tuple(tree_from_code(c) for c in free_tree_codes(n))

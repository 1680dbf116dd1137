import random
import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from unikirch.enumeration import enumerate_with_codes

settings.register_profile("suite", max_examples=50, derandomize=True, deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def unicyclic_corpus():
    """All unicyclic isomorphism classes with 3..7 vertices, with codes."""
    return {n: list(enumerate_with_codes(n)) for n in range(3, 8)}


def random_tree_edges(rng: random.Random, n: int) -> list[tuple[int, int]]:
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    from oracles import prufer_decode

    seq = tuple(rng.randrange(n) for _ in range(n - 2))
    return prufer_decode(seq)


def random_connected_graph(rng: random.Random, n: int, extra_edges: int):
    """A random connected graph: a random spanning tree plus extras."""
    from unikirch.graph import Graph

    edges = set(random_tree_edges(rng, n))
    candidates = [
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges
    ]
    rng.shuffle(candidates)
    edges.update(candidates[:extra_edges])
    return Graph(n, frozenset(edges))

import random

import pytest
from hypothesis import strategies as st

from sparsedense.graph import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


def random_conflict_instance(rng: random.Random, max_n: int = 7, edge_p: float = 0.6, weights: int = 9):
    """Random weighted base graph with a planted (1,1) conflict graph over its edges."""
    from sparsedense.applications import ConflictInstance, WeightedGraph
    from sparsedense.graph import generate_kl_graph

    n = rng.randint(2, max_n)
    edges = tuple((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_p)
    base = WeightedGraph(n, edges, tuple(rng.randint(0, weights) for _ in edges))
    m = len(edges)
    # mostly-independent conflict graphs keep a fair share of instances feasible
    clique = rng.randint(0, min(m, 4))
    p = rng.choice([0.05, 0.15, 0.3])
    conflicts, _ = generate_kl_graph(1, 1, [m - clique, clique], p, seed=rng.getrandbits(32))
    return ConflictInstance(base, conflicts)

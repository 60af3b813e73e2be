"""Shared helpers: seeded random graph generators for property-style tests."""

import numpy as np

from equigraph.graphs import Graph, is_bipartite, is_connected


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    edges = {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    return Graph(n, frozenset(edges))


def random_connected_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    for _ in range(500):
        G = random_graph(rng, n, p)
        if is_connected(G):
            return G
        p = min(1.0, p + 0.05)
    raise RuntimeError(f"no connected graph found for n={n}")


def random_bipartite_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    if n < 2:
        return Graph(n, frozenset())
    split = int(rng.integers(1, n))
    edges = {(i, j) for i in range(split) for j in range(split, n) if rng.random() < p}
    return Graph(n, frozenset(edges))


def random_nonbipartite_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    if n < 3:
        raise ValueError("need at least 3 vertices for an odd cycle")
    for _ in range(500):
        G = random_graph(rng, n, p)
        if not is_bipartite(G):
            return G
        p = min(1.0, p + 0.02)
    raise RuntimeError(f"no non-bipartite graph found for n={n}")

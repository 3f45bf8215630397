"""Generation of regular test graphs: random sampling and exhaustive listing."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .graphcore import Graph, is_connected

__all__ = [
    "random_regular_graph",
    "random_connected_regular",
    "connected_cubic_graphs",
]


def random_regular_graph(n: int, k: int, rng: random.Random) -> Graph:
    """Uniform-ish random k-regular graph by the pairing model.

    Resamples until the pairing induces a simple graph.
    """
    if n * k % 2 or k >= n or k < 0:
        raise ValueError(f"no {k}-regular graph on {n} vertices exists")
    stubs = [v for v in range(n) for _ in range(k)]
    while True:
        rng.shuffle(stubs)
        pairs = [(stubs[i], stubs[i + 1]) for i in range(0, len(stubs), 2)]
        if any(u == v for u, v in pairs):
            continue
        if len({(min(u, v), max(u, v)) for u, v in pairs}) != len(pairs):
            continue
        return Graph.from_edges(n, pairs)


def random_connected_regular(n: int, k: int, rng: random.Random) -> Graph:
    """Random connected k-regular graph (rejection on connectivity)."""
    while True:
        g = random_regular_graph(n, k, rng)
        if is_connected(g):
            return g


def connected_cubic_graphs(n: int) -> Iterator[Graph]:
    """All connected labeled cubic graphs on n vertices with N(0) = {1, 2, 3}.

    Fixing the neighborhood of vertex 0 breaks part of the labeling symmetry
    while still visiting every isomorphism class at least once, so spectral
    extremality scans over the output cover all connected cubic graphs on n
    vertices.  Guarded at n <= 10.
    """
    if n % 2 or not 4 <= n <= 10:
        raise ValueError(f"cubic enumeration supports even n in 4..10, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    deg = [0] * n
    for v in (1, 2, 3):
        adj[0].add(v)
        adj[v].add(0)
        deg[0] += 1
        deg[v] += 1

    def complete() -> Iterator[Graph]:
        u = next((v for v in range(n) if deg[v] < 3), None)
        if u is None:
            g = Graph(n, tuple(tuple(sorted(s)) for s in adj))
            if is_connected(g):
                yield g
            return
        need = 3 - deg[u]
        candidates = [w for w in range(u + 1, n) if deg[w] < 3 and w not in adj[u]]
        for combo in combinations(candidates, need):
            for w in combo:
                adj[u].add(w)
                adj[w].add(u)
                deg[u] += 1
                deg[w] += 1
            yield from complete()
            for w in combo:
                adj[u].remove(w)
                adj[w].remove(u)
                deg[u] -= 1
                deg[w] -= 1

    yield from complete()

"""Small graph families shared by the tests and demos."""

from __future__ import annotations

import random

from .graph import Multigraph, build_graph
from .multistar import dipole_graph, monopole_graph, multistar_graph

__all__ = [
    "complete_graph", "cycle_graph", "path_graph", "star_graph", "complete_bipartite",
    "random_cubic", "dipole_graph", "monopole_graph", "multistar_graph",
]


def complete_graph(n: int) -> Multigraph:
    return build_graph([(a, b) for a in range(n) for b in range(a + 1, n)])


def cycle_graph(n: int) -> Multigraph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return build_graph([(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Multigraph:
    if n < 2:
        raise ValueError("a path needs at least 2 vertices")
    return build_graph([(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Multigraph:
    return build_graph([(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Multigraph:
    return build_graph([(f"x{i}", f"y{j}") for i in range(a) for j in range(b)])


def random_cubic(n: int, rng: random.Random, max_tries: int = 10_000) -> Multigraph:
    """Uniform-ish simple connected cubic graph via the pairing model with rejection."""
    if n < 4 or n % 2:
        raise ValueError("cubic graphs need an even number of vertices >= 4")
    for _ in range(max_tries):
        points = [v for v in range(n) for _ in range(3)]
        rng.shuffle(points)
        pairs = [(points[i], points[i + 1]) for i in range(0, len(points), 2)]
        keys = {frozenset(p) for p in pairs}
        if any(a == b for a, b in pairs) or len(keys) != len(pairs):
            continue
        G = build_graph(sorted(tuple(sorted(p)) for p in pairs), vertices=list(range(n)))
        if G.is_connected():
            return G
    raise RuntimeError("no simple connected cubic graph found")

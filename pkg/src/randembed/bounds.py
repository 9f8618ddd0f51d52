"""Upper and lower bounds on the expected face count of a random embedding."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Sequence

from .embed import DEFAULT_BUDGET, BudgetExceeded, add_vertex_outcomes, cyclic_orders
from .graph import Multigraph, RotationSystem, trace_faces
from .multistar import delta
from .poly import harmonic


class DisconnectedGraph(ValueError):
    pass


def h_bound(d: int) -> Fraction:
    """Bound on the expected number of faces through a newly added vertex of degree ``d``.

    >>> h_bound(1), h_bound(4), h_bound(5)
    (Fraction(1, 1), Fraction(7, 3), Fraction(31, 12))
    """
    if d < 1:
        raise ValueError("degree must be positive")
    if d <= 4:
        return delta(d)
    return delta(d) + Fraction(1, d + 1)


@dataclass(frozen=True)
class OrderingReport:
    ordering: tuple[int, ...]
    raw_back_degrees: tuple[int, ...]

    @property
    def back_degrees(self) -> tuple[int, ...]:
        """Back-degrees with 0 replaced by 1."""
        return tuple(max(d, 1) for d in self.raw_back_degrees)

    @property
    def adjusted(self) -> tuple[float, ...]:
        return tuple(math.e if d == 2 else float(d) for d in self.back_degrees)

    @property
    def max_back_degree(self) -> int:
        return max(self.back_degrees)


def _require_loopless_connected(G: Multigraph) -> None:
    if G.has_loops():
        raise ValueError("vertex-ordering bounds need a loopless graph")
    if not G.is_connected():
        raise DisconnectedGraph("graph is not connected")


def back_degrees(G: Multigraph, ordering: Sequence[int]) -> OrderingReport:
    """Back-degree of each vertex: edges (with multiplicity) to earlier vertices."""
    if sorted(ordering) != list(range(G.vertex_count)):
        raise ValueError("ordering must list every vertex exactly once")
    pos = {v: i for i, v in enumerate(ordering)}
    back = [0] * G.vertex_count
    for u, v in G.edges:
        if u == v:
            continue
        later = u if pos[u] > pos[v] else v
        back[pos[later]] += 1
    return OrderingReport(tuple(ordering), tuple(back))


def ordering_from_labels(G: Multigraph, labels: Sequence[Hashable]) -> OrderingReport:
    try:
        order = [G.vertex(lab) for lab in labels]
    except KeyError as exc:
        raise ValueError(f"unknown vertex {exc.args[0]!r} in ordering") from None
    return back_degrees(G, order)


def degeneracy_order(G: Multigraph) -> OrderingReport:
    """Smallest-last ordering: repeatedly delete a vertex of minimum degree.

    The deletion sequence reversed is the ordering, and a vertex's
    back-degree is its degree when deleted, so the maximum back-degree is the
    degeneracy.  Ties go to the smallest vertex id.

    >>> from randembed.graph import build_graph
    >>> K4 = build_graph([(a, b) for a in range(4) for b in range(a + 1, 4)])
    >>> degeneracy_order(K4).back_degrees
    (1, 1, 2, 3)
    """
    _require_loopless_connected(G)
    mult = [G.neighbor_multiplicities(v) for v in range(G.vertex_count)]
    deg = [sum(m.values()) for m in mult]
    alive = set(range(G.vertex_count))
    removed = []
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        removed.append(v)
        alive.remove(v)
        for u, k in mult[v].items():
            if u in alive:
                deg[u] -= k
    return back_degrees(G, removed[::-1])


def face_bound_log(G: Multigraph, order: OrderingReport | None = None) -> float:
    """``1 + sum log d_i*`` over the ordering, with ``d* = e`` when ``d = 2``.

    The sum runs from the second vertex; for a simple graph that vertex has
    back-degree 1 and contributes nothing.
    """
    _require_loopless_connected(G)
    order = order or degeneracy_order(G)
    return 1.0 + sum(math.log(d) for d in order.adjusted[1:])


def face_bound_harmonic(G: Multigraph, order: OrderingReport | None = None) -> Fraction:
    """``1 + sum H_{d_i - 1}`` over the ordering, exact."""
    _require_loopless_connected(G)
    order = order or degeneracy_order(G)
    return 1 + sum((harmonic(d - 1) for d in order.back_degrees[1:]), Fraction(0))


def degenerate_bound(G: Multigraph) -> float:
    """Bound for a ``d``-degenerate graph: ``n - 1`` if ``d = 2``, else ``1 + (n-2) log d``."""
    _require_loopless_connected(G)
    d = degeneracy_order(G).max_back_degree
    n = G.vertex_count
    if d == 1:
        return 1.0
    if d == 2:
        return float(n - 1)
    return 1 + (n - 2) * math.log(d)


def stahl_bound(G: Multigraph) -> float:
    """``2n + sum_v log deg(v)``.

    >>> from randembed.graph import build_graph
    >>> stahl_bound(build_graph([(0, 1)]))
    4.0
    """
    return 2.0 * G.vertex_count + sum(math.log(d) for d in G.degrees())


@dataclass(frozen=True)
class CycleBoundReport:
    exact: Fraction
    coarse: Fraction
    per_cycle: tuple[Fraction, ...]
    max_degree: int
    max_length: int


def _cycle_edges_ok(G: Multigraph, cycle: Sequence[int], mult) -> None:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        raise ValueError(f"not a cycle on at least 3 distinct vertices: {cycle}")
    for i in range(k):
        a, b = cycle[i], cycle[(i + 1) % k]
        m = mult[a].get(b, 0)
        if m == 0:
            raise ValueError(f"edge {G.labels[a]}-{G.labels[b]} is not in the graph")
        if m > 1:
            raise ValueError(f"edge {G.labels[a]}-{G.labels[b]} is parallel; the cycle is ambiguous")


def cycle_family_lower_bound(G: Multigraph, cycles: Sequence[Sequence[Hashable]]) -> CycleBoundReport:
    """Lower bound from the chance that each listed cycle bounds a face.

    A cycle ``u_1 ... u_k`` is a facial walk in one of its two directions
    with probability ``2 prod 1/(deg(u_i) - 1)``; summing over the family
    bounds ``E[F]`` from below.  ``coarse`` is ``2|C| / (d-1)^l`` with ``d`` the
    largest degree and ``l`` the longest length among the listed cycles.

    >>> from randembed.graph import build_graph
    >>> K4 = build_graph([(a, b) for a in range(4) for b in range(a + 1, 4)])
    >>> cycle_family_lower_bound(K4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]).exact
    Fraction(1, 1)
    """
    mult = [G.neighbor_multiplicities(v) for v in range(G.vertex_count)]
    seen = set()
    terms = []
    dmax = lmax = 0
    for raw in cycles:
        try:
            cyc = [G.vertex(x) for x in raw]
        except KeyError as exc:
            raise ValueError(f"unknown vertex {exc.args[0]!r} in cycle") from None
        _cycle_edges_ok(G, cyc, mult)
        key = min(_rotations(cyc) + _rotations(cyc[::-1]))
        if key in seen:
            raise ValueError(f"cycle listed twice: {list(raw)}")
        seen.add(key)
        degs = [G.degree(u) for u in cyc]
        if all(d == 2 for d in degs):
            raise ValueError(f"every vertex of cycle {list(raw)} has degree 2")
        terms.append(2 * Fraction(1, math.prod(d - 1 for d in degs)))
        dmax = max(dmax, max(degs))
        lmax = max(lmax, len(cyc))
    if not terms:
        raise ValueError("empty cycle family")
    coarse = Fraction(2 * len(terms), (dmax - 1) ** lmax)
    return CycleBoundReport(sum(terms, Fraction(0)), coarse, tuple(terms), dmax, lmax)


def _rotations(seq):
    return [tuple(seq[i:] + seq[:i]) for i in range(len(seq))]


def triangles(G: Multigraph) -> list[tuple]:
    """All triangles of a simple graph, as label triples."""
    adj = [set(G.neighbor_multiplicities(v)) for v in range(G.vertex_count)]
    out = []
    for a in range(G.vertex_count):
        for b in adj[a]:
            if b <= a:
                continue
            for c in adj[a] & adj[b]:
                if c > b:
                    out.append((G.labels[a], G.labels[b], G.labels[c]))
    return out


def new_vertex_face_expectation(G: Multigraph, v: int, budget: int = DEFAULT_BUDGET) -> Fraction:
    """Exact expected number of faces through ``v`` when ``v`` is added last.

    Averages over every embedding of ``G - v`` and every outcome of
    :func:`~randembed.embed.add_vertex_outcomes`, tracing the faces of each
    result.
    """
    rest = [u for u in range(G.vertex_count) if u != v]
    present = set(rest)
    per_vertex = []
    for u in rest:
        darts = [d for d in G.darts_at(u) if G.head(d) in present]
        per_vertex.append(list(cyclic_orders(darts)))
    base_count = math.prod(len(x) for x in per_vertex)
    if base_count > budget:
        raise BudgetExceeded(base_count, budget)
    total = Fraction(0)
    vdarts = set(G.darts_at(v))
    for combo in itertools.product(*per_vertex):
        base = RotationSystem(dict(zip(rest, combo)))
        for p, rot in add_vertex_outcomes(G, v, base):
            faces = trace_faces(G, rot).faces
            total += p * sum(1 for f in faces if vdarts.intersection(f))
    return total / base_count

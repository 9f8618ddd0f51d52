"""Dart-based multigraphs with rotation systems and face tracing.

Edge ``e`` owns darts ``2e`` (at its first endpoint) and ``2e + 1`` (at its
second endpoint), so the edge involution is ``d ^ 1``.  A rotation system
gives, for each vertex, the cyclic order of its darts.  The face successor
of a dart ``d`` is ``rot[d ^ 1]``: cross the edge, then turn to the next dart
in the rotation at the far end.  Tracing with the inverse rotations gives
the same face count, since it yields the inverse face permutation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Hashable, Iterable, Mapping, Sequence

from .perm import Permutation


class EulerViolation(AssertionError):
    """A traced embedding has a negative or non-integral genus."""


class Multigraph:
    """Finite multigraph with loops, stored as an edge list over dense vertex ids.

    >>> G = build_graph([("a", "b"), ("a", "b"), ("b", "b")])
    >>> G.vertex_count, G.edge_count, G.degrees()
    (2, 3, (2, 4))
    >>> G.darts_at(1)
    (1, 3, 4, 5)
    """

    __slots__ = ("labels", "edges", "tail", "_darts_at", "_index")

    def __init__(self, edges: Sequence[tuple[int, int]], labels: Sequence[Hashable]):
        n = len(labels)
        self.labels = tuple(labels)
        self.edges = tuple((int(u), int(v)) for u, v in edges)
        tail = []
        darts_at: list[list[int]] = [[] for _ in range(n)]
        for e, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {e} has an endpoint outside 0..{n - 1}")
            tail += [u, v]
            darts_at[u].append(2 * e)
            darts_at[v].append(2 * e + 1)
        self.tail = tuple(tail)
        self._darts_at = tuple(tuple(ds) for ds in darts_at)
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def dart_count(self) -> int:
        return 2 * len(self.edges)

    @staticmethod
    def sigma(d: int) -> int:
        return d ^ 1

    def vertex(self, label) -> int:
        return self._index[label]

    def darts_at(self, v: int) -> tuple[int, ...]:
        return self._darts_at[v]

    def degree(self, v: int) -> int:
        return len(self._darts_at[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(ds) for ds in self._darts_at)

    def head(self, d: int) -> int:
        return self.tail[d ^ 1]

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    def loops_at(self, v: int) -> int:
        return sum(1 for a, b in self.edges if a == b == v)

    def neighbor_multiplicities(self, v: int) -> Counter:
        """Number of edges from ``v`` to each other vertex (loops excluded)."""
        return Counter(self.head(d) for d in self._darts_at[v] if self.head(d) != v)

    def is_simple(self) -> bool:
        if self.has_loops():
            return False
        return len({frozenset(e) for e in self.edges}) == len(self.edges)

    def components(self, vertices: Iterable[int] | None = None) -> list[list[int]]:
        """Connected components of the subgraph induced by ``vertices``."""
        keep = set(range(self.vertex_count)) if vertices is None else set(vertices)
        adj: dict[int, set[int]] = {v: set() for v in keep}
        for u, v in self.edges:
            if u in keep and v in keep:
                adj[u].add(v)
                adj[v].add(u)
        seen: set[int] = set()
        out = []
        for s in sorted(keep):
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def euler_bound(self) -> int:
        """``E - V + 2c``: the face count of a genus-0 embedding."""
        return self.edge_count - self.vertex_count + 2 * len(self.components())

    def __repr__(self):
        return f"Multigraph(V={self.vertex_count}, E={self.edge_count})"


def build_graph(edge_list: Iterable[tuple[Hashable, Hashable]], vertices: Sequence[Hashable] | None = None) -> Multigraph:
    """Build a :class:`Multigraph` from ``(u, v)`` token pairs.

    Repeated pairs are parallel edges and ``(u, u)`` is a loop.  Vertex ids
    follow first appearance, or the order of ``vertices`` when given.
    """
    edge_list = [tuple(e) for e in edge_list]
    if not edge_list:
        raise ValueError("empty edge list")
    labels: list = list(vertices) if vertices is not None else []
    index = {lab: i for i, lab in enumerate(labels)}
    if len(index) != len(labels):
        raise ValueError("duplicate vertex token")
    edges = []
    for e in edge_list:
        if len(e) != 2:
            raise ValueError(f"edge must have two endpoints: {e!r}")
        ids = []
        for tok in e:
            if tok not in index:
                if vertices is not None:
                    raise ValueError(f"unknown vertex {tok!r}")
                index[tok] = len(labels)
                labels.append(tok)
            ids.append(index[tok])
        edges.append(tuple(ids))
    used = {x for e in edges for x in e}
    isolated = [labels[i] for i in range(len(labels)) if i not in used]
    if isolated:
        raise ValueError(f"isolated vertices have no rotation: {isolated}")
    return Multigraph(edges, labels)


def parse_edge_list(text: str) -> Multigraph:
    """Parse the edge-list text format: one ``u v`` pair per line, ``#`` comments."""
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        pairs.append((toks[0], toks[1]))
    return build_graph(pairs)


def read_edge_list(path) -> Multigraph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def format_edge_list(G: Multigraph) -> str:
    return "".join(f"{G.labels[u]} {G.labels[v]}\n" for u, v in G.edges)


# ---------------------------------------------------------------------------
# Rotation systems


def _canonical_cycle(darts: Sequence[int]) -> tuple[int, ...]:
    if not darts:
        return ()
    i = min(range(len(darts)), key=darts.__getitem__)
    return tuple(darts[i:]) + tuple(darts[:i])


class RotationSystem:
    """Cyclic dart order at each vertex of a (sub)graph.

    The mapping may cover only some vertices; this is how partial embeddings
    are represented while a graph is built one vertex at a time.  Each cyclic
    order is stored starting from its smallest dart.
    """

    __slots__ = ("_rot",)

    def __init__(self, rotations: Mapping[int, Sequence[int]]):
        self._rot = {int(v): _canonical_cycle(list(r)) for v, r in sorted(rotations.items())}

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self._rot[v]

    def __contains__(self, v: int) -> bool:
        return v in self._rot

    def vertices(self) -> list[int]:
        return list(self._rot)

    def items(self):
        return self._rot.items()

    def darts(self) -> list[int]:
        return [d for r in self._rot.values() for d in r]

    def successor_map(self, size: int) -> list[int]:
        """Dense ``next dart`` table; darts outside the system map to -1."""
        nxt = [-1] * size
        for r in self._rot.values():
            for i, d in enumerate(r):
                nxt[d] = r[(i + 1) % len(r)]
        return nxt

    def key(self) -> tuple:
        return tuple(self._rot.items())

    def __eq__(self, other):
        if not isinstance(other, RotationSystem):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"RotationSystem({self._rot})"


def rotation_from_neighbors(G: Multigraph, orders: Mapping[Hashable, Sequence[Hashable]]) -> RotationSystem:
    """Rotation system of a simple graph given as cyclic neighbour orders by label."""
    rot = {}
    for lab, nbrs in orders.items():
        v = G.vertex(lab)
        by_head = {}
        for d in G.darts_at(v):
            h = G.labels[G.head(d)]
            if h in by_head:
                raise ValueError(f"parallel edges at {lab!r}: give dart orders instead")
            by_head[h] = d
        rot[v] = [by_head[h] for h in nbrs]
    return RotationSystem(rot)


@dataclass(frozen=True)
class FaceStructure:
    """Faces of an embedding, with genus per connected component."""

    faces: tuple[tuple[int, ...], ...]
    face_count: int
    component_genus: tuple[int, ...]

    @property
    def genus(self) -> int:
        return sum(self.component_genus)


def _expected_darts(G: Multigraph, present: set[int], v: int) -> list[int]:
    return [d for d in G.darts_at(v) if G.head(d) in present]


def trace_faces(G: Multigraph, rotation: RotationSystem) -> FaceStructure:
    """Trace the faces of the embedding of ``G`` given by ``rotation``.

    If ``rotation`` covers only a vertex subset ``S``, the faces of the
    subgraph induced by ``S`` are traced; a vertex with no darts counts as a
    component with one (empty) face.

    >>> G = build_graph([(0, 1), (1, 2), (2, 0)])
    >>> fs = trace_faces(G, RotationSystem({v: G.darts_at(v) for v in range(3)}))
    >>> fs.face_count, fs.genus
    (2, 0)
    """
    present = set(rotation.vertices())
    for v in present:
        want = _expected_darts(G, present, v)
        got = rotation[v]
        if sorted(got) != sorted(want) or len(set(got)) != len(got):
            raise ValueError(f"rotation at vertex {G.labels[v]!r} is {got}, expected a cyclic order of {want}")
    nxt = rotation.successor_map(G.dart_count)
    darts = rotation.darts()
    seen = set()
    faces = []
    for start in sorted(darts):
        if start in seen:
            continue
        face = []
        d = start
        while d not in seen:
            seen.add(d)
            face.append(d)
            d = nxt[d ^ 1]
        faces.append(tuple(face))
    comp_of = {}
    comps = G.components(present)
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    face_share = [0] * len(comps)
    for face in faces:
        face_share[comp_of[G.tail[face[0]]]] += 1
    for comp in comps:
        if not rotation[comp[0]]:
            faces.append(())
            face_share[comp_of[comp[0]]] += 1
    genus = []
    comp_set = [set(c) for c in comps]
    for ci, comp in enumerate(comps):
        e = sum(1 for a, b in G.edges if a in comp_set[ci] and b in comp_set[ci])
        twice_g = e - len(comp) + 2 - face_share[ci]
        if twice_g < 0 or twice_g % 2:
            raise EulerViolation(f"component {ci}: E={e}, V={len(comp)}, F={face_share[ci]}")
        genus.append(twice_g // 2)
    return FaceStructure(tuple(faces), len(faces), tuple(genus))


def count_faces(G: Multigraph, rotation: RotationSystem) -> int:
    return trace_faces(G, rotation).face_count


def canonical_rotation(G: Multigraph) -> RotationSystem:
    """Rotation system taking darts at each vertex in increasing order."""
    return RotationSystem({v: G.darts_at(v) for v in range(G.vertex_count)})


def local_permutation(darts: Sequence[int], mapping: Mapping[int, int] | Sequence[int]) -> Permutation:
    """Restrict a dart map to ``darts`` and relabel by position in ``darts``."""
    pos = {d: i for i, d in enumerate(darts)}
    return Permutation(pos[mapping[d]] for d in darts)


def rotation_at(G: Multigraph, rotation: RotationSystem, v: int) -> Permutation:
    """``pi_v`` on positions ``0..k-1`` of the sorted darts of ``rotation[v]``."""
    nxt = rotation.successor_map(G.dart_count)
    return local_permutation(sorted(rotation[v]), nxt)

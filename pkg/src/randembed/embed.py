"""Random and exhaustive rotation systems.

Embeddings can be grown one vertex at a time or enumerated exhaustively.
The sharded Monte Carlo estimator produces output that depends only on
the seed.
"""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .distribution import FaceDistribution
from .graph import EulerViolation, Multigraph, RotationSystem, local_permutation
from .perm import Permutation, num_cycles

DEFAULT_BUDGET = 10**7
DEFAULT_SHARD_SIZE = 8192


class BudgetExceeded(RuntimeError):
    """Exhaustive enumeration would exceed the configured budget."""

    def __init__(self, required: int, budget: int):
        super().__init__(f"enumeration needs {required} rotation systems, budget is {budget}")
        self.required = required
        self.budget = budget


def random_embedding(G: Multigraph, rng: random.Random) -> RotationSystem:
    """Independent uniform cyclic order at every vertex."""
    rot = {}
    for v in range(G.vertex_count):
        darts = list(G.darts_at(v))
        rest = darts[1:]
        rng.shuffle(rest)
        rot[v] = [darts[0]] + rest
    return RotationSystem(rot)


def _gaps(rotation: Sequence[int], dart: int) -> list[tuple[int, ...]]:
    """Every cyclic order obtained by inserting ``dart`` into one gap."""
    if not rotation:
        return [(dart,)]
    return [tuple(rotation[: i + 1]) + (dart,) + tuple(rotation[i + 1:]) for i in range(len(rotation))]


def _attachments(G: Multigraph, v: int, present: set[int]) -> list[int]:
    """Darts (at the far end) of edges joining ``v`` to already-present vertices."""
    if v in present:
        raise ValueError(f"vertex {G.labels[v]!r} is already embedded")
    if G.loops_at(v):
        raise ValueError(f"vertex {G.labels[v]!r} has a loop; cannot add it incrementally")
    return [d ^ 1 for d in G.darts_at(v) if G.head(d) in present]


def add_vertex_randomly(G: Multigraph, v: int, rotation: RotationSystem, rng: random.Random) -> RotationSystem:
    """Extend ``rotation`` (an embedding of a subgraph) by vertex ``v``.

    Every edge from ``v`` to a vertex ``u`` already in ``rotation`` has its
    dart at ``u`` inserted into a uniformly random gap of the current cyclic
    order at ``u``; several edges to the same ``u`` are inserted one after
    another, so the gap count grows by one each time.  Then ``v`` receives a
    uniform cyclic order of its own darts.  Edges to vertices not yet present
    are ignored, so calling this along a vertex order builds a uniformly
    random embedding of ``G``.
    """
    present = set(rotation.vertices())
    far = _attachments(G, v, present)
    rot = {u: list(r) for u, r in rotation.items()}
    for d in far:
        u = G.tail[d]
        cur = rot[u]
        if cur:
            i = rng.randrange(len(cur))
            cur.insert(i + 1, d)
        else:
            cur.append(d)
    own = [d ^ 1 for d in far]
    if own:
        rest = own[1:]
        rng.shuffle(rest)
        own = [own[0]] + rest
    rot[v] = own
    return RotationSystem(rot)


def add_vertex_outcomes(G: Multigraph, v: int, rotation: RotationSystem) -> list[tuple[Fraction, RotationSystem]]:
    """All outcomes of :func:`add_vertex_randomly` with their exact probabilities."""
    present = set(rotation.vertices())
    far = _attachments(G, v, present)
    states: list[tuple[Fraction, dict]] = [(Fraction(1), {u: tuple(r) for u, r in rotation.items()})]
    for d in far:
        u = G.tail[d]
        nxt = []
        for p, rot in states:
            options = _gaps(rot[u], d)
            for opt in options:
                new = dict(rot)
                new[u] = opt
                nxt.append((p / len(options), new))
        states = nxt
    own = [d ^ 1 for d in far]
    cyc = list(cyclic_orders(own)) if own else [()]
    out = []
    for p, rot in states:
        for order in cyc:
            new = dict(rot)
            new[v] = order
            out.append((p / len(cyc), RotationSystem(new)))
    return out


def incremental_outcomes(G: Multigraph, order: Sequence[int]) -> dict[RotationSystem, Fraction]:
    """Exact distribution of embeddings built by adding ``order`` one vertex at a time."""
    dist = {RotationSystem({}): Fraction(1)}
    for v in order:
        nxt: dict[RotationSystem, Fraction] = {}
        for rot, p in dist.items():
            for q, new in add_vertex_outcomes(G, v, rot):
                nxt[new] = nxt.get(new, 0) + p * q
        dist = nxt
    return dist


def face_permutation_at(G: Multigraph, rotation: RotationSystem, v: int) -> Permutation:
    """Face permutation of ``v`` relative to ``rotation``.

    For a dart ``d`` at ``v``, walk the face of ``rotation`` leaving ``v``
    along ``d`` until it first returns to ``v``; the image of ``d`` is the dart
    at ``v`` of the edge it returns along.  The result is indexed by position
    in the sorted darts of ``rotation[v]``.  Composing with the rotation at
    ``v`` (``compose(phi, rotation_at(G, rotation, v))``) gives the faces of
    ``rotation`` through ``v``.
    """
    if G.loops_at(v):
        raise ValueError(f"vertex {G.labels[v]!r} has a loop")
    darts = sorted(rotation[v])
    if not darts:
        raise ValueError(f"vertex {G.labels[v]!r} has no darts")
    nxt = rotation.successor_map(G.dart_count)
    tail = G.tail
    image = {}
    for d in darts:
        x = d
        while True:
            y = x ^ 1
            if tail[y] == v:
                image[d] = y
                break
            x = nxt[y]
    return local_permutation(darts, image)


# ---------------------------------------------------------------------------
# Exhaustive enumeration


def cyclic_orders(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All ``(k-1)!`` cyclic orders of ``items``, each starting at ``items[0]``."""
    items = list(items)
    if not items:
        yield ()
        return
    for rest in itertools.permutations(items[1:]):
        yield (items[0],) + rest


def embedding_count(G: Multigraph) -> int:
    return math.prod(math.factorial(max(G.degree(v) - 1, 0)) for v in range(G.vertex_count))


def _check_budget(G: Multigraph, budget: int, fixed: Sequence[int] = ()) -> int:
    required = embedding_count(G)
    for v in fixed:
        required //= math.factorial(G.degree(v) - 1)
    if required > budget:
        raise BudgetExceeded(required, budget)
    return required


def enumerate_embeddings(G: Multigraph, budget: int = DEFAULT_BUDGET) -> Iterator[RotationSystem]:
    """Every rotation system of ``G`` exactly once."""
    _check_budget(G, budget)
    per_vertex = [list(cyclic_orders(G.darts_at(v))) for v in range(G.vertex_count)]
    for combo in itertools.product(*per_vertex):
        yield RotationSystem(dict(enumerate(combo)))


def _check_fixable(G: Multigraph, v: int) -> None:
    heads = {G.head(d) for d in G.darts_at(v)}
    if len(heads) != 1 or v in heads:
        raise ValueError(
            "pinning a rotation is only valid at a vertex whose edges all go to one other vertex")


class _FaceCounter:
    """Counts faces from a successor table and checks Euler per component."""

    def __init__(self, G: Multigraph):
        self.G = G
        comps = G.components()
        self.single = len(comps) == 1
        comp_of = [0] * G.vertex_count
        for ci, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = ci
        self.dart_comp = [comp_of[t] for t in G.tail]
        self.limits = []
        for comp in comps:
            cs = set(comp)
            e = sum(1 for a, _ in G.edges if a in cs)
            self.limits.append(e - len(comp) + 2)
        self.ncomp = len(comps)
        self.checked = 0

    def __call__(self, nxt: list[int]) -> int:
        m = len(nxt)
        face_perm = [nxt[d ^ 1] for d in range(m)]
        if self.single:
            f = num_cycles(face_perm)
            slack = self.limits[0] - f
            if slack < 0 or slack % 2:
                raise EulerViolation(f"{f} faces with E - V + 2 = {self.limits[0]}")
            self.checked += 1
            return f
        share = [0] * self.ncomp
        seen = bytearray(m)
        for s in range(m):
            if seen[s]:
                continue
            share[self.dart_comp[s]] += 1
            x = s
            while not seen[x]:
                seen[x] = 1
                x = face_perm[x]
        for lim, f in zip(self.limits, share):
            if f > lim or (lim - f) % 2:
                raise EulerViolation(f"component with {f} faces and E - V + 2 = {lim}")
        self.checked += 1
        return sum(share)


def brute_force_distribution(G: Multigraph, budget: int = DEFAULT_BUDGET,
                             fix_vertex: int | None = None) -> FaceDistribution:
    """Histogram of face counts over all rotation systems of ``G``.

    With ``fix_vertex`` the rotation at that vertex is pinned to its sorted
    dart order, which divides every count by ``(deg - 1)!``.  This is only
    allowed at a vertex whose edges all lead to a single other vertex (as in
    a dipole), where permuting those parallel edges maps every rotation at the
    vertex to the pinned one.
    """
    fixed = []
    if fix_vertex is not None:
        _check_fixable(G, fix_vertex)
        fixed.append(fix_vertex)
    _check_budget(G, budget, fixed)
    counter = _FaceCounter(G)
    nxt = [-1] * G.dart_count
    choices = []
    for v in range(G.vertex_count):
        darts = G.darts_at(v)
        orders = [darts] if v in fixed else list(cyclic_orders(darts))
        if len(orders) == 1:
            o = orders[0]
            for i, d in enumerate(o):
                nxt[d] = o[(i + 1) % len(o)]
            continue
        choices.append([[(d, o[(i + 1) % len(o)]) for i, d in enumerate(o)] for o in orders])
    hist: dict[int, int] = {}
    for combo in itertools.product(*choices):
        for assignment in combo:
            for d, e in assignment:
                nxt[d] = e
        f = counter(nxt)
        hist[f] = hist.get(f, 0) + 1
    return FaceDistribution(hist)


# ---------------------------------------------------------------------------
# Monte Carlo

_MASK = (1 << 64) - 1


def mix_seed(seed: int, shard: int) -> int:
    """Seed of shard ``shard``: the splitmix64 finalizer of ``seed + (shard+1)*golden``.

    >>> mix_seed(42, 0) != mix_seed(42, 1)
    True
    """
    z = (seed + (shard + 1) * 0x9E3779B97F4A7C15) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


@dataclass(frozen=True)
class EstimateReport:
    samples: int
    total: int
    total_sq: int
    seed: int
    euler_checked: int = 0
    shard_size: int = DEFAULT_SHARD_SIZE
    histogram: dict = field(default_factory=dict, compare=False)

    @property
    def mean(self) -> Fraction:
        return Fraction(self.total, self.samples)

    @property
    def variance(self) -> Fraction:
        """Unbiased sample variance."""
        n = self.samples
        return Fraction(n * self.total_sq - self.total * self.total, n * (n - 1))

    @property
    def stderr(self) -> float:
        return math.sqrt(self.variance / self.samples)

    def within(self, value, k: float = 3.0) -> bool:
        return abs(float(self.mean - Fraction(value))) <= k * self.stderr


def _run_shard(args) -> tuple[int, int, dict, int]:
    G, seed, shard, count = args
    rng = random.Random(mix_seed(seed, shard))
    counter = _FaceCounter(G)
    nxt = [-1] * G.dart_count
    free = []
    for v in range(G.vertex_count):
        darts = list(G.darts_at(v))
        for i, d in enumerate(darts):
            nxt[d] = darts[(i + 1) % len(darts)]
        if len(darts) > 2:
            free.append(darts)
    total = total_sq = 0
    hist: dict[int, int] = {}
    shuffle = rng.shuffle
    for _ in range(count):
        for darts in free:
            rest = darts[1:]
            shuffle(rest)
            prev = darts[0]
            for d in rest:
                nxt[prev] = d
                prev = d
            nxt[prev] = darts[0]
        f = counter(nxt)
        total += f
        total_sq += f * f
        hist[f] = hist.get(f, 0) + 1
    return total, total_sq, hist, counter.checked


def monte_carlo_faces(G: Multigraph, samples: int, seed: int, shard_size: int = DEFAULT_SHARD_SIZE,
                      workers: int = 1) -> EstimateReport:
    """Mean face count over ``samples`` independent uniform embeddings.

    Samples are split into shards of ``shard_size``; shard ``i`` draws from
    its own stream seeded by :func:`mix_seed`, so the report depends on
    ``(seed, samples, shard_size)`` only, not on ``workers``.
    """
    if samples < 2:
        raise ValueError("need at least two samples")
    jobs = []
    done = 0
    shard = 0
    while done < samples:
        c = min(shard_size, samples - done)
        jobs.append((G, seed, shard, c))
        done += c
        shard += 1
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_shard, jobs))
    else:
        results = [_run_shard(j) for j in jobs]
    total = sum(r[0] for r in results)
    total_sq = sum(r[1] for r in results)
    hist: dict[int, int] = {}
    for r in results:
        for f, c in r[2].items():
            hist[f] = hist.get(f, 0) + c
    return EstimateReport(samples, total, total_sq, seed, sum(r[3] for r in results), shard_size,
                          dict(sorted(hist.items())))

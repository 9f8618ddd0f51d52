import itertools
import math
import random
from collections import Counter
from fractions import Fraction

import pytest

from randembed.embed import (
    BudgetExceeded,
    add_vertex_outcomes,
    add_vertex_randomly,
    brute_force_distribution,
    embedding_count,
    enumerate_embeddings,
    face_permutation_at,
    incremental_outcomes,
    mix_seed,
    monte_carlo_faces,
    random_embedding,
)
from randembed.families import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    dipole_graph,
    monopole_graph,
    path_graph,
    star_graph,
)
from randembed.graph import (
    RotationSystem,
    build_graph,
    rotation_at,
    rotation_from_neighbors,
    trace_faces,
)
from randembed.perm import Permutation, compose

from conftest import faces_at, product_cycles

# chi-square upper 0.1% point for 15 degrees of freedom
CHI2_15_999 = 37.697


def test_random_embedding_unique_when_degrees_small():
    rng = random.Random(3)
    for G in (path_graph(5), cycle_graph(6)):
        first = random_embedding(G, rng)
        assert all(random_embedding(G, rng) == first for _ in range(20))


def test_random_embedding_k4_uniform():
    G = complete_graph(4)
    rng = random.Random(2024)
    n = 100_000
    counts = Counter(random_embedding(G, rng) for _ in range(n))
    assert len(counts) == 16
    expected = n / 16
    chi2 = sum((c - expected) ** 2 / expected for c in counts.values())
    assert chi2 < CHI2_15_999


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_embeddings(dipole_graph(4))) == 36
    assert sum(1 for _ in enumerate_embeddings(complete_graph(4))) == 16
    assert sum(1 for _ in enumerate_embeddings(monopole_graph(3))) == 120
    assert len(set(enumerate_embeddings(dipole_graph(4)))) == 36


def test_random_embedding_dipole4_support():
    G = dipole_graph(4)
    rng = random.Random(7)
    seen = {random_embedding(G, rng) for _ in range(3000)}
    assert seen == set(enumerate_embeddings(G))


def test_budget_guard():
    G = complete_graph(7)
    with pytest.raises(BudgetExceeded) as info:
        brute_force_distribution(G, budget=1000)
    assert info.value.required == embedding_count(G) == math.factorial(5) ** 7
    with pytest.raises(BudgetExceeded):
        next(enumerate_embeddings(G, budget=1000))


def test_brute_force_k4():
    d = brute_force_distribution(complete_graph(4))
    assert d.weights == {2: 14, 4: 2}
    assert d.expectation() == Fraction(9, 4)


def test_brute_force_dipole7_fixed():
    d = brute_force_distribution(dipole_graph(7), fix_vertex=0)
    assert d.weights == {1: 180, 3: 469, 5: 70, 7: 1}
    assert d.total == 720


def test_fix_vertex_only_where_valid():
    with pytest.raises(ValueError):
        brute_force_distribution(complete_graph(4), fix_vertex=0)


@pytest.mark.parametrize("G", [path_graph(6), star_graph(4),
                               build_graph([(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (3, 6)])])
def test_brute_force_tree_is_point_mass(G):
    d = brute_force_distribution(G)
    assert d.weights == {1: embedding_count(G)}


CORPUS = {
    "K4": complete_graph(4),
    "K_{2,3}": complete_bipartite(2, 3),
    "D5": dipole_graph(5),
    "C5": cycle_graph(5),
    "bouquet3": monopole_graph(3),
    "theta+loop": build_graph([(0, 1), (0, 1), (1, 2), (2, 0), (2, 2)]),
    "two triangles": build_graph([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (0, 3)]),
    "disconnected": build_graph([(0, 1), (0, 1), (0, 1), ("a", "b"), ("b", "c"), ("c", "a"), ("a", "c")]),
}


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_brute_force_matches_traced_enumeration(name):
    G = CORPUS[name]
    traced = Counter()
    for rot in enumerate_embeddings(G):
        fs = trace_faces(G, rot)  # raises on any Euler violation
        assert all(g >= 0 for g in fs.component_genus)
        traced[fs.face_count] += 1
    d = brute_force_distribution(G)
    assert d.weights == dict(traced)
    assert d.total == embedding_count(G)


# --- incremental construction ------------------------------------------------


def _uniform_check(G, order):
    dist = incremental_outcomes(G, order)
    everything = set(enumerate_embeddings(G))
    assert set(dist) == everything
    target = Fraction(1, len(everything))
    assert all(p == target for p in dist.values())
    assert sum(dist.values()) == 1


UNIFORMITY_GRAPHS = {
    "P3": path_graph(3),
    "K13": star_graph(3),
    "D3": dipole_graph(3),
    "deg321": build_graph([("a", "b"), ("a", "b"), ("a", "c")]),
}


@pytest.mark.parametrize("name", sorted(UNIFORMITY_GRAPHS))
def test_incremental_construction_uniform_any_order(name):
    G = UNIFORMITY_GRAPHS[name]
    for order in itertools.permutations(range(G.vertex_count)):
        _uniform_check(G, order)


def test_incremental_uniform_k4_one_order():
    _uniform_check(complete_graph(4), [0, 1, 2, 3])


def test_add_vertex_outcome_probabilities_sum_to_one():
    G = complete_bipartite(3, 3)
    rng = random.Random(0)
    rest = [v for v in range(G.vertex_count) if v != 0]
    base = RotationSystem({})
    for v in rest:
        base = add_vertex_randomly(G, v, base, rng)
    outs = add_vertex_outcomes(G, 0, base)
    assert sum(p for p, _ in outs) == 1
    # 3 neighbours of degree 2 in G - v give 2 gaps each; v itself has 2 cyclic orders
    assert len(outs) == 2 ** 3 * 2


def test_add_vertex_errors():
    G = build_graph([(0, 1), (1, 1)])
    with pytest.raises(ValueError):
        add_vertex_randomly(G, 1, RotationSystem({0: []}), random.Random(0))
    with pytest.raises(ValueError):
        add_vertex_randomly(G, 0, RotationSystem({0: []}), random.Random(0))


def test_adding_a_leaf_keeps_face_count():
    G = build_graph([(0, 1), (1, 2), (2, 0), (0, 3), (0, 3), (1, 3), ("leaf", 2)])
    rng = random.Random(11)
    leaf = G.vertex("leaf")
    for _ in range(200):
        base = RotationSystem({})
        for v in range(G.vertex_count):
            if v != leaf:
                base = add_vertex_randomly(G, v, base, rng)
        before = trace_faces(G, base).face_count
        after = trace_faces(G, add_vertex_randomly(G, leaf, base, rng)).face_count
        assert before == after


def test_dipole4_by_adding_a_vertex():
    G = dipole_graph(4)
    rng = random.Random(99)
    n = 100_000
    total = total_sq = 0
    for _ in range(n):
        base = add_vertex_randomly(G, 0, RotationSystem({}), rng)
        f = trace_faces(G, add_vertex_randomly(G, 1, base, rng)).face_count
        total += f
        total_sq += f * f
    mean = total / n
    se = math.sqrt((total_sq - n * mean * mean) / (n - 1) / n)
    assert abs(mean - 7 / 3) <= 3 * se


# --- face permutation ----------------------------------------------------------

WORKED_EDGES = [(1, 2), (2, 3), (2, 4), (2, 6), (2, 7), (2, 8), (4, 5), (4, 6), (5, 6), (5, 8),
              ("v", 1), ("v", 2), ("v", 3), ("v", 4), ("v", 5), ("v", 6), ("v", 7)]
WORKED_ROTATION = {
    1: [2, "v"], 2: [1, 4, 7, 6, "v", 3, 8], 3: [2, "v"], 4: [2, "v", 5, 6], 5: [4, 8, "v", 6],
    6: [2, 4, "v", 5], 7: [2, "v"], 8: [2, 5], "v": [1, 2, 3, 4, 5, 6, 7],
}


def _by_head(G, rot, v, perm):
    """Relabel a permutation on v's sorted darts by the head vertex label of each dart."""
    darts = sorted(rot[v])
    lab = [G.labels[G.head(d)] for d in darts]
    img = [0] * len(darts)
    for i in range(len(darts)):
        img[lab[i] - 1] = lab[perm(i)] - 1
    return Permutation(img)


def test_face_permutation_worked_configuration():
    G = build_graph(WORKED_EDGES)
    rot = rotation_from_neighbors(G, WORKED_ROTATION)
    v = G.vertex("v")
    phi = _by_head(G, rot, v, face_permutation_at(G, rot, v))
    assert phi == Permutation.from_cycles([[1, 4], [7], [2, 3, 5], [6]], 7, base=1)
    pi = _by_head(G, rot, v, rotation_at(G, rot, v))
    assert pi == Permutation.from_cycles([[1, 2, 3, 4, 5, 6, 7]], 7, base=1)
    assert compose(pi, phi).cycle_string(base=1) == "(1 3)(2 5 6 7 4)"
    # two faces of the new embedding pass through v
    assert len(faces_at(G, rot, v)) == 2
    assert product_cycles(G, rot, v) == faces_at(G, rot, v)


def test_face_permutation_leaf_and_loop():
    G = build_graph([(0, 1), (1, 2), (2, 0), ("leaf", 0)])
    rot = random_embedding(G, random.Random(0))
    leaf = G.vertex("leaf")
    assert face_permutation_at(G, rot, leaf) == Permutation.identity(1)
    L = build_graph([(0, 1), (1, 1)])
    with pytest.raises(ValueError):
        face_permutation_at(L, random_embedding(L, random.Random(0)), 1)


@pytest.mark.parametrize("G,last", [
    (complete_graph(4), 3),
    (dipole_graph(5), 1),
    (complete_bipartite(3, 3), 0),
    (build_graph([(0, 1), (1, 2), (2, 0), (0, 3), (0, 3), (1, 3), (2, 3), (2, 3)]), 3),
])
def test_face_lemma_on_samples(G, last):
    rng = random.Random(hash((G.edge_count, last)) & 0xFFFF)
    order = [v for v in range(G.vertex_count) if v != last]
    mismatches = 0
    for _ in range(300):
        base = RotationSystem({})
        for v in order:
            base = add_vertex_randomly(G, v, base, rng)
        rot = add_vertex_randomly(G, last, base, rng)
        if product_cycles(G, rot, last) != faces_at(G, rot, last):
            mismatches += 1
    assert mismatches == 0


# --- Monte Carlo -----------------------------------------------------------------


def test_monte_carlo_triangle_exact():
    rep = monte_carlo_faces(cycle_graph(3), 1000, seed=5)
    assert rep.mean == 2 and rep.variance == 0 and rep.stderr == 0


def test_monte_carlo_k4():
    rep = monte_carlo_faces(complete_graph(4), 100_000, seed=17)
    assert rep.within(Fraction(9, 4), 3)
    assert 1 <= rep.mean <= complete_graph(4).euler_bound()
    assert rep.euler_checked == 100_000


def test_monte_carlo_deterministic_and_worker_independent():
    G = complete_bipartite(3, 3)
    a = monte_carlo_faces(G, 5000, seed=123, shard_size=1000)
    b = monte_carlo_faces(G, 5000, seed=123, shard_size=1000)
    c = monte_carlo_faces(G, 5000, seed=123, shard_size=1000, workers=2)
    assert a == b == c
    assert a.histogram == c.histogram
    assert monte_carlo_faces(G, 5000, seed=124, shard_size=1000) != a


def test_monte_carlo_needs_two_samples():
    with pytest.raises(ValueError):
        monte_carlo_faces(cycle_graph(3), 1, seed=0)


def test_mix_seed_distinct():
    seeds = {mix_seed(s, k) for s in range(20) for k in range(50)}
    assert len(seeds) == 1000
    assert all(0 <= x < 2**64 for x in seeds)

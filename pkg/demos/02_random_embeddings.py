"""
Sampling random embeddings
==========================

Rotation systems are drawn uniformly and their faces traced.  The sharded
sampler keeps exact running sums, so the estimate is the same whatever the
number of worker processes.
"""

import random

from randembed import (
    RotationSystem,
    add_vertex_randomly,
    complete_graph,
    dipole_graph,
    face_permutation_at,
    harmonic,
    monte_carlo_faces,
    random_embedding,
    trace_faces,
)
from randembed.graph import rotation_at
from randembed.perm import compose

rng = random.Random(2024)
K4 = complete_graph(4)

# one embedding, its faces and genus
rot = random_embedding(K4, rng)
fs = trace_faces(K4, rot)
print("K4 faces:", fs.face_count, "genus:", fs.genus)

# grow an embedding one vertex at a time; the law stays uniform
base = RotationSystem({})
for v in range(3):
    base = add_vertex_randomly(K4, v, base, rng)
rot = add_vertex_randomly(K4, 3, base, rng)

# faces through the last vertex come from a product of two permutations
prod = compose(face_permutation_at(K4, rot, 3), rotation_at(K4, rot, 3))
print("cycles at vertex 3:", prod.cycle_string(), "->", len(prod.cycles()), "faces")

# Monte Carlo on the 20-edge dipole vs the exact value
rep = monte_carlo_faces(dipole_graph(20), samples=20_000, seed=42)
exact = harmonic(19) + 1 / 10
print(f"D20: mean {float(rep.mean):.4f} +- {rep.stderr:.4f}   exact {float(exact):.4f}")
print("within 3 standard errors:", rep.within(exact))

"""
Upper and lower bounds
======================

Vertex orderings give upper bounds on the expected face count; short
cycles give lower bounds.  We compare both with the exact value.
"""

import random

from randembed import (
    brute_force_distribution,
    complete_graph,
    cycle_family_lower_bound,
    degeneracy_order,
    face_bound_harmonic,
    face_bound_log,
    h_bound,
    random_cubic,
    stahl_bound,
    triangles,
)

K5 = complete_graph(5)
order = degeneracy_order(K5)
print("K5 back-degrees:", order.back_degrees)

exact = brute_force_distribution(K5).expectation()
lower = cycle_family_lower_bound(K5, triangles(K5))
print(f"{float(lower.exact):.4f} <= E[F] = {float(exact):.4f} <= {float(face_bound_harmonic(K5)):.4f}"
      f" (log form {face_bound_log(K5):.4f}, older bound {stahl_bound(K5):.4f})")

# cubic graphs: the ordering bound grows like n log 3, well under 2n + n log 3
rng = random.Random(1)
for n in (8, 16, 32, 64):
    G = random_cubic(n, rng)
    print(f"  cubic n={n:3d}  log bound {face_bound_log(G):7.2f}   older bound {stahl_bound(G):7.2f}")

# per-vertex ingredient: faces through a new vertex of degree d
print("h(d):", [str(h_bound(d)) for d in range(1, 9)])

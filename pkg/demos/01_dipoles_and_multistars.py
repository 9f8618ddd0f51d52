"""
Exact face counts of dipoles and multistars
===========================================

Two vertices joined by n parallel edges: how many faces does a uniformly
random rotation system produce?  Everything below is exact rational
arithmetic.
"""

from fractions import Fraction

from randembed import (
    brute_force_distribution,
    delta,
    dipole_face_distribution,
    dipole_graph,
    multistar_expected_faces,
    multistar_face_distribution,
    parse_partition,
)

# the seven-edge dipole, via Stirling numbers
d7 = dipole_face_distribution(7)
print("D7 face histogram:", d7.weights)
print("D7 expected faces:", d7.expectation(), "=", float(d7.expectation()))

# the same thing by brute force (one rotation pinned, 720 embeddings left)
brute = brute_force_distribution(dipole_graph(7), fix_vertex=0)
print("brute force agrees:", brute == d7)

# expectation against H_(n-1) + 1/ceil(n/2)
for n in range(2, 11):
    print(f"  n={n:2d}  E[F]={str(delta(n)):>10}  ~ {float(delta(n)):.4f}")

# a multistar: centre joined to outer vertices by 5, 4, 4 and 2 edges
lam = parse_partition("5 4^2 2")
dist = multistar_face_distribution(lam)
print("K_(5,4,4,2): class size", dist.total, "expectation", dist.expectation())

# (2,2) lands exactly on the four-edge dipole value
print("K_(2,2):", multistar_expected_faces((2, 2)), "vs D4:", delta(4))

# leaves never change anything
assert multistar_expected_faces((3, 2, 1, 1)) == multistar_expected_faces((3, 2))
print("gap to the dipole value for 5,4,4,2:", multistar_expected_faces(lam) - delta(15),
      "half-width", Fraction(1, 16))

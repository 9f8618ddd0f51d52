"""Faces of random orientable 2-cell embeddings of multigraphs.

Multistars (dipoles and bouquets of loops among them) get exact face
distributions.  Arbitrary multigraphs get random or exhaustive rotation
systems together with bounds on the expected number of faces.
"""

from .bounds import (
    cycle_family_lower_bound,
    degeneracy_order,
    face_bound_harmonic,
    face_bound_log,
    h_bound,
    new_vertex_face_expectation,
    stahl_bound,
    triangles,
)
from .distribution import FaceDistribution
from .embed import (
    BudgetExceeded,
    EstimateReport,
    add_vertex_outcomes,
    add_vertex_randomly,
    brute_force_distribution,
    enumerate_embeddings,
    face_permutation_at,
    incremental_outcomes,
    monte_carlo_faces,
    random_embedding,
)
from .families import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    dipole_graph,
    monopole_graph,
    multistar_graph,
    path_graph,
    random_cubic,
    star_graph,
)
from .graph import FaceStructure, Multigraph, RotationSystem, build_graph, read_edge_list, trace_faces
from .multistar import (
    delta,
    dipole_expected_faces,
    dipole_face_distribution,
    interval_check,
    interval_scan,
    monopole_face_distribution,
    multistar_expected_faces,
    multistar_face_distribution,
    reduce_partition,
    stanley_polynomial,
)
from .perm import Partition, Permutation, compose, conj_class_size, parse_partition, partitions_of
from .poly import IntPolynomial, harmonic, rising_factorial_poly, shift_poly, stirling_unsigned

__version__ = "0.1.0"

"""Exact face distributions of multistars, with dipoles and bouquets as special cases.

A multistar of type ``lam`` has a centre joined to outer vertex ``i`` by
``lam[i]`` parallel edges.  Its face distribution is the distribution of the
number of cycles of ``(1 2 ... n) tau`` for ``tau`` uniform in the conjugacy
class of type ``lam``, which Stanley's generating function gives as

    sum_j f(j) q^j = |C_lam| / (n+1)! * prod_i (1 - E^{lam_i}) (q+n)_{n+1}

with ``E f(q) = f(q - 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from .distribution import FaceDistribution
from .graph import Multigraph, build_graph
from .perm import Partition, conj_class_size, partitions_of
from .poly import IntPolynomial, harmonic, rising_factorial_poly, shift_poly, stirling_unsigned


@dataclass(frozen=True)
class MultistarShape:
    """A multistar type with its degree-1 outer vertices split off."""

    partition: Partition
    reduced: Partition
    leaves: int

    @property
    def n(self) -> int:
        return self.partition.weight

    @property
    def reduced_n(self) -> int:
        return self.reduced.weight


def reduce_partition(lam: Sequence[int]) -> MultistarShape:
    """Drop the parts equal to 1; leaves never change the face count.

    >>> reduce_partition((5, 4, 4, 2, 1, 1))
    MultistarShape(partition=Partition(5, 4, 4, 2, 1, 1), reduced=Partition(5, 4, 4, 2), leaves=2)
    """
    lam = Partition(lam)
    if not lam:
        raise ValueError("empty partition")
    reduced = Partition(x for x in lam if x > 1)
    return MultistarShape(lam, reduced, lam.length - reduced.length)


def multistar_graph(lam: Sequence[int]) -> Multigraph:
    """The multistar ``K_lam(n)``: centre ``"c"`` and outer vertices ``0, 1, ...``."""
    lam = Partition(lam)
    edges = [("c", i) for i, part in enumerate(lam) for _ in range(part)]
    return build_graph(edges)


def dipole_graph(n: int) -> Multigraph:
    return build_graph([("a", "b")] * n)


def monopole_graph(n_loops: int) -> Multigraph:
    return build_graph([("v", "v")] * n_loops)


@lru_cache(maxsize=4096)
def _stanley(lam: Partition) -> IntPolynomial:
    g = rising_factorial_poly(lam.weight)
    for part in lam:
        g = g - shift_poly(g, part)
    return g


def stanley_polynomial(lam: Sequence[int]) -> IntPolynomial:
    """``prod_i (1 - E^{lam_i})`` applied to ``(q+n)_{n+1}``.

    The operator product is applied one factor at a time, so the cost is
    ``O(len(lam) * n^2)`` integer operations.

    >>> stanley_polynomial((2,))
    IntPolynomial(6q^2)
    """
    lam = Partition(lam)
    if not lam:
        raise ValueError("empty partition")
    return _stanley(lam)


def multistar_face_distribution(lam: Sequence[int]) -> FaceDistribution:
    """``f_lam(j)``: how many ``tau`` of type ``lam`` give ``j`` cycles with the full cycle.

    All parts must be at least 2 (apply :func:`reduce_partition` first).
    The total is ``|C_lam|``.

    >>> multistar_face_distribution((2, 2))
    FaceDistribution({1: 1, 3: 2})
    """
    lam = Partition(lam)
    if not lam or lam[-1] < 2:
        raise ValueError(f"parts must all be >= 2, got {lam!r}")
    size = conj_class_size(lam)
    denom = factorial(lam.weight + 1)
    weights = {}
    for j, c in enumerate(stanley_polynomial(lam).coeffs):
        if c:
            w, r = divmod(size * c, denom)
            if r:
                raise ArithmeticError(f"inexact coefficient at q^{j} for {lam!r}")
            weights[j] = w
    return FaceDistribution(weights)


@lru_cache(maxsize=None)
def _reduced_expectation(lam: Partition) -> Fraction:
    # E = sum_j j [q^j] P / (n+1)!  where P is the Stanley polynomial
    p = stanley_polynomial(lam)
    return Fraction(p.derivative()(1), factorial(lam.weight + 1))


def multistar_expected_faces(lam: Sequence[int]) -> Fraction:
    """Expected number of faces of a random embedding of ``K_lam(n)``.

    >>> multistar_expected_faces((2, 2)), multistar_expected_faces((1, 1, 1, 1))
    (Fraction(7, 3), Fraction(1, 1))
    """
    shape = reduce_partition(lam)
    if not shape.reduced:
        return Fraction(1)
    return _reduced_expectation(shape.reduced)


def dipole_face_distribution(n: int) -> FaceDistribution:
    """Cycle counts of ``(1 2 ... n) tau`` over the ``(n-1)!`` full cycles ``tau``.

    ``2 c(n+1, k) / (n (n+1))`` products have ``k`` cycles when ``n - k`` is
    even, none otherwise.

    >>> dipole_face_distribution(7)
    FaceDistribution({1: 180, 3: 469, 5: 70, 7: 1})
    """
    if n < 2:
        raise ValueError("a dipole needs at least two edges")
    weights = {}
    for k in range(n % 2 or 2, n + 1, 2):
        w, r = divmod(2 * stirling_unsigned(n + 1, k), n * (n + 1))
        if r:
            raise ArithmeticError(f"inexact dipole count at k={k}")
        weights[k] = w
    return FaceDistribution(weights)


def dipole_expected_faces(n: int) -> Fraction:
    """``H_{n-1} + 2/n`` for even ``n``, ``H_{n-1} + 2/(n+1)`` for odd ``n``.

    >>> dipole_expected_faces(7)
    Fraction(27, 10)
    """
    if n < 2:
        raise ValueError("a dipole needs at least two edges")
    return harmonic(n - 1) + (Fraction(2, n) if n % 2 == 0 else Fraction(2, n + 1))


def delta(n: int) -> Fraction:
    """``H_{n-1} + 1/ceil(n/2)``, the expected face count of the ``n``-edge dipole.

    ``delta(1) = 1`` follows from ``H_0 = 0``; it is used by the
    vertex-addition bound.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return harmonic(n - 1) + Fraction(1, (n + 1) // 2)


def monopole_face_distribution(n_loops: int) -> FaceDistribution:
    """Faces of a random embedding of the bouquet of ``n_loops`` loops.

    Subdividing every loop gives the multistar of type ``2^n_loops`` without
    changing faces.
    """
    if n_loops < 1:
        raise ValueError("need at least one loop")
    return multistar_face_distribution((2,) * n_loops)


@dataclass(frozen=True)
class IntervalReport:
    partition: Partition
    reduced_n: int
    expectation: Fraction
    center: Fraction
    gap: Fraction
    half_width: Fraction

    @property
    def inside(self) -> bool:
        return abs(self.gap) < self.half_width


def interval_check(lam: Sequence[int]) -> IntervalReport:
    """Compare ``E[F]`` with the dipole value for the reduced edge count ``n'``.

    ``inside`` is the strict exact test ``|E - delta(n')| < 1/(n'+1)``.
    """
    shape = reduce_partition(lam)
    m = shape.reduced_n
    if m < 2:
        raise ValueError(f"reduced edge count must be >= 2, got {m}")
    e = _reduced_expectation(shape.reduced)
    c = delta(m)
    return IntervalReport(shape.partition, m, e, c, e - c, Fraction(1, m + 1))


def interval_scan(n_max: int, n_min: int = 2) -> Iterator[IntervalReport]:
    """:func:`interval_check` for every partition of ``n_min..n_max`` with ``n' >= 2``."""
    for n in range(n_min, n_max + 1):
        for lam in partitions_of(n):
            if sum(x for x in lam if x > 1) >= 2:
                yield interval_check(lam)

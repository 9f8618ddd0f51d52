"""Permutations on ``{0, ..., m-1}`` and integer partitions.

Composition is left to right: ``compose(p, q)(x) == q(p(x))``.  With this
convention the product of the rotation ``(1 2 3 4 5 6 7)`` with
``(1 4)(7)(2 3 5)(6)`` is ``(1 3)(2 5 6 7 4)``.  The number of cycles of a
product does not depend on the convention since ``pq`` and ``qp`` are
conjugate.
"""

from __future__ import annotations

import re
from collections import Counter
from math import factorial, prod
from typing import Iterable, Iterator, Sequence


class Permutation:
    """A bijection of ``{0, ..., m-1}`` stored as its tuple of images.

    >>> p = Permutation.from_cycles([[0, 1, 2]], 4)
    >>> p
    Permutation((0 1 2)(3))
    >>> p(2)
    0
    >>> p.cycle_type()
    Partition(3, 1)
    """

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        self._images = images

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(range(m))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], m: int, base: int = 0) -> "Permutation":
        """Build from disjoint cycles; elements not mentioned are fixed.

        ``base=1`` reads cycles written on ``{1, ..., m}``.
        """
        images = list(range(m))
        seen = set()
        for cyc in cycles:
            cyc = [x - base for x in cyc]
            for i, x in enumerate(cyc):
                if not 0 <= x < m or x in seen:
                    raise ValueError(f"bad cycle element {x + base}")
                seen.add(x)
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def size(self) -> int:
        return len(self._images)

    def __call__(self, x: int) -> int:
        return self._images[x]

    def __len__(self) -> int:
        return len(self._images)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self):
        return hash(self._images)

    def __repr__(self):
        return f"Permutation({self.cycle_string()})"

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._images)
        for i, j in enumerate(self._images):
            inv[j] = i
        return Permutation(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        return cycles(self)

    def cycle_type(self) -> "Partition":
        return cycle_type(self)

    def num_cycles(self) -> int:
        return num_cycles(self._images)

    def cycle_string(self, base: int = 0) -> str:
        return "".join("(" + " ".join(str(x + base) for x in c) + ")" for c in self.cycles())


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return the permutation ``x -> q(p(x))`` (apply ``p`` first).

    >>> p = Permutation.from_cycles([[1, 2, 3, 4, 5, 6, 7]], 8)
    >>> q = Permutation.from_cycles([[1, 4], [7], [2, 3, 5], [6]], 8)
    >>> compose(p, q).cycle_string()
    '(0)(1 3)(2 5 6 7 4)'
    """
    if p.size != q.size:
        raise ValueError(f"ground sets differ: {p.size} != {q.size}")
    qi = q.images
    return Permutation(qi[x] for x in p.images)


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles, each starting at its minimum, sorted by first element."""
    images = p.images
    seen = [False] * len(images)
    out = []
    for start in range(len(images)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = images[x]
        out.append(tuple(cyc))
    return out


def num_cycles(images: Sequence[int]) -> int:
    """Count cycles of a permutation given as a raw image sequence."""
    seen = bytearray(len(images))
    count = 0
    for start in range(len(images)):
        if seen[start]:
            continue
        count += 1
        x = start
        while not seen[x]:
            seen[x] = 1
            x = images[x]
    return count


def cycle_type(p: Permutation) -> "Partition":
    return Partition(len(c) for c in cycles(p))


def random_full_cycle(m: int, rng) -> Permutation:
    """Uniform random permutation with a single cycle of length ``m``.

    Element 0 is fixed as the cycle start and the remaining ``m - 1``
    elements are placed after it in uniformly random order, so each of the
    ``(m-1)!`` full cycles is equally likely.  ``rng`` is a
    :class:`random.Random`.
    """
    if m < 1:
        raise ValueError("m must be positive")
    return Permutation(_full_cycle_images(list(range(m)), rng))


def _full_cycle_images(elements: list, rng) -> list:
    rest = elements[1:]
    rng.shuffle(rest)
    order = [elements[0]] + rest
    images = [0] * len(order)
    for i, x in enumerate(order):
        images[x] = order[(i + 1) % len(order)]
    return images


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    >>> lam = Partition([1, 4, 4, 2, 5])
    >>> lam, lam.weight, lam.length
    (Partition(5, 4, 4, 2, 1), 16, 5)
    >>> lam.exponent_string()
    '5 4^2 2 1'
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = sorted((int(x) for x in parts), reverse=True)
        if parts and parts[-1] < 1:
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def __repr__(self):
        return "Partition(" + ", ".join(map(str, self)) + ")"

    def __str__(self):
        return ",".join(map(str, self))

    def exponent_string(self) -> str:
        out = []
        for part in sorted(set(self), reverse=True):
            mult = self.count(part)
            out.append(f"{part}^{mult}" if mult > 1 else str(part))
        return " ".join(out)


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse ``"5,4,4,2"`` or ``"5 4^3 2^2"`` into a :class:`Partition`.

    >>> parse_partition("5 4^3 2^2 1^3")
    Partition(5, 4, 4, 4, 2, 2, 1, 1, 1)
    >>> parse_partition("2,2")
    Partition(2, 2)
    """
    text = text.strip()
    if not text:
        raise ValueError("empty partition")
    if "," in text:
        tokens = [t.strip() for t in text.split(",")]
    else:
        tokens = text.split()
    parts = []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if m is None:
            raise ValueError(f"cannot parse partition token {tok!r}")
        part = int(m.group(1))
        rep = int(m.group(2)) if m.group(2) is not None else 1
        if part < 1 or rep < 1:
            raise ValueError(f"partition token must be positive: {tok!r}")
        parts.extend([part] * rep)
    return Partition(parts)


def partitions_of(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, in lexicographically decreasing order.

    >>> [tuple(p) for p in partitions_of(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be non-negative")

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(n, n):
        yield Partition(parts)


def partition_number(n: int) -> int:
    """p(n) by the pentagonal-number recurrence.

    >>> [partition_number(n) for n in range(8)], partition_number(30)
    ([1, 1, 2, 3, 5, 7, 11, 15], 5604)
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = g1 + k
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def conj_class_size(lam: Sequence[int]) -> int:
    """Number of permutations of cycle type ``lam``.

    >>> conj_class_size((2, 2)), conj_class_size((5,)), conj_class_size((1, 1, 1))
    (3, 24, 1)
    """
    lam = Partition(lam)
    if not lam:
        raise ValueError("empty partition")
    denom = prod(lam) * prod(factorial(m) for m in lam.multiplicities().values())
    return factorial(lam.weight) // denom

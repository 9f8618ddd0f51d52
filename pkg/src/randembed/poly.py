"""Exact integer polynomials in ``q`` together with Stirling and harmonic numbers.

Everything here uses Python integers and :class:`fractions.Fraction`, so no
coefficient ever overflows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class IntPolynomial:
    """Polynomial with integer coefficients; ``coeffs[k]`` multiplies ``q**k``.

    >>> p = IntPolynomial([0, 2, 3, 1])
    >>> p
    IntPolynomial(2q + 3q^2 + q^3)
    >>> p(1), p.derivative()(1), p.degree
    (6, 11, 3)
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._coeffs = tuple(c)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self._coeffs, other._coeffs
        n = max(len(a), len(b))
        return IntPolynomial((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self._coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self._coeffs)
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self._coeffs) if k)

    def __repr__(self):
        if not self._coeffs:
            return "IntPolynomial(0)"
        terms = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}{mono}"
            terms.append(s)
        return "IntPolynomial(" + " + ".join(terms).replace("+ -", "- ") + ")"


class StirlingTable:
    """Triangular table of unsigned Stirling numbers of the first kind.

    Rows are built on demand up to ``bound`` with
    ``c(n+1, k) = n c(n, k) + c(n, k-1)``.

    >>> t = StirlingTable(10)
    >>> t(4, 2), t(8, 3), t.row(3)
    (11, 13132, (0, 2, 3, 1))
    """

    def __init__(self, bound: int = 512):
        self.bound = bound
        self._rows: list[tuple[int, ...]] = [(1,)]

    def row(self, n: int) -> tuple[int, ...]:
        if not 0 <= n <= self.bound:
            raise ValueError(f"row {n} outside table bound {self.bound}")
        while len(self._rows) <= n:
            m = len(self._rows) - 1
            prev = self._rows[m]
            new = [0] * (m + 2)
            for k in range(1, m + 2):
                new[k] = (m * prev[k] if k <= m else 0) + prev[k - 1]
            self._rows.append(tuple(new))
        return self._rows[n]

    def __call__(self, n: int, k: int) -> int:
        if not 0 <= k <= n:
            raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
        return self.row(n)[k]


_TABLE = StirlingTable()


def stirling_unsigned(n: int, k: int) -> int:
    """``c(n, k)``: number of permutations of ``n`` elements with ``k`` cycles."""
    return _TABLE(n, k)


def stirling_signed(n: int, k: int) -> int:
    """``s(n, k) = (-1)^(n-k) c(n, k)``."""
    return (-1) ** ((n - k) % 2) * _TABLE(n, k)


def rising_factorial_poly(n: int) -> IntPolynomial:
    """``q (q+1) ... (q+n)``, i.e. the falling factorial ``(q+n)_{n+1}``.

    The coefficient of ``q^k`` is ``c(n+1, k)``.

    >>> rising_factorial_poly(2)
    IntPolynomial(2q + 3q^2 + q^3)
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    coeffs = [0, 1]
    for i in range(1, n + 1):
        # multiply by (q + i)
        nxt = [0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k] += i * c
            nxt[k + 1] += c
        coeffs = nxt
    return IntPolynomial(coeffs)


def falling_factorial_poly(n: int) -> IntPolynomial:
    """``(q)_{n+1} = q (q-1) ... (q-n)``."""
    return shift_poly(rising_factorial_poly(n), n)


def shift_poly(f: IntPolynomial, t: int) -> IntPolynomial:
    """Coefficients of ``f(q - t)``.

    Taylor shift by repeated synthetic division, ``O(deg^2)`` integer
    multiply-adds and no binomials.

    >>> shift_poly(IntPolynomial([0, 0, 1]), 1)
    IntPolynomial(1 - 2q + q^2)
    """
    if t < 0:
        raise ValueError("shift must be non-negative")
    a = list(f.coeffs)
    if t == 0 or len(a) < 2:
        return IntPolynomial(a)
    s = -t
    n = len(a) - 1
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            a[j] += s * a[j + 1]
    return IntPolynomial(a)


_HARMONIC = [Fraction(0)]


def harmonic(n: int) -> Fraction:
    """``H_n = 1 + 1/2 + ... + 1/n`` with ``H_0 = 0``.

    >>> harmonic(0), harmonic(3), harmonic(6)
    (Fraction(0, 1), Fraction(11, 6), Fraction(49, 20))
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    while len(_HARMONIC) <= n:
        _HARMONIC.append(_HARMONIC[-1] + Fraction(1, len(_HARMONIC)))
    return _HARMONIC[n]


def harmonic_numbers(n_max: int) -> list[Fraction]:
    """``[H_0, H_1, ..., H_{n_max}]`` computed cumulatively."""
    harmonic(n_max)
    return _HARMONIC[: n_max + 1]

"""Exact face-count distributions."""

from __future__ import annotations

import csv
import io
from fractions import Fraction
from typing import Mapping


class FaceDistribution:
    """Map from face count ``j`` to a non-negative integer weight.

    Zero weights are dropped, so two distributions compare equal exactly
    when their supports and weights agree.  :meth:`normalized` compares
    distributions with different totals.

    >>> d = FaceDistribution({1: 1, 3: 2})
    >>> d.total, d.expectation()
    (3, Fraction(7, 3))
    """

    __slots__ = ("_weights", "_total")

    def __init__(self, weights: Mapping[int, int]):
        clean = {}
        for j, w in weights.items():
            j, w = int(j), int(w)
            if w < 0:
                raise ValueError(f"negative weight {w} at {j} faces")
            if w:
                clean[j] = w
        if not clean:
            raise ValueError("distribution has zero total weight")
        self._weights = dict(sorted(clean.items()))
        self._total = sum(clean.values())

    @property
    def weights(self) -> dict[int, int]:
        return dict(self._weights)

    @property
    def total(self) -> int:
        return self._total

    def __getitem__(self, j: int) -> int:
        return self._weights.get(j, 0)

    def __iter__(self):
        return iter(self._weights)

    def items(self):
        return self._weights.items()

    def __eq__(self, other):
        if not isinstance(other, FaceDistribution):
            return NotImplemented
        return self._weights == other._weights

    def __hash__(self):
        return hash(tuple(self._weights.items()))

    def __repr__(self):
        return f"FaceDistribution({self._weights})"

    def probabilities(self) -> dict[int, Fraction]:
        return {j: Fraction(w, self._total) for j, w in self._weights.items()}

    def normalized(self) -> tuple[tuple[int, Fraction], ...]:
        return tuple(self.probabilities().items())

    def expectation(self) -> Fraction:
        return Fraction(sum(j * w for j, w in self._weights.items()), self._total)

    def variance(self) -> Fraction:
        mean = self.expectation()
        second = Fraction(sum(j * j * w for j, w in self._weights.items()), self._total)
        return second - mean * mean

    def scaled_to(self, total: int) -> "FaceDistribution":
        """Rescale to a new total; raises if any weight would be fractional."""
        out = {}
        for j, w in self._weights.items():
            q, r = divmod(w * total, self._total)
            if r:
                raise ArithmeticError(f"weight at {j} faces does not rescale to total {total}")
            out[j] = q
        return FaceDistribution(out)

    def to_rows(self) -> list[dict]:
        rows = []
        for j, w in self._weights.items():
            p = Fraction(w, self._total)
            rows.append({
                "faces": j,
                "count": w,
                "probability": f"{p.numerator}/{p.denominator}",
                "probability_decimal": format_decimal(p),
            })
        return rows

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["faces", "count", "probability", "probability_decimal"],
                                lineterminator="\n")
        writer.writeheader()
        writer.writerows(self.to_rows())
        return buf.getvalue()

    def to_json(self) -> dict:
        e = self.expectation()
        return {
            "total": str(self._total),
            "rows": [dict(r, count=str(r["count"])) for r in self.to_rows()],
            "expectation": fraction_str(e),
            "expectation_decimal": format_decimal(e),
        }


def fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_decimal(x, digits: int = 12) -> str:
    """Display-only decimal with ``digits`` significant digits."""
    return format(float(x), f".{digits}g")

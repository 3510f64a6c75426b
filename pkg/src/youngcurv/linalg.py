"""Fraction-free exact rank over Q."""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


def _integer_row(row: Sequence) -> list[int]:
    fracs = [c if isinstance(c, Fraction) else Fraction(c) for c in row]
    den = lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = [f.numerator * (den // f.denominator) for f in fracs]
    return _primitive(ints)


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def rational_rank(rows: Iterable[Sequence]) -> int:
    """Exact rank of a rational matrix.

    Rows are cleared to primitive integer vectors and eliminated with integer
    cross-multiplication; each updated row is divided by its content, so no
    fractions appear and entries stay small.
    """
    # pivots: column -> reduced pivot row (leading entry at that column)
    pivots: dict[int, list[int]] = {}
    rank = 0
    for raw in rows:
        row = _integer_row(raw)
        while True:
            lead = next((j for j, x in enumerate(row) if x), None)
            if lead is None:
                break
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = row
                rank += 1
                break
            a, b = piv[lead], row[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            row = _primitive([a * x - b * y for x, y in zip(row, piv)])
    return rank

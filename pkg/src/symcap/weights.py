"""Weight expansions of integer pairs.

The weight expansion of a pair p >= q >= 1 lists the sides of the squares
obtained by greedily cutting a q x p rectangle into squares.  Its block
multiplicities are exactly the continued-fraction digits of p/q, so both
are produced by one run of the Euclidean algorithm.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rational import Rat


@dataclass(frozen=True)
class WeightSequence:
    """Run-length encoded weight expansion of the pair (p, q).

    ``parts`` holds (value, multiplicity) blocks with strictly decreasing
    positive values; flattening yields the nonincreasing weight list.
    """

    parts: tuple[tuple[int, int], ...]
    p: int
    q: int

    def flatten(self) -> tuple[int, ...]:
        out: list[int] = []
        for value, mult in self.parts:
            out.extend([value] * mult)
        return tuple(out)

    def multiplicities(self) -> tuple[int, ...]:
        return tuple(mult for _, mult in self.parts)

    def values(self) -> tuple[int, ...]:
        return tuple(value for value, _ in self.parts)

    def square_sum(self) -> int:
        return sum(mult * value * value for value, mult in self.parts)

    def __len__(self) -> int:
        return sum(mult for _, mult in self.parts)


def _check_pair(p: int, q: int) -> None:
    if p <= 0 or q <= 0:
        raise ValueError(f"pair must be positive, got ({p}, {q})")
    if p < q:
        raise ValueError(f"pair must satisfy p >= q, got ({p}, {q})")


def continued_fraction(p: int, q: int) -> list[int]:
    """Continued-fraction digits [l0; l1, ..., lK] of p/q, p >= q >= 1.

    The plain Euclidean algorithm already yields the canonical expansion
    whose last digit is >= 2 whenever K >= 1.
    """
    _check_pair(p, q)
    digits = []
    a, b = p, q
    while True:
        d, r = divmod(a, b)
        digits.append(d)
        if r == 0:
            return digits
        a, b = b, r


def weight_sequence(p: int, q: int) -> WeightSequence:
    """Weight expansion of (p, q) as run-length blocks.

    Each Euclidean step a = d*b + r cuts d squares of side b from an
    a x b rectangle, leaving a b x r rectangle; the recursion stops when
    the rectangle is exhausted.  weight_sequence(p, p) is the single
    square (p,).
    """
    _check_pair(p, q)
    parts = []
    a, b = p, q
    while b > 0:
        d, r = divmod(a, b)
        parts.append((b, d))
        a, b = b, r
    return WeightSequence(tuple(parts), p, q)


def normalize_rational_pair(a: Rat, b: Rat) -> tuple[Fraction, int, int]:
    """Write the pair as lambda_sq * (e, f) with e <= f coprime integers.

    Returns (lambda_sq, e, f) with (min(a,b), max(a,b)) == lambda_sq*(e, f).
    """
    fa, fb = Fraction(a), Fraction(b)
    if fa <= 0 or fb <= 0:
        raise ValueError(f"pair must be positive, got ({a}, {b})")
    lo, hi = (fa, fb) if fa <= fb else (fb, fa)
    ratio = lo / hi  # already in lowest terms
    e, f = ratio.numerator, ratio.denominator
    return lo / e, e, f

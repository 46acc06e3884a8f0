"""Exact rational scalars: parsing, formatting, denominator clearing.

Every quantity in this package is an ``int`` or a ``fractions.Fraction``;
floats are never parsed or produced.  Decimal strings are converted exactly
(digits over a power of ten).
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt, lcm
from typing import Union

Rat = Union[int, Fraction]


def parse_rational(text: str) -> Fraction:
    """Parse "p", "p/q" or a decimal string into an exact Fraction."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc
    return value


def format_rational(x: Rat) -> str:
    """Render lowest-terms "p/q", or plain "p" for integers."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def common_denominator(values: tuple[Rat, ...] | list[Rat]) -> int:
    """Least common multiple of the denominators of ``values``."""
    return lcm(*(Fraction(v).denominator for v in values)) if values else 1


def clear_denominators(values: tuple[Rat, ...] | list[Rat]) -> tuple[list[int], int]:
    """Scale ``values`` to integers, returning (integers, multiplier)."""
    t = common_denominator(values)
    scaled = []
    for v in values:
        f = Fraction(v) * t
        scaled.append(f.numerator)  # denominator is 1 by construction
    return scaled, t


def sqrt_lower_bound(x: Rat) -> Fraction:
    """Largest fraction of the form k/denominator(x) that is <= sqrt(x)."""
    f = Fraction(x)
    if f < 0:
        raise ValueError("square root of a negative rational")
    return Fraction(isqrt(f.numerator * f.denominator), f.denominator)

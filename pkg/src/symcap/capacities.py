"""Capacity sequences of ellipsoids and their max-plus calculus.

The capacity sequence N(a, b) lists all values m*a + n*b (m, n >= 0
integers) in nondecreasing order with repetitions.  Equivalently N_k(a, b)
is the smallest A such that the triangle a*x + b*y <= A in the first
quadrant holds at least k+1 lattice points.  Sequences combine under the
max-plus product ``sharp`` and compare entrywise under ``dominates``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt, lcm

from .rational import Rat, format_rational


@dataclass(frozen=True)
class CapSequence:
    """Truncated capacity sequence: terms[0] = 0, nondecreasing, exact."""

    terms: tuple[Rat, ...]
    source: str = ""

    def __post_init__(self) -> None:
        t = self.terms
        if not t:
            raise ValueError("capacity sequence must have at least one term")
        if t[0] != 0:
            raise ValueError("capacity sequence must start at 0")
        if any(t[i] > t[i + 1] for i in range(len(t) - 1)):
            raise ValueError("capacity sequence must be nondecreasing")

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, k: int) -> Rat:
        return self.terms[k]

    @property
    def last_index(self) -> int:
        return len(self.terms) - 1

    def truncated(self, k: int) -> "CapSequence":
        if k + 1 > len(self.terms):
            raise ValueError(f"cannot extend truncation to index {k}")
        return CapSequence(self.terms[: k + 1], self.source)


@dataclass(frozen=True)
class DominanceReport:
    """Outcome of an entrywise sequence comparison.

    Either ``holds_up_to`` is the checked truncation index, or
    ``first_violation`` is (k, lhs, rhs) at the smallest violating index.
    """

    holds_up_to: int | None
    first_violation: tuple[int, Rat, Rat] | None = None

    @property
    def holds(self) -> bool:
        return self.first_violation is None


def zero_sequence(count: int) -> CapSequence:
    """All-zero sequence of the given length; identity for ``sharp``."""
    if count <= 0:
        raise ValueError("length must be positive")
    return CapSequence((0,) * count, source="Z")


def _as_integer_pair(a: Rat, b: Rat) -> tuple[int, int, int]:
    fa, fb = Fraction(a), Fraction(b)
    if fa <= 0 or fb <= 0:
        raise ValueError(f"ellipsoid parameters must be positive, got ({a}, {b})")
    t = lcm(fa.denominator, fb.denominator)
    return int(fa * t), int(fb * t), t


@lru_cache(maxsize=256)
def _int_cap_values(a: int, b: int, count: int) -> tuple[int, ...]:
    """Smallest ``count`` values of the multiset {m*a + n*b : m, n >= 0}."""
    # Bound ensuring >= count lattice points under a*x + b*y <= bound:
    # the point count is at least the triangle area bound^2/(2ab).
    bound = isqrt(2 * a * b * count) + a + b
    while True:
        values: list[int] = []
        for base in range(0, bound + 1, a):
            values.extend(range(base, bound + 1, b))
        if len(values) >= count:
            values.sort()
            return tuple(values[:count])
        bound *= 2


def lattice_count(a: Rat, b: Rat, A: Rat) -> int:
    """Number of lattice points (x, y) with x, y >= 0 and a*x + b*y <= A."""
    fa, fb, fA = Fraction(a), Fraction(b), Fraction(A)
    if fa <= 0 or fb <= 0:
        raise ValueError(f"slope parameters must be positive, got ({a}, {b})")
    if fA < 0:
        raise ValueError(f"bound must be nonnegative, got {A}")
    t = lcm(fa.denominator, fb.denominator, fA.denominator)
    ia, ib, iA = int(fa * t), int(fb * t), int(fA * t)
    total = 0
    for y in range(iA // ib + 1):
        total += (iA - ib * y) // ia + 1
    return total


def cap_seq(a: Rat, b: Rat, K: int) -> CapSequence:
    """Capacity sequence N(a, b) truncated at index K (K+1 terms)."""
    if K < 0:
        raise ValueError(f"truncation index must be nonnegative, got {K}")
    ia, ib, t = _as_integer_pair(a, b)
    values = _int_cap_values(min(ia, ib), max(ia, ib), K + 1)
    source = f"N({format_rational(a)},{format_rational(b)})"
    if t == 1:
        return CapSequence(values, source)
    return CapSequence(tuple(Fraction(v, t) for v in values), source)


def cap_at(a: Rat, b: Rat, k: int) -> Rat:
    """k-th capacity of the ellipsoid (a, b), 0-indexed."""
    return cap_seq(a, b, k).terms[k]


def ball_cap_at(a: Rat, k: int) -> Rat:
    """k-th capacity of the ball (a, a), in closed form.

    The value is d*a for the unique d >= 0 with
    (d^2 + d)/2 <= k <= (d^2 + 3d)/2; those intervals tile the indices.
    """
    if Fraction(a) <= 0:
        raise ValueError(f"ball size must be positive, got {a}")
    if k < 0:
        raise ValueError(f"index must be nonnegative, got {k}")
    d = (isqrt(8 * k + 1) - 1) // 2
    return a * d


def sharp(C: CapSequence, D: CapSequence) -> CapSequence:
    """Max-plus product: result[k] = max over i of C[i] + D[k-i]."""
    c, d = C.terms, D.terms
    length = min(len(c), len(d))
    terms = tuple(
        max(c[i] + d[k - i] for i in range(k + 1)) for k in range(length)
    )
    return CapSequence(terms, source=f"({C.source}#{D.source})")


def cap_of_ball_list(sizes: list[Rat] | tuple[Rat, ...], K: int) -> CapSequence:
    """Max-plus product of the ball sequences N(s, s) for s in sizes."""
    if K < 0:
        raise ValueError(f"truncation index must be nonnegative, got {K}")
    if not sizes:
        return zero_sequence(K + 1)
    seq = cap_seq(sizes[0], sizes[0], K)
    for s in sizes[1:]:
        seq = sharp(seq, cap_seq(s, s, K))
    return seq


def dominates(C: CapSequence, D: CapSequence) -> DominanceReport:
    """Entrywise comparison C <= D over the common (equal) truncation."""
    if len(C) != len(D):
        raise ValueError(
            f"sequence lengths differ: {len(C)} vs {len(D)}; truncate first"
        )
    c, d = C.terms, D.terms
    for k in range(len(c)):
        if c[k] > d[k]:
            return DominanceReport(None, (k, c[k], d[k]))
    return DominanceReport(len(c) - 1)


def scale_seq(C: CapSequence, t: Rat) -> CapSequence:
    """Entrywise multiplication by a positive rational."""
    ft = Fraction(t)
    if ft <= 0:
        raise ValueError(f"scale must be positive, got {t}")
    factor: Rat = ft.numerator if ft.denominator == 1 else ft
    if factor == 1:
        return C
    return CapSequence(
        tuple(x * factor for x in C.terms),
        source=f"{format_rational(t)}*{C.source}",
    )

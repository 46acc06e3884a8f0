"""Brute-force reference implementations.

Deliberately simple and slow: these cross-check the main code paths in
tests and supply independent obstruction witnesses for certificates.
"""
from __future__ import annotations

from functools import lru_cache
from math import isqrt

from .capacities import CapSequence
from .cone import ConeClass, IndexTuple
from .rational import Rat


def brute_cap_seq(a: int, b: int, K: int) -> CapSequence:
    """Capacity sequence by enumerating m*a + n*b below a doubling bound."""
    if not (isinstance(a, int) and isinstance(b, int)):
        raise ValueError("brute-force generation takes integer parameters")
    if a <= 0 or b <= 0:
        raise ValueError(f"parameters must be positive, got ({a}, {b})")
    if K < 0:
        raise ValueError(f"truncation index must be nonnegative, got {K}")
    bound = a + b
    while True:
        values = []
        m = 0
        while m * a <= bound:
            n = 0
            while m * a + n * b <= bound:
                values.append(m * a + n * b)
                n += 1
            m += 1
        if len(values) >= K + 1:
            values.sort()
            return CapSequence(tuple(values[: K + 1]), source=f"brute N({a},{b})")
        bound *= 2


def brute_sharp(C: CapSequence, D: CapSequence) -> CapSequence:
    """Max-plus product by direct double loop."""
    length = min(len(C), len(D))
    terms = []
    for k in range(length):
        best = C.terms[0] + D.terms[k]
        for i in range(1, k + 1):
            v = C.terms[i] + D.terms[k - i]
            if v > best:
                best = v
        terms.append(best)
    return CapSequence(tuple(terms), source=f"brute({C.source}#{D.source})")


def _max_entry(budget: int) -> int:
    # largest v >= 0 with v*(v+1) <= budget
    return (isqrt(4 * budget + 1) - 1) // 2


@lru_cache(maxsize=64)
def _bounded_vectors(length: int, budget: int) -> tuple[tuple[int, ...], ...]:
    """Nonincreasing vectors m >= 0 with sum m_i*(m_i+1) <= budget."""
    out: list[tuple[int, ...]] = []
    acc: list[int] = []

    def rec(remaining_len: int, cap: int, budget_left: int) -> None:
        if remaining_len == 0:
            out.append(tuple(acc))
            return
        for v in range(min(cap, _max_entry(budget_left)), -1, -1):
            acc.append(v)
            rec(remaining_len - 1, v, budget_left - v * (v + 1))
            acc.pop()

    rec(length, _max_entry(budget), budget)
    return tuple(out)


def constraint_scan(alpha: ConeClass, d_max: int = 8) -> IndexTuple | None:
    """Exhaustive search for the worst constraint tuple of degree <= d_max.

    Enumerates (d; m) with d in 1..d_max, m_i >= 0 and
    sum m_i*(m_i+1) <= d^2 + 3d, and returns the tuple minimizing the
    pairing with ``alpha``, or None when every pairing is nonnegative.
    For sorted coefficients an optimal m may be taken sorted, so only
    nonincreasing m are enumerated (against descending coefficients).
    """
    if alpha.mu < 0 or any(c < 0 for c in alpha.coeffs):
        raise ValueError(f"class must be positive, got {alpha}")
    if d_max <= 0:
        raise ValueError(f"degree bound must be positive, got {d_max}")
    M = len(alpha.coeffs)
    order = sorted(range(M), key=lambda i: alpha.coeffs[i], reverse=True)
    coeffs = [alpha.coeffs[i] for i in order]

    best_val: Rat | None = None
    best: tuple[int, tuple[int, ...]] | None = None
    for d in range(1, d_max + 1):
        dmu = d * alpha.mu
        for m in _bounded_vectors(M, d * d + 3 * d):
            val = dmu - sum(c * v for c, v in zip(coeffs, m))
            if best_val is None or val < best_val:
                best_val = val
                best = (d, m)
    if best is None or best_val >= 0:
        return None
    d, m_sorted = best
    m = [0] * M
    for i, idx in enumerate(order):
        m[idx] = m_sorted[i]
    return IndexTuple(d, tuple(m))

"""Cremona reduction on blow-up classes and exact cone membership.

A class (mu; a_1, ..., a_M) lies in the closed symplectic cone exactly when
mu^2 >= sum a_i^2 and repeated descending sorts and Cremona moves terminate
in an ordered class with mu >= a_1 + a_2 + a_3 and no negative entries.
Every decision ships a replayable move log as its certificate.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from .rational import Rat, clear_denominators, format_rational


@dataclass(frozen=True)
class ConeClass:
    """Class (mu; a_1, ..., a_M); entries may go negative during reduction."""

    mu: Rat
    coeffs: tuple[Rat, ...]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __str__(self) -> str:
        inner = ",".join(format_rational(c) for c in self.coeffs)
        return f"({format_rational(self.mu)};{inner})"

    def padded(self, length: int) -> "ConeClass":
        if len(self.coeffs) >= length:
            return self
        return ConeClass(self.mu, self.coeffs + (0,) * (length - len(self.coeffs)))

    def sorted_desc(self) -> "ConeClass":
        return ConeClass(self.mu, tuple(sorted(self.coeffs, reverse=True)))

    @property
    def is_positive(self) -> bool:
        return self.mu >= 0 and all(c >= 0 for c in self.coeffs)

    @property
    def is_ordered(self) -> bool:
        c = self.coeffs
        return all(c[i] >= c[i + 1] for i in range(len(c) - 1))

    @property
    def is_reduced(self) -> bool:
        if not (self.is_positive and self.is_ordered):
            return False
        head = self.padded(3).coeffs[:3]
        return self.mu >= head[0] + head[1] + head[2]


@dataclass(frozen=True)
class IndexTuple:
    """Integer constraint tuple (d; m_1, ..., m_M)."""

    d: int
    m: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.d, int) or not all(isinstance(v, int) for v in self.m):
            raise ValueError("index tuples must have integer entries")

    def __len__(self) -> int:
        return len(self.m)

    def __str__(self) -> str:
        return f"({self.d};{','.join(str(v) for v in self.m)})"


class TupleInvariants(NamedTuple):
    self_int: int
    chern: int
    in_F: bool


@dataclass(frozen=True)
class Move:
    """One reduction step; ``state`` is the class after applying ``op``."""

    op: str  # "sort" | "cremona"
    state: ConeClass


@dataclass(frozen=True)
class ConeDecision:
    """Cone membership verdict with a machine-checkable certificate.

    ``reason`` is "reduced" for yes, else one of "volume_violation",
    "negative_entry", "negative_mu".  Replaying ``move_log`` from the
    (zero-padded) input reproduces ``reduced_form`` exactly.
    """

    verdict: bool
    reason: str
    reduced_form: ConeClass | None
    move_log: tuple[Move, ...]
    negative_index: int | None = None
    volume: tuple[Rat, Rat] | None = None  # (mu^2, sum of squares)


def pairing(alpha: ConeClass, t: IndexTuple) -> Rat:
    """Intersection pairing d*mu - sum a_i*m_i."""
    if len(alpha.coeffs) != len(t.m):
        raise ValueError(
            f"length mismatch: class has {len(alpha.coeffs)} coefficients, "
            f"tuple has {len(t.m)}"
        )
    return t.d * alpha.mu - sum(a * m for a, m in zip(alpha.coeffs, t.m))


def tuple_invariants(t: IndexTuple) -> TupleInvariants:
    """Self-intersection, canonical pairing, and F membership of a tuple."""
    sq = sum(v * v for v in t.m)
    lin = sum(t.m)
    return TupleInvariants(
        self_int=t.d * t.d - sq,
        chern=3 * t.d - lin,
        in_F=sq + lin <= t.d * t.d + 3 * t.d,
    )


def _cremona_head(d, m1, m2, m3):
    return 2 * d - m1 - m2 - m3, d - m2 - m3, d - m1 - m3, d - m1 - m2


def cremona(x: Union[ConeClass, IndexTuple]) -> Union[ConeClass, IndexTuple]:
    """Cremona move on the first three entries; pads with zeros if needed."""
    if isinstance(x, IndexTuple):
        m = x.m + (0,) * max(0, 3 - len(x.m))
        d, m1, m2, m3 = _cremona_head(x.d, m[0], m[1], m[2])
        return IndexTuple(d, (m1, m2, m3) + m[3:])
    padded = x.padded(3)
    c = padded.coeffs
    mu, a1, a2, a3 = _cremona_head(padded.mu, c[0], c[1], c[2])
    return ConeClass(mu, (a1, a2, a3) + c[3:])


def _descale(v: int, t: int) -> Rat:
    return v if t == 1 else Fraction(v, t)


def reduce(alpha: ConeClass) -> tuple[ConeClass, tuple[Move, ...]]:
    """Sort descending and apply Cremona moves until reduced or mu < 0.

    Denominators are cleared once on entry; both moves are 1-homogeneous,
    so logged states are exact states of the original rational class.
    Terminates because the integer mu strictly decreases at every move.
    """
    padded = alpha.padded(3)
    ints, t = clear_denominators((padded.mu,) + padded.coeffs)
    mu, coeffs = ints[0], ints[1:]
    log: list[Move] = []

    def snapshot() -> ConeClass:
        return ConeClass(_descale(mu, t), tuple(_descale(c, t) for c in coeffs))

    while True:
        ordered = sorted(coeffs, reverse=True)
        if ordered != coeffs:
            coeffs = ordered
            log.append(Move("sort", snapshot()))
        if mu < 0 or mu >= coeffs[0] + coeffs[1] + coeffs[2]:
            return snapshot(), tuple(log)
        mu, coeffs[0], coeffs[1], coeffs[2] = _cremona_head(
            mu, coeffs[0], coeffs[1], coeffs[2]
        )
        log.append(Move("cremona", snapshot()))


def in_cone_closure(alpha: ConeClass) -> ConeDecision:
    """Decide membership of a positive class in the closed cone.

    Closed inequalities throughout: the volume check is mu^2 >= sum a_i^2,
    and the reduction must end nonnegative.  The volume check runs first;
    Cremona moves preserve it, so the order does not affect the verdict.
    """
    if alpha.mu < 0 or any(c < 0 for c in alpha.coeffs):
        raise ValueError(f"class must be positive, got {alpha}")
    mu_sq = alpha.mu * alpha.mu
    sq_sum = sum(c * c for c in alpha.coeffs)
    if mu_sq < sq_sum:
        return ConeDecision(
            False, "volume_violation", None, (), volume=(mu_sq, sq_sum)
        )
    reduced, log = reduce(alpha)
    if reduced.mu < 0:
        return ConeDecision(False, "negative_mu", reduced, log)
    for i, c in enumerate(reduced.coeffs):
        if c < 0:
            return ConeDecision(
                False, "negative_entry", reduced, log, negative_index=i
            )
    return ConeDecision(True, "reduced", reduced, log)


def is_exceptional(t: IndexTuple) -> bool:
    """Whether the tuple reduces to (0; 0, ..., 0, -1) up to permutation.

    Gate on the numeric invariants first (self-intersection -1, canonical
    pairing 1), then reduce by sorting and Cremona moves.
    """
    inv = tuple_invariants(t)
    if inv.self_int != -1 or inv.chern != 1:
        return False
    d = t.d
    m = list(t.m) + [0] * max(0, 3 - len(t.m))
    while True:
        m.sort(reverse=True)
        if d < 0 or m[0] + m[1] + m[2] <= d:
            break
        d, m[0], m[1], m[2] = _cremona_head(d, m[0], m[1], m[2])
    return d == 0 and m[-1] == -1 and all(v == 0 for v in m[:-1])


def move_log_json(log: tuple[Move, ...]) -> list[dict]:
    """Serialize a move log for certificate replay."""
    return [
        {
            "op": move.op,
            "state": [format_rational(move.state.mu)]
            + [format_rational(c) for c in move.state.coeffs],
        }
        for move in log
    ]

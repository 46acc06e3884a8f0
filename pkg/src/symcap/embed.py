"""Embedding decisions for ellipsoids and ball unions.

The domain data is turned into one ball-packing problem: each ellipsoid
contributes its scaled weight expansion, an ellipsoid target contributes
the complementary expansion of (d-c, d), and the resulting class
(d; balls) is decided exactly by cone reduction.  Capacity-sequence
comparison provides the independent (semi-decision) obstruction route,
and bisection over exact rational scales yields squeezing factors and
points of the embedding staircase.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import lcm

from .capacities import CapSequence, DominanceReport, cap_seq, dominates, sharp
from .cone import ConeClass, ConeDecision, in_cone_closure
from .rational import Rat, format_rational, sqrt_lower_bound
from .weights import normalize_rational_pair, weight_sequence


@dataclass(frozen=True)
class Ellipsoid:
    """Open ellipsoid with axis-disc areas a <= b; ball(c) = E(c, c)."""

    a: Fraction
    b: Fraction

    def __init__(self, a: Rat, b: Rat) -> None:
        fa, fb = Fraction(a), Fraction(b)
        if fa <= 0 or fb <= 0:
            raise ValueError(f"ellipsoid parameters must be positive, got ({a}, {b})")
        if fa > fb:
            fa, fb = fb, fa
        object.__setattr__(self, "a", fa)
        object.__setattr__(self, "b", fb)

    @classmethod
    def ball(cls, c: Rat) -> "Ellipsoid":
        return cls(c, c)

    @property
    def is_ball(self) -> bool:
        return self.a == self.b

    def scaled(self, s: Rat) -> "Ellipsoid":
        """Scale both capacities by s (the linear scale is sqrt(s))."""
        return Ellipsoid(self.a * Fraction(s), self.b * Fraction(s))

    def __str__(self) -> str:
        return f"E({format_rational(self.a)},{format_rational(self.b)})"


@dataclass(frozen=True)
class EmbedDecision:
    """Embedding verdict, its cone certificate, and optional capacity data."""

    verdict: bool
    route: str
    cone_class: ConeClass
    ball_list: tuple[Rat, ...]
    cone: ConeDecision
    capacity_report: DominanceReport | None = None
    capacity_witness: tuple[int, Rat, Rat] | None = None


def _as_rat(f: Fraction) -> Rat:
    return f.numerator if f.denominator == 1 else f


def embedding_class(
    domains: list[Ellipsoid] | tuple[Ellipsoid, ...], target: Ellipsoid
) -> tuple[ConeClass, tuple[Rat, ...]]:
    """Ball-packing class of the embedding problem, on an integer target.

    Denominators are cleared so the target is an integer pair (c, d); the
    ball list is the concatenated scaled weight expansions of the domains
    followed by the expansion of (d - c, d), and the class is (d; balls).
    """
    if not domains:
        raise ValueError("at least one domain ellipsoid is required")
    t = lcm(target.a.denominator, target.b.denominator)
    c, d = int(target.a * t), int(target.b * t)
    balls: list[Rat] = []
    for dom in domains:
        lam_sq, e, f = normalize_rational_pair(dom.a * t, dom.b * t)
        scale = _as_rat(lam_sq)
        balls.extend(scale * w for w in weight_sequence(f, e).flatten())
    if c != d:
        balls.extend(weight_sequence(d, d - c).flatten())
    ball_list = tuple(balls)
    return ConeClass(d, ball_list), ball_list


def decide(
    domains: list[Ellipsoid] | tuple[Ellipsoid, ...],
    target: Ellipsoid,
    capacity_k: int | None = None,
) -> EmbedDecision:
    """Decide whether the open disjoint union of domains embeds in target.

    The verdict comes from the cone route.  When ``capacity_k`` is given,
    the capacity comparison up to that index is attached; a violation is
    recorded as the witness whenever the verdict is no.
    """
    cone_class, balls = embedding_class(domains, target)
    cone_dec = in_cone_closure(cone_class)
    decision = EmbedDecision(cone_dec.verdict, "cone", cone_class, balls, cone_dec)
    if capacity_k is not None:
        report = capacity_check(domains, target, capacity_k)
        witness = None
        if not cone_dec.verdict and report.first_violation is not None:
            witness = report.first_violation
        decision = replace(
            decision, capacity_report=report, capacity_witness=witness
        )
    return decision


def capacity_check(
    domains: list[Ellipsoid] | tuple[Ellipsoid, ...],
    target: Ellipsoid,
    K: int,
) -> DominanceReport:
    """Compare the aggregated domain capacity sequence against the target.

    A violation proves non-embedding; absence up to K proves nothing.
    All parameters are scaled by a common denominator so the comparison
    runs on integer sequences, then reported values are scaled back.
    """
    if not domains:
        raise ValueError("at least one domain ellipsoid is required")
    params = [x for dom in domains for x in (dom.a, dom.b)] + [target.a, target.b]
    t = lcm(*(p.denominator for p in params))
    seq = cap_seq(domains[0].a * t, domains[0].b * t, K)
    for dom in domains[1:]:
        seq = sharp(seq, cap_seq(dom.a * t, dom.b * t, K))
    report = dominates(seq, cap_seq(target.a * t, target.b * t, K))
    if t == 1 or report.first_violation is None:
        return report
    k, lhs, rhs = report.first_violation
    return DominanceReport(None, (k, Fraction(lhs, t), Fraction(rhs, t)))


def squeeze(
    domain: Ellipsoid, target: Ellipsoid, eps: Rat
) -> tuple[Fraction, Fraction]:
    """Bracket the optimal capacity scale s* = sup{s : E(s*a, s*b) embeds}.

    Bisection with exact rational midpoints; the initial upper bound
    max(1, c*d/(a*b)) always dominates the volume bound sqrt(c*d/(a*b)).
    Returns (lo, hi) with lo <= s* <= hi and hi - lo <= eps.
    """
    feps = Fraction(eps)
    if feps <= 0:
        raise ValueError(f"tolerance must be positive, got {eps}")

    def fits(s: Fraction) -> bool:
        return decide([domain.scaled(s)], target).verdict

    hi = max(Fraction(1), (target.a * target.b) / (domain.a * domain.b))
    if fits(hi):
        # hi can only be feasible when it equals the volume bound exactly.
        return hi, hi
    lo = Fraction(0)
    while hi - lo > feps:
        mid = (lo + hi) / 2
        if fits(mid):
            lo = mid
        else:
            hi = mid
    return lo, hi


def staircase_point(a: Rat, eps: Rat) -> tuple[Fraction, Fraction]:
    """Bracket c(a) = inf{A : E(1, a) embeds in the ball of capacity A}.

    The lower end starts at an exact rational lower bound for sqrt(a)
    (the volume bound), the upper end at a (inclusion into B(a)).
    Returns (lo, hi) of width <= eps containing c(a).
    """
    fa = Fraction(a)
    if fa < 1:
        raise ValueError(f"aspect parameter must be >= 1, got {a}")
    feps = Fraction(eps)
    if feps <= 0:
        raise ValueError(f"tolerance must be positive, got {eps}")
    domain = Ellipsoid(1, fa)

    def fits(A: Fraction) -> bool:
        return decide([domain], Ellipsoid.ball(A)).verdict

    lo = sqrt_lower_bound(fa)
    if fits(lo):
        # c(a) is pinched between the volume bound and this feasible A.
        return lo, lo
    hi = fa
    while hi - lo > feps:
        mid = (lo + hi) / 2
        if fits(mid):
            hi = mid
        else:
            lo = mid
    return lo, hi


def ball_packing(sizes: list[Rat] | tuple[Rat, ...], mu: Rat) -> EmbedDecision:
    """Decide whether disjoint open balls of the given sizes pack into B(mu)."""
    if not sizes:
        raise ValueError("at least one ball size is required")
    fmu = Fraction(mu)
    if fmu <= 0 or any(Fraction(s) <= 0 for s in sizes):
        raise ValueError("ball sizes and target capacity must be positive")
    ball_list = tuple(_as_rat(Fraction(s)) for s in sizes)
    cone_class = ConeClass(_as_rat(fmu), ball_list)
    cone_dec = in_cone_closure(cone_class)
    return EmbedDecision(cone_dec.verdict, "cone", cone_class, ball_list, cone_dec)

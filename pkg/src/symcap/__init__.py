"""Exact embedding capacities for 4d symplectic ellipsoids and ball packings.

Two independent exact routes: capacity-sequence comparison (lattice
counting plus max-plus products) and Cremona reduction of blow-up classes,
with certificates, squeezing factors, and embedding-staircase points.
"""

from .capacities import (
    CapSequence,
    DominanceReport,
    ball_cap_at,
    cap_at,
    cap_of_ball_list,
    cap_seq,
    dominates,
    lattice_count,
    scale_seq,
    sharp,
    zero_sequence,
)
from .cone import (
    ConeClass,
    ConeDecision,
    IndexTuple,
    Move,
    cremona,
    in_cone_closure,
    is_exceptional,
    move_log_json,
    pairing,
    reduce,
    tuple_invariants,
)
from .embed import (
    Ellipsoid,
    EmbedDecision,
    ball_packing,
    capacity_check,
    decide,
    embedding_class,
    squeeze,
    staircase_point,
)
from .oracle import brute_cap_seq, brute_sharp, constraint_scan
from .rational import Rat, format_rational, parse_rational, sqrt_lower_bound
from .weights import (
    WeightSequence,
    continued_fraction,
    normalize_rational_pair,
    weight_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "CapSequence",
    "ConeClass",
    "ConeDecision",
    "DominanceReport",
    "Ellipsoid",
    "EmbedDecision",
    "IndexTuple",
    "Move",
    "Rat",
    "WeightSequence",
    "ball_cap_at",
    "ball_packing",
    "brute_cap_seq",
    "brute_sharp",
    "cap_at",
    "cap_of_ball_list",
    "cap_seq",
    "capacity_check",
    "cone",
    "constraint_scan",
    "continued_fraction",
    "cremona",
    "decide",
    "dominates",
    "embedding_class",
    "format_rational",
    "in_cone_closure",
    "is_exceptional",
    "lattice_count",
    "move_log_json",
    "normalize_rational_pair",
    "pairing",
    "parse_rational",
    "reduce",
    "scale_seq",
    "sharp",
    "sqrt_lower_bound",
    "squeeze",
    "staircase_point",
    "tuple_invariants",
    "weight_sequence",
    "zero_sequence",
]

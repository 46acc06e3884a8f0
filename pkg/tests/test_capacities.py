from __future__ import annotations

import random
from fractions import Fraction

import pytest

from symcap import (
    CapSequence,
    ball_cap_at,
    brute_cap_seq,
    brute_sharp,
    cap_at,
    cap_of_ball_list,
    cap_seq,
    dominates,
    lattice_count,
    scale_seq,
    sharp,
    weight_sequence,
    zero_sequence,
)


def naive_lattice_count(a: Fraction, b: Fraction, A: Fraction) -> int:
    count = 0
    x = 0
    while a * x <= A:
        y = 0
        while a * x + b * y <= A:
            count += 1
            y += 1
        x += 1
    return count


def random_cap_sequence(rng: random.Random, length: int, rational=False) -> CapSequence:
    terms = [Fraction(0) if rational else 0]
    for _ in range(length - 1):
        step = (
            Fraction(rng.randint(0, 8), rng.randint(1, 5))
            if rational
            else rng.randint(0, 6)
        )
        terms.append(terms[-1] + step)
    return CapSequence(tuple(terms), source="random")


# --- lattice counting -------------------------------------------------------


def test_lattice_count_golden():
    assert lattice_count(1, 1, 2) == 6
    assert lattice_count(1, 2, 4) == 9
    assert lattice_count(3, 7, 0) == 1
    assert lattice_count(Fraction(1, 2), Fraction(3, 4), 0) == 1


def test_lattice_count_matches_naive_enumeration():
    rng = random.Random(5)
    for _ in range(100):
        a = Fraction(rng.randint(1, 9), rng.randint(1, 4))
        b = Fraction(rng.randint(1, 9), rng.randint(1, 4))
        A = Fraction(rng.randint(0, 30), rng.randint(1, 3))
        assert lattice_count(a, b, A) == naive_lattice_count(a, b, A)


def test_lattice_count_rejects_bad_input():
    with pytest.raises(ValueError):
        lattice_count(0, 1, 2)
    with pytest.raises(ValueError):
        lattice_count(1, 1, -1)


def test_capacity_is_lattice_threshold():
    # N_k is the least A whose triangle holds k+1 lattice points.
    rng = random.Random(7)
    for _ in range(60):
        a, b = rng.randint(1, 9), rng.randint(1, 9)
        k = rng.randint(0, 40)
        A = cap_at(a, b, k)
        assert lattice_count(a, b, A) >= k + 1
        if A > 0:
            assert lattice_count(a, b, A - Fraction(1, 2)) <= k


# --- capacity sequences -----------------------------------------------------


def test_cap_seq_golden():
    assert cap_seq(1, 1, 9).terms == (0, 1, 1, 2, 2, 2, 3, 3, 3, 3)
    assert cap_seq(1, 4, 14).terms == (0, 1, 2, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 8)
    assert cap_seq(2, 2, 5).terms == (0, 2, 2, 4, 4, 4)


def test_cap_at_golden():
    assert cap_at(1, 4, 5) == 4
    assert cap_at(3, 7, 0) == 0
    assert cap_at(2, 3, 4) == 5


def test_cap_seq_symmetry_and_scaling():
    rng = random.Random(13)
    for _ in range(40):
        a = Fraction(rng.randint(1, 12), rng.randint(1, 4))
        b = Fraction(rng.randint(1, 12), rng.randint(1, 4))
        t = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        K = rng.randint(0, 80)
        assert cap_seq(a, b, K).terms == cap_seq(b, a, K).terms
        assert cap_seq(a * t, b * t, K).terms == scale_seq(cap_seq(a, b, K), t).terms


def test_cap_seq_terms_are_integer_combinations():
    for a, b in [(3, 5), (Fraction(1, 2), Fraction(5, 3))]:
        for term in cap_seq(a, b, 60).terms:
            combos = False
            m = 0
            while a * m <= term:
                rem = (term - a * m) / b if b != 1 else term - a * m
                if rem == int(rem) and rem >= 0:
                    combos = True
                    break
                m += 1
            assert combos, f"{term} is not m*{a} + n*{b}"


def test_cap_seq_matches_brute_force():
    rng = random.Random(17)
    for _ in range(25):
        a, b = rng.randint(1, 30), rng.randint(1, 30)
        K = rng.randint(0, 300)
        assert cap_seq(a, b, K).terms == brute_cap_seq(a, b, K).terms


def test_ball_cap_at_golden_and_closed_form():
    assert ball_cap_at(1, 9) == 3
    assert ball_cap_at(7, 0) == 0
    assert ball_cap_at(2, 5) == 4
    for a in (1, 2, Fraction(7, 3)):
        seq = cap_seq(a, a, 200)
        for k in range(201):
            assert ball_cap_at(a, k) == seq.terms[k]


def test_cap_seq_validation():
    with pytest.raises(ValueError):
        cap_seq(0, 1, 5)
    with pytest.raises(ValueError):
        cap_seq(1, 1, -1)
    with pytest.raises(ValueError):
        CapSequence((1, 2))
    with pytest.raises(ValueError):
        CapSequence((0, 2, 1))


# --- max-plus product -------------------------------------------------------


def test_sharp_golden():
    s = sharp(cap_seq(1, 1, 8), cap_seq(1, 1, 8))
    assert s.terms == (0, 1, 2, 2, 3, 3, 4, 4, 4)
    assert s.terms == cap_seq(1, 2, 8).terms
    assert sharp(cap_seq(2, 2, 5), cap_seq(2, 2, 5)).terms[3] == 4


def test_sharp_zero_identity():
    rng = random.Random(19)
    for _ in range(30):
        C = random_cap_sequence(rng, rng.randint(1, 40))
        assert sharp(C, zero_sequence(len(C))).terms == C.terms


def test_sharp_matches_brute_force():
    rng = random.Random(23)
    for _ in range(50):
        C = random_cap_sequence(rng, rng.randint(1, 50), rational=rng.random() < 0.5)
        D = random_cap_sequence(rng, rng.randint(1, 50), rational=rng.random() < 0.5)
        assert sharp(C, D).terms == brute_sharp(C, D).terms


def test_sharp_commutative_associative_monotone():
    rng = random.Random(29)
    for _ in range(60):
        n = rng.randint(1, 30)
        C = random_cap_sequence(rng, n)
        D = random_cap_sequence(rng, n)
        E = random_cap_sequence(rng, n)
        assert sharp(C, D).terms == sharp(D, C).terms
        assert sharp(sharp(C, D), E).terms == sharp(C, sharp(D, E)).terms
        # C' >= C entrywise implies C'#D >= C#D entrywise
        bump = 0
        bumped = []
        for c in C.terms:
            bumped.append(c + bump)
            bump += rng.randint(0, 3)
        bigger = CapSequence(tuple(bumped), source="C'")
        left, right = sharp(C, D).terms, sharp(bigger, D).terms
        assert all(left[k] <= right[k] for k in range(n))


def test_ball_merge_identity():
    # N(a,a)#N(a,b) = N(a,a+b), and the iterated form with l copies.
    rng = random.Random(31)
    for _ in range(20):
        a, b = rng.randint(1, 12), rng.randint(1, 12)
        K = rng.randint(20, 150)
        assert (
            sharp(cap_seq(a, a, K), cap_seq(a, b, K)).terms
            == cap_seq(a, a + b, K).terms
        )
    for _ in range(8):
        a, b = rng.randint(1, 8), rng.randint(1, 8)
        ell = rng.randint(1, 5)
        K = 100
        seq = cap_seq(a, b, K)
        ball = cap_seq(a, a, K)
        for _ in range(ell):
            seq = sharp(ball, seq)
        assert seq.terms == cap_seq(a, b + ell * a, K).terms


def test_complement_bound():
    # N(a,b)#N(b-a,b) <= N(b,b) entrywise for 0 < a < b.
    rng = random.Random(37)
    for _ in range(25):
        b = rng.randint(2, 15)
        a = rng.randint(1, b - 1)
        K = rng.randint(20, 120)
        left = sharp(cap_seq(a, b, K), cap_seq(b - a, b, K))
        assert dominates(left, cap_seq(b, b, K)).holds


def test_complement_split_exact_index():
    # For each k there is l with k+l = (d^2+3d)/2, d = floor(N_k(a,b)/a),
    # splitting N_{k+l}(b,b) = N_k(a,b) + N_l(b-a,b) exactly.
    rng = random.Random(41)
    for _ in range(10):
        b = rng.randint(2, 12)
        a = rng.randint(1, b - 1)
        seq = cap_seq(a, b, 50)
        for k in range(51):
            d = int(seq.terms[k] // a)
            ell = (d * d + 3 * d) // 2 - k
            assert ell >= 0
            assert ball_cap_at(b, k + ell) == seq.terms[k] + cap_at(b - a, b, ell)


def test_weight_expansion_reproduces_capacities():
    for a, b in [(2, 5), (3, 7), (4, 9)]:
        balls = weight_sequence(b, a).flatten()
        assert cap_of_ball_list(balls, 150).terms == cap_seq(a, b, 150).terms


def test_cap_of_ball_list_golden():
    assert cap_of_ball_list([1, 1, 1, 1], 14).terms == cap_seq(1, 4, 14).terms
    assert cap_of_ball_list([], 6).terms == (0,) * 7
    # frozen from the brute-force oracle
    expected = brute_sharp(brute_cap_seq(1, 1, 4), brute_cap_seq(2, 2, 4))
    assert expected.terms == (0, 2, 3, 4, 5)
    assert cap_of_ball_list([1, 2], 4).terms == expected.terms


def test_dominates_golden():
    assert dominates(cap_seq(1, 4, 100), cap_seq(2, 2, 100)).holds_up_to == 100
    C = cap_seq(3, 5, 40)
    assert dominates(C, C).holds
    report = dominates(cap_seq(1, 5, 10), cap_seq(2, 2, 10))
    assert report.first_violation == (5, 5, 4)
    with pytest.raises(ValueError):
        dominates(cap_seq(1, 1, 5), cap_seq(1, 1, 6))


def test_dominates_reports_smallest_violation():
    rng = random.Random(43)
    for _ in range(40):
        n = rng.randint(2, 40)
        C = random_cap_sequence(rng, n)
        D = random_cap_sequence(rng, n)
        report = dominates(C, D)
        if report.holds:
            assert all(C.terms[k] <= D.terms[k] for k in range(n))
        else:
            k, lhs, rhs = report.first_violation
            assert (lhs, rhs) == (C.terms[k], D.terms[k]) and lhs > rhs
            assert all(C.terms[i] <= D.terms[i] for i in range(k))


def test_scale_seq_golden():
    assert scale_seq(cap_seq(1, 1, 3), 4).terms == (0, 4, 4, 8)
    assert scale_seq(zero_sequence(5), Fraction(7, 3)).terms == (0,) * 5
    t = Fraction(5, 7)
    assert scale_seq(cap_seq(1, 4, 30), t).terms == cap_seq(t, 4 * t, 30).terms
    with pytest.raises(ValueError):
        scale_seq(cap_seq(1, 1, 3), 0)

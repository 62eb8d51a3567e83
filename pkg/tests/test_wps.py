import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from orbitcount.rings import FqPolynomial
from orbitcount.wps import (
    FqHeight,
    Height,
    NotMinimal,
    WeightSystem,
    WpsPointFq,
    WpsPointQ,
    brute_force_minimal,
    congruence_count,
    count_minimal,
    count_minimal_fq_sieve,
    davenport_experiment,
    enumerate_minimal,
    enumerate_minimal_fq,
    height,
    is_minimal,
    reduce_rational,
    reduce_to_minimal,
)
from oracles import fq_census_bruteforce

W46 = (4, 6)


def pt(*coords, weights=W46):
    return WpsPointQ(coords, weights)


def test_heights_over_q():
    assert height(pt(1, 1)) == Height(1, 1)
    assert str(height(pt(1, 1))) == "1"
    # (0, 64) = 2 . (0, 1): minimal only after reduction, height of the class is 1
    assert not is_minimal(pt(0, 64))
    with pytest.raises(NotMinimal, match="reduce first"):
        height(pt(0, 64))
    assert height(reduce_to_minimal(pt(0, 64))) == Height(1, 1)


def test_height_over_fq():
    A = FqPolynomial(3, [1, 0, 0, 0, 1])  # t^4 + 1
    h = height(WpsPointFq((A, FqPolynomial(3, [])), W46, 3))
    assert h == FqHeight(3, Fraction(1))
    assert str(h) == "3^1"


def test_minimality_examples():
    assert not is_minimal(pt(16, 64))
    assert is_minimal(pt(16, 32))
    t4 = FqPolynomial(2, [0, 0, 0, 0, 1])
    assert not is_minimal(WpsPointFq((t4, FqPolynomial(2, [])), W46, 2))
    with pytest.raises(ValueError):
        pt(0, 0)


def test_reduction_examples():
    assert reduce_to_minimal(pt(16, 64)).coords == (1, 1)
    assert reduce_to_minimal(pt(81 * 16, 729 * 64)).coords == (1, 1)
    # weights (2, 4) are both even, so -1 acts trivially and the point is kept
    assert reduce_to_minimal(pt(-1, 1, weights=(2, 4))).coords == (-1, 1)
    # with an odd weight the smallest odd-weight coordinate is made positive
    assert reduce_to_minimal(pt(-3, 5, weights=(1, 2))).coords == (3, 5)


def test_enumeration_examples():
    assert [p.coords for p in enumerate_minimal(1, W46)] == [
        (-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1)
    ]
    assert list(enumerate_minimal(Fraction(1, 2), W46)) == []
    # X = 2 by a direct double loop with its own minimality test
    direct = 0
    for A in range(-16, 17):
        for B in range(-64, 65):
            if (A, B) != (0, 0) and not any(A % p**4 == 0 and B % p**6 == 0 for p in (2,)):
                direct += 1
    assert count_minimal(2, W46) == direct == 4248
    # weights (2,): minimal means squarefree, |A| <= 25
    squarefree = [a for a in range(-25, 26) if a and all(a % (p * p) for p in range(2, 6))]
    assert count_minimal(5, (2,)) == len(squarefree) == 32


def test_enumeration_matches_brute_force():
    for X in (1, 2):
        assert [p.coords for p in enumerate_minimal(X, W46)] == brute_force_minimal(X, W46)


def test_fq_examples():
    assert sum(1 for _ in enumerate_minimal_fq(2, 0, W46)) == 3
    # over F_3 the unit action alpha -> (alpha^4, alpha^6) is trivial, so all 8 points are classes
    assert sum(1 for _ in enumerate_minimal_fq(3, 0, W46)) == fq_census_bruteforce(3, 0) == 8
    assert sum(1 for _ in enumerate_minimal_fq(2, 1, (2,))) == fq_census_bruteforce(2, 1, (2,))
    with pytest.raises(ValueError):
        list(enumerate_minimal_fq(7, 0, W46))


def test_fq_census_against_bruteforce():
    for q, d in [(2, 1), (3, 0), (5, 0), (2, 0)]:
        brute = fq_census_bruteforce(q, d)
        assert sum(1 for _ in enumerate_minimal_fq(q, d, W46)) == brute
        assert count_minimal_fq_sieve(q, d, W46) == brute


def test_fq_reduction_is_minimal():
    t = FqPolynomial(3, [0, 1])
    A = t**4 * FqPolynomial(3, [1, 1])
    B = t**6 * FqPolynomial(3, [2])
    red = reduce_to_minimal(WpsPointFq((A, B), W46, 3))
    assert is_minimal(red)
    assert red.coords[0].degree == 1 and red.coords[1].degree == 0


nonzero_pairs = st.tuples(st.integers(-500, 500), st.integers(-500, 500)).filter(lambda p: p != (0, 0))


@settings(max_examples=300, deadline=None)
@given(nonzero_pairs)
def test_reduction_idempotent_and_height_nonincreasing(coords):
    p = pt(*coords)
    red = reduce_to_minimal(p)
    assert is_minimal(red)
    assert reduce_to_minimal(red) == red
    L = 12
    raw = max(abs(c) ** (L // w) for c, w in zip(coords, W46))
    reduced = max(abs(c) ** (L // w) for c, w in zip(red.coords, W46))
    assert reduced <= raw


@settings(max_examples=300, deadline=None)
@given(nonzero_pairs, st.fractions(min_value=Fraction(-50), max_value=Fraction(50), max_denominator=30).filter(lambda x: x != 0))
def test_height_is_a_class_function(coords, alpha):
    scaled = [Fraction(c) * alpha**w for c, w in zip(coords, W46)]
    assert height(reduce_rational(scaled, W46)) == height(reduce_to_minimal(pt(*coords)))


def test_davenport_examples():
    for L in (1, 7):
        rec = davenport_experiment(shear=0, t1=L, t2=L)
        assert rec.count == (L + 1) ** 2  # closed box
        assert rec.volume == L * L
    rec = davenport_experiment(shear=1, t1=10, t2=10)
    assert rec.volume == 100 and rec.count == 121


def test_davenport_count_by_direct_loop():
    rng = random.Random(5)
    for _ in range(30):
        s = Fraction(rng.randint(-8, 8), 4)
        t1, t2 = rng.randint(1, 12), rng.randint(1, 12)
        direct = 0
        for y in range(0, t2 + 1):
            v = Fraction(y, t2)
            for x in range(-40, 60):
                u = Fraction(x, t1) - s * v
                if 0 <= u <= 1:
                    direct += 1
        assert davenport_experiment(shear=s, t1=t1, t2=t2).count == direct


def test_congruence_examples():
    rec = congruence_count(10, 5, [(0, 0)], 2)
    assert (rec.count, rec.bound) == (4, 5)
    rec = congruence_count(6, 7, [(1, 1)], 2)
    assert rec.count == 1 and rec.bound == Fraction(36, 49) + 1
    rec = congruence_count(25, 5, [(r,) for r in range(5)], 1)
    assert rec.count == 25 and rec.count <= rec.bound


def test_weight_system_validation():
    with pytest.raises(ValueError):
        WeightSystem(())
    with pytest.raises(ValueError):
        WeightSystem((0, 2))
    assert WeightSystem((4, 6)).lcm == 12

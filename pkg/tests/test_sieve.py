import itertools
from fractions import Fraction

import pytest

from orbitcount.sieve import (
    bare_disc,
    codim_lattice_count,
    disc_p2_density_exact,
    fq_squarefree_disc_density,
    generic_density_limit,
    generic_quartic_count_enumerated,
    generic_quartic_count_fp,
    nongeneric_density_fp,
    quartic_disc_poly,
    tail_count,
    tail_count_by_factoring,
)
from orbitcount.wps import iter_minimal_coords
from oracles import fq_squarefree_fraction_bruteforce


def nongeneric_bruteforce(p: int) -> Fraction:
    bad = 0
    for a, b, c, d, e in itertools.product(range(p), repeat=5):
        rooted = a == 0 or any((a * x**4 + b * x**3 + c * x**2 + d * x + e) % p == 0 for x in range(p))
        singular = quartic_disc_poly(a, b, c, d, e) % p == 0
        bad += rooted or singular
    return Fraction(bad, p**5)


def test_nongeneric_density_small_primes():
    assert nongeneric_density_fp(3).value == nongeneric_bruteforce(3) == Fraction(67, 81)
    assert nongeneric_density_fp(5).value == nongeneric_bruteforce(5) == Fraction(469, 625)
    # the generic share at p = 3 falls short of 1/5
    assert 1 - nongeneric_density_fp(3).value < Fraction(1, 5)
    with pytest.raises(ValueError):
        nongeneric_density_fp(2)
    with pytest.raises(ValueError):
        nongeneric_density_fp(9)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_closed_form_matches_enumeration(p):
    assert generic_quartic_count_fp(p) == generic_quartic_count_enumerated(p)


def test_generic_share_tends_to_limit():
    assert generic_density_limit() == Fraction(3, 8)
    shares = [nongeneric_density_fp(p).extra["generic_fraction"] for p in (41, 61, 101)]
    assert all(abs(s - Fraction(3, 8)) < Fraction(3, p) for s, p in zip(shares, (41, 61, 101)))
    assert nongeneric_density_fp(37).extra["method"] == "factorization-type count"


def disc_p2_bruteforce(p: int) -> Fraction:
    m = p * p
    hits = sum(1 for A in range(m) for B in range(m) if (4 * A**3 + 27 * B**2) % m == 0)
    return Fraction(hits, m * m)


@pytest.mark.parametrize("p,scaled", [(2, 2), (3, 3), (5, Fraction(9, 5))])
def test_disc_p2_density(p, scaled):
    res = disc_p2_density_exact(p)
    assert res.value == disc_p2_bruteforce(p)
    assert res.extra["scaled"] == res.value * p * p == scaled
    assert res.extra["coprime_A_fraction"] <= res.value


def test_disc_p2_density_at_three():
    assert disc_p2_density_exact(3).value == Fraction(1, 3)


def tail_by_trial_division(X: int, M: int) -> int:
    count = 0
    for A, B in iter_minimal_coords(X, (4, 6)):
        D = abs(bare_disc(A, B))
        if D == 0:
            continue
        p = M + 1
        while p * p <= D:
            if D % (p * p) == 0 and all(p % k for k in range(2, int(p**0.5) + 1)):
                count += 1
                break
            p += 1
    return count


def test_tail_counts_small_height():
    rec = tail_count(2, 2)
    assert rec.count == 1842
    assert rec.count == tail_count_by_factoring(2, 2) == tail_by_trial_division(2, 2)
    assert rec.curves == 4244 and rec.singular_skipped == 4
    assert tail_count(2, 10).count == tail_by_trial_division(2, 10)
    assert tail_count(2, 10**6).count == 0


def test_tail_counts_decrease_in_m():
    counts = [tail_count(3, M).count for M in (10, 100, 1000)]
    assert counts == [13902, 842, 0]
    assert tail_count(3, 100).count == tail_count_by_factoring(3, 100)
    with pytest.raises(ValueError):
        tail_count(6, 10)
    with pytest.raises(ValueError):
        tail_count(2, 1)


def test_codim_lattice_counts():
    assert (codim_lattice_count([0], 100, 2).count, codim_lattice_count([0], 100, 2).bound) == (100, 100)
    assert (codim_lattice_count([0, 1], 100, 2).count, codim_lattice_count([0, 1], 100, 2).bound) == (1, 1)
    assert (codim_lattice_count([0], 50, 3).count, codim_lattice_count([0], 50, 3).bound) == (2500, 2500)
    rec = codim_lattice_count([0], 10, 2)
    assert (rec.count, rec.bound) == (10, 10)
    rec = codim_lattice_count([0, 2], 7, 3, predicate=lambda pt: pt[0] == 0 and pt[2] == 0)
    assert (rec.count, rec.bound) == (7, 7)
    rec = codim_lattice_count([], 5, 3, predicate=lambda pt: sum(pt) % 2 == 0)
    assert rec.count == 63 and rec.count <= rec.bound
    assert codim_lattice_count([1], 10**4, 3).count == 10**8
    with pytest.raises(ValueError):
        codim_lattice_count([3], 5, 3)
    with pytest.raises(ValueError):
        codim_lattice_count([], 200, 3, predicate=lambda pt: True)


@pytest.mark.parametrize("q,d", [(2, 0), (2, 1), (3, 0), (5, 0)])
def test_fq_squarefree_density_against_bruteforce(q, d):
    res = fq_squarefree_disc_density(q, d)
    assert res.extra["mode"] == "exact"
    assert res.value == fq_squarefree_fraction_bruteforce(q, d)


def test_fq_squarefree_density_examples():
    assert fq_squarefree_disc_density(3, 0).value == Fraction(3, 4)
    assert fq_squarefree_disc_density(2, 1).value == Fraction(32, 4089)
    with pytest.raises(ValueError):
        fq_squarefree_disc_density(7, 0)


def test_sampled_mode_is_seeded():
    a = fq_squarefree_disc_density(5, 1, samples=300, seed=9)
    b = fq_squarefree_disc_density(5, 1, samples=300, seed=9)
    assert a.extra["mode"] == "sampled" and a.extra["samples"] == 300
    assert a.value == b.value

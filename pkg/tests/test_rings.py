from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from orbitcount.rings import (
    INFINITY,
    ArithmeticError_,
    FqPolynomial,
    InsufficientPrecision,
    IntPolynomial,
    PadicNumber,
    count_monic_irreducibles,
    disc_univariate,
    factorint,
    hensel_lift_root,
    is_prime,
    is_square_local,
    rational_roots,
    rational_roots_by_divisors,
    resultant,
    roots_mod_p,
    sylvester_resultant,
)
from oracles import sylvester

P = IntPolynomial
small_polys = st.lists(st.integers(-20, 20), min_size=1, max_size=6).filter(lambda cs: cs[-1] != 0)


def test_resultant_examples():
    # res(f, g) = g(1) for f = x - 1: the Sylvester determinant agrees
    assert resultant(P([-1, 1]), P([1, 1])) == sylvester([-1, 1], [1, 1]) == 2
    assert resultant(P([1, 0, 1]), P([1, 0, 1])) == 0
    assert resultant(P([0, -1, 0, 1]), P([-4, 0, 1])) == -36


def test_resultant_of_two_zeros_is_undefined():
    with pytest.raises(ArithmeticError_, match="undefined resultant"):
        resultant(P([]), P([]))


def test_discriminant_examples():
    assert disc_univariate(P([0, -1, 0, 1])) == 4
    assert disc_univariate(P([-1, 0, 1])) == 4
    assert disc_univariate(P([1, 0, 0, 0, 1])) == _disc_from_roots([1, 0, 0, 0, 1]) == 256
    with pytest.raises(ArithmeticError_):
        disc_univariate(P([5]))


def _disc_from_roots(cs):
    roots = np.roots(list(reversed(cs)))
    prod = 1
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            prod *= (roots[i] - roots[j]) ** 2
    assert abs(prod.imag) < 1e-6
    return round(prod.real) * cs[-1] ** (2 * len(roots) - 2)


def test_roots_mod_p_examples():
    assert roots_mod_p(P([1, 0, 1]), 5) == [2, 3]
    assert roots_mod_p(P([1, 0, 1]), 7) == []
    assert roots_mod_p(P([0, -1, 0, 1]), 3) == [0, 1, 2]
    with pytest.raises(ArithmeticError_, match="identically zero"):
        roots_mod_p(P([3, 6]), 3)


def test_hensel_examples():
    assert hensel_lift_root(P([1, 0, 1]), 5, 2, 2) == 7
    assert hensel_lift_root(P([-3, 1]), 7, 3, 4) == 3
    with pytest.raises(ArithmeticError_, match="Hensel hypothesis fails"):
        hensel_lift_root(P([0, 0, 1]), 2, 0, 2)


def test_local_squares():
    assert not is_square_local(-1, INFINITY)
    assert is_square_local(17, 2)
    assert not is_square_local(5, 5)
    assert not is_square_local(3, 2)
    with pytest.raises(ArithmeticError_, match="degenerate"):
        is_square_local(0, 3)


@settings(max_examples=500, deadline=None)
@given(small_polys, small_polys)
def test_resultant_antisymmetry_and_sylvester(f, g):
    F, G = P(f), P(g)
    if F.degree == 0 and G.degree == 0:
        return
    r = resultant(F, G)
    assert r == (-1) ** (F.degree * G.degree) * resultant(G, F)
    if F.degree >= 1 and G.degree >= 1:
        assert r == sylvester(f, g) == sylvester_resultant(F, G)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=3, max_size=5).filter(lambda cs: cs[-1] != 0), st.integers(-10, 10))
def test_discriminant_is_shift_invariant(cs, c):
    f = P(cs)
    shifted = f.compose_linear(c, 1)
    assert disc_univariate(shifted) == disc_univariate(f)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([3, 5, 7, 11, 13]), st.integers(0, 10**6), st.integers(2, 6))
def test_hensel_lift_is_stable(p, seed, k):
    # x^2 - a for a nonzero residue a that is a square
    r = seed % (p - 1) + 1
    f = P([-(r * r), 0, 1])
    s = hensel_lift_root(f, p, r, k)
    assert f(s) % p**k == 0 and s % p == r
    assert hensel_lift_root(f, p, s % p ** (k - 1), k) == s


@settings(max_examples=300, deadline=None)
@given(st.fractions().filter(lambda x: x != 0), st.sampled_from([2, 3, 5, 7, INFINITY]))
def test_squares_are_local_squares(x, place):
    assert is_square_local(x * x, place)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(-30, 30), min_size=2, max_size=6).filter(lambda cs: cs[0] != 0 and cs[-1] != 0))
def test_rational_roots_match_divisor_search(desc):
    assert rational_roots(desc) == rational_roots_by_divisors(desc)


def test_factorint_and_primality():
    assert factorint(2**5 * 3**2 * 1000003) == {2: 5, 3: 2, 1000003: 1}
    assert is_prime(2**61 - 1) and not is_prime(2**61 + 1)


def test_irreducible_counts_follow_necklace_formula():
    assert [count_monic_irreducibles(2, k) for k in range(1, 6)] == [2, 1, 2, 3, 6]
    assert count_monic_irreducibles(3, 2) == 3


def test_fq_polynomial_squarefree():
    t_plus_1 = FqPolynomial(2, [1, 1])
    assert not (t_plus_1 * t_plus_1).is_squarefree()
    assert FqPolynomial(3, [1, 0, 1]).is_squarefree()


def test_padic_square_needs_precision():
    assert PadicNumber.from_rational(17, 2).is_square()
    assert not PadicNumber.from_rational(Fraction(2, 3), 3).is_square()
    with pytest.raises(InsufficientPrecision):
        PadicNumber(2, 1, 0, 2).is_square()

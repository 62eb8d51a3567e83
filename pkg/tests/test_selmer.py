import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from orbitcount.invariants import BinaryQuartic, EllipticCurveAB, SingularError, gl2_action, quartic_invariants
from orbitcount.selmer import (
    OracleInapplicable,
    bad_primes,
    is_generic,
    isogeny_descent_oracle,
    locally_soluble,
    selmer2_average,
    selmer2_size,
    soluble_padic,
    soluble_real,
    two_torsion_count,
)
from oracles import quartic_soluble_search, random_unimodular

# search depths at which the exhaustive residue oracle is cheap
ORACLE_DEPTH = {2: 10, 3: 6, 5: 4, 7: 4}


def test_real_solubility():
    assert soluble_real(BinaryQuartic(1, 0, 0, 0, 1))
    assert not soluble_real(BinaryQuartic(-1, 0, -1, 0, -1))
    assert soluble_real(BinaryQuartic(0, 1, 0, -1, 0))
    with pytest.raises(ValueError):
        soluble_real(BinaryQuartic(1, 2, 1, 0, 0))


def test_padic_solubility_examples():
    unit_square = BinaryQuartic(1, 3, -2, 5, 7)
    rooted = BinaryQuartic(0, 1, 0, -1, 0)
    for p in (2, 3, 5, 7, 11, 13):
        assert soluble_padic(unit_square, p)
        assert soluble_padic(rooted, p)
    minus = BinaryQuartic(-1, 0, 0, 0, -1)
    assert soluble_padic(minus, 2) is quartic_soluble_search(minus.coeffs, 2, 10)


def test_local_solubility_examples():
    assert locally_soluble(BinaryQuartic(0, 1, 0, -1, 0))
    assert not locally_soluble(BinaryQuartic(-1, 0, -1, 0, -1))
    # found by scanning |coefficients| <= 3: soluble at infinity and at every odd bad prime, not at 2
    f = BinaryQuartic(-3, -2, -3, 0, 2)
    assert soluble_real(f)
    assert quartic_soluble_search(f.coeffs, 2, 10) is False
    assert not soluble_padic(f, 2)
    for p in bad_primes(f):
        if p != 2:
            assert soluble_padic(f, p)
    assert not locally_soluble(f)


def test_genericity_examples():
    assert not is_generic(BinaryQuartic(0, 1, 0, -1, 0))
    assert is_generic(BinaryQuartic(1, 0, 0, 0, 1))
    assert is_generic(BinaryQuartic(1, 0, -5, 0, 6))  # (x^2 - 2y^2)(x^2 - 3y^2)
    assert not is_generic(BinaryQuartic(1, 0, -5, 0, 4))  # (x^2 - y^2)(x^2 - 4y^2)


def test_padic_solubility_against_residue_search():
    rng = random.Random(1)
    checked = 0
    for _ in range(300):
        f = tuple(rng.randint(-6, 6) for _ in range(5))
        F = BinaryQuartic(*f)
        if F.disc() == 0:
            continue
        for p, k in ORACLE_DEPTH.items():
            expected = quartic_soluble_search(f, p, k)
            if expected is None:
                continue
            assert soluble_padic(F, p) == expected, (f, p)
            checked += 1
    assert checked > 1000


@settings(max_examples=100, deadline=None)
@given(st.tuples(*[st.integers(-5, 5)] * 5), st.integers(0, 10**9))
def test_local_solubility_is_unimodular_invariant(f, seed):
    F = BinaryQuartic(*f)
    if F.disc() == 0:
        return
    g = random_unimodular(random.Random(seed))
    assert locally_soluble(F) == locally_soluble(gl2_action(g, F))


def test_selmer_fixtures():
    # values produced by the isogeny-descent oracle
    assert isogeny_descent_oracle(EllipticCurveAB(-1, 0)) == 4
    assert isogeny_descent_oracle(EllipticCurveAB(1, 0)) == 2
    assert selmer2_size(EllipticCurveAB(-1, 0)).selmer_size == 4
    assert selmer2_size(EllipticCurveAB(1, 0)).selmer_size == 2
    with pytest.raises(SingularError):
        selmer2_size(EllipticCurveAB(-3, 2))
    with pytest.raises(OracleInapplicable, match="oracle inapplicable"):
        isogeny_descent_oracle(EllipticCurveAB(1, 1))


def test_reported_classes_carry_all_flags():
    for A, B in [(-1, 0), (-7, 6), (0, 2), (-2, 1), (5, -3)]:
        E = EllipticCurveAB(A, B)
        rep = selmer2_size(E)
        assert rep.selmer_size >= 1 and rep.selmer_size & (rep.selmer_size - 1) == 0
        assert rep.selmer_size >= two_torsion_count(E)
        assert rep.selmer_size == 1 + len(rep.classes)
        target = (-3 * A * 16, -27 * B * 64)
        for cls in rep.classes:
            f = cls.representative
            assert cls.flags["generic"] and cls.flags["real_soluble"] and cls.flags["locally_soluble"]
            assert is_generic(f) and locally_soluble(f)
            assert quartic_invariants(f).as_tuple() in {(-3 * A, -27 * B), target}


def test_selmer_on_random_small_curves_with_two_torsion():
    rng = random.Random(4)
    done = 0
    while done < 15:
        r, A = rng.randint(-6, 6), rng.randint(-40, 40)
        B = -r**3 - A * r
        if 4 * A**3 + 27 * B**2 == 0:
            continue
        E = EllipticCurveAB(A, B)
        assert selmer2_size(E).selmer_size == isogeny_descent_oracle(E), (A, B)
        done += 1


def test_average_at_height_one():
    res = selmer2_average(1)
    assert res.curve_count == 8
    sizes = [selmer2_size(EllipticCurveAB(r["A"], r["B"])).selmer_size for r in res.rows]
    assert res.total_selmer == sum(sizes)
    assert res.average == Fraction(sum(sizes), 8)
    assert [(r["A"], r["B"]) for r in res.rows] == [
        (-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1)
    ]
    with pytest.raises(ValueError, match="no curves"):
        selmer2_average(Fraction(1, 2))
    with pytest.raises(ValueError, match="smaller X"):
        selmer2_average(6)

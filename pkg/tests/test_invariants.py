import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from orbitcount.invariants import (
    BinaryQuartic,
    EllipticCurveAB,
    InvariantPair,
    QuadricPair,
    SingularError,
    TernaryCubic,
    curve_from_invariants,
    enumerate_quartics_with_invariants,
    gl2_action,
    invariants_from_curve,
    is_equivalent_z,
    quartic_disc,
    quartic_invariants,
    rational_transforms,
    reduce_quartic,
    resolvent_quartic,
    section_iota2,
    section_iota3,
    section_iota4,
    ternary_invariants,
    ternary_substitute,
    transform,
)
from orbitcount.rings import IntPolynomial, disc_univariate
from orbitcount.selmer import is_generic
from oracles import box_forms_with_invariants, classes_by_search, invariants_IJ, quartic_act, random_unimodular

coef = st.integers(-30, 30)
forms = st.tuples(coef, coef, coef, coef, coef)


def test_quartic_invariant_examples():
    assert quartic_invariants(BinaryQuartic(1, 0, 0, 0, 1)) == InvariantPair(12, 0)
    assert quartic_invariants(BinaryQuartic(0, 1, 0, -1, 0)) == InvariantPair(3, 0)
    assert quartic_disc(12, 0) == 256
    assert quartic_disc(3, 0) == 4
    assert quartic_disc(0, 0) == 0


def test_section_examples():
    assert section_iota2(3, 0).coeffs == (0, 1, 0, -1, 0)
    assert section_iota2(0, 27).coeffs == (0, 1, 0, 0, -1)
    assert section_iota2(0, 0).coeffs == (0, 1, 0, 0, 0)
    assert section_iota3(3, 0).coeffs == (1, 0, 0, 0, 0, -1, 0, -1, 0, 0)
    assert ternary_invariants(section_iota3(3, 0)) == InvariantPair(3, 0)


def test_fermat_cubic_jacobian():
    inv = ternary_invariants(TernaryCubic((1, 0, 0, 0, 0, 0, 1, 0, 0, 1)))
    assert inv == InvariantPair(0, Fraction(729, 4))
    E = curve_from_invariants(inv.I, inv.J)
    # y^2 = x^3 - 432 is the classical Jacobian; the two differ by u = 2 in B -> u^6 B
    assert E.A == 0 and E.B * 2**6 == -432


@settings(max_examples=300, deadline=None)
@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_sections_invert_invariants(I, J):
    assert quartic_invariants(section_iota2(I, J)).as_tuple() == (I, J)
    assert ternary_invariants(section_iota3(I, J)).as_tuple() == (I, J)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=10, max_size=10), st.lists(st.integers(-2, 2), min_size=9, max_size=9))
def test_ternary_invariants_are_invariant(cs, gs):
    g = [gs[0:3], gs[3:6], gs[6:9]]
    det = (g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
           + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]))
    f = TernaryCubic(tuple(cs))
    inv, moved = ternary_invariants(f), ternary_invariants(ternary_substitute(g, f))
    assert moved.I == det**4 * inv.I and moved.J == det**6 * inv.J


def test_section_iota4_entries():
    pair = section_iota4(6, 27)
    assert pair.B[2][3] == pair.B[3][2] == -1 and pair.B[3][3] == -1
    pair = section_iota4(6, 0)
    assert pair.B[2][3] == -1 and pair.B[3][3] == 0
    assert section_iota4(0, 0).B[3][3] == 0


def test_resolvent_examples():
    eye = tuple(tuple(int(i == j) for j in range(4)) for i in range(4))
    zero = tuple((0,) * 4 for _ in range(4))
    assert resolvent_quartic(QuadricPair(eye, eye)).coeffs == (1, 4, 6, 4, 1)
    assert resolvent_quartic(QuadricPair(eye, zero)).coeffs == (1, 0, 0, 0, 0)


@settings(max_examples=100, deadline=None)
@given(st.integers(-10**4, 10**4), st.integers(-10**4, 10**4))
def test_resolvent_of_section_has_the_same_invariants(I, J):
    # the scaling constant relating the two is 1
    assert quartic_invariants(resolvent_quartic(section_iota4(I, J))).as_tuple() == (I, J)


def test_curve_and_invariants():
    assert curve_from_invariants(3, 0) == EllipticCurveAB(-1, 0)
    assert curve_from_invariants(0, 27) == EllipticCurveAB(0, -1)
    with pytest.raises(SingularError, match="Δ = 0"):
        curve_from_invariants(0, 0)
    assert invariants_from_curve(EllipticCurveAB(-1, 0)) == InvariantPair(3, 0)
    assert invariants_from_curve(EllipticCurveAB(0, -1)) == InvariantPair(0, 27)
    assert invariants_from_curve(EllipticCurveAB(1, 1)) == InvariantPair(-3, -27)
    with pytest.raises(SingularError):
        EllipticCurveAB(-3, 2)


def test_gl2_examples():
    f = BinaryQuartic(1, 2, 3, 4, 5)
    assert gl2_action(((1, 0), (0, 1)), f) == f
    assert gl2_action(((0, 1), (1, 0)), f).coeffs == (5, 4, 3, 2, 1)
    assert gl2_action(((1, 0), (1, 1)), BinaryQuartic(1, 0, 0, 0, 0)).coeffs == (1, 4, 6, 4, 1)
    with pytest.raises(ValueError):
        gl2_action(((2, 0), (0, 1)), f)


@settings(max_examples=1000, deadline=None)
@given(forms, st.integers(0, 10**9))
def test_gl2_action_preserves_invariants(f, seed):
    g = random_unimodular(random.Random(seed))
    moved = gl2_action(g, BinaryQuartic(*f))
    assert moved.coeffs == quartic_act(f, g)
    assert quartic_invariants(moved) == quartic_invariants(BinaryQuartic(*f))


@settings(max_examples=300, deadline=None)
@given(forms)
def test_discriminant_detects_repeated_roots(f):
    F = BinaryQuartic(*f)
    if not any(f):
        return
    a, b, c, d, e = f
    if a == 0:
        if e == 0:
            # (1:0) and (0:1) are both roots; Δ vanishes iff one of them or another root repeats
            inner = IntPolynomial([d, c, b])
            expected_zero = b == 0 or d == 0 or (inner.degree >= 1 and disc_univariate(inner) == 0)
            assert (F.disc() == 0) == expected_zero
            return
        a, b, c, d, e = e, d, c, b, a
    poly = IntPolynomial([e, d, c, b, a])
    assert (F.disc() == 0) == (disc_univariate(poly) == 0)


@settings(max_examples=100, deadline=None)
@given(st.tuples(st.integers(1, 9), coef, coef, coef), st.integers(0, 10**9))
def test_forms_with_a_rational_root_are_not_generic(bcde, seed):
    f = BinaryQuartic(0, *bcde)
    if f.disc() == 0:
        return
    g = random_unimodular(random.Random(seed))
    assert not is_generic(gl2_action(g, f))


def test_reduction_examples():
    for f in [(1, 0, 0, 0, 1), (0, 1, 0, -1, 0)]:
        assert reduce_quartic(BinaryQuartic(*f)).coeffs == f
    with pytest.raises(ValueError):
        reduce_quartic(BinaryQuartic(1, 2, 1, 0, 0))


def test_reduction_undoes_a_large_shear():
    seed = BinaryQuartic(1, 0, 1, 0, 2)
    sheared = gl2_action(((1, 0), (10**6, 1)), seed)
    red = reduce_quartic(sheared)
    assert max(abs(c) for c in red.coeffs) <= 10
    assert is_equivalent_z(red, seed)


def test_reduction_round_trip():
    rng = random.Random(11)
    for _ in range(60):
        f = BinaryQuartic(*(rng.randint(-5, 5) for _ in range(5)))
        if f.disc() == 0:
            continue
        g = random_unimodular(rng, steps=6)
        red1, red2 = reduce_quartic(f), reduce_quartic(gl2_action(g, f))
        assert quartic_invariants(red1) == quartic_invariants(f)
        assert is_equivalent_z(red1, red2)


def test_equivalence_examples():
    rng = random.Random(7)
    f = BinaryQuartic(1, -2, 3, 1, 2)
    for _ in range(100):
        assert is_equivalent_z(f, gl2_action(random_unimodular(rng), f))
    assert not is_equivalent_z(BinaryQuartic(0, 1, 0, -1, 0), BinaryQuartic(0, 1, 0, -4, 1))
    # equal invariants (48, 0), different integral classes that merge over Q
    f1, f2 = BinaryQuartic(1, 0, 0, 0, 4), BinaryQuartic(0, 4, 0, -4, 0)
    assert quartic_invariants(f1) == quartic_invariants(f2)
    assert not is_equivalent_z(f1, f2)
    for g in rational_transforms(f1, f2):
        assert transform(f1, g) == f2


def test_enumerations_contain_the_sections():
    assert [f.coeffs for f in enumerate_quartics_with_invariants(3, 0)] == [(0, 1, 0, -1, 0)]
    assert [f.coeffs for f in enumerate_quartics_with_invariants(0, 27)] == [(0, 1, 0, 0, -1)]
    with pytest.raises(ValueError):
        enumerate_quartics_with_invariants(1, 2)


def test_enumeration_at_48_0_matches_box_search():
    box = box_forms_with_invariants(48, 0, 20)
    oracle_classes = classes_by_search(box, bound=3)
    listed = enumerate_quartics_with_invariants(48, 0)
    assert len(listed) == len(oracle_classes) == 11
    hit = set()
    for f in listed:
        assert invariants_IJ(f.coeffs) == (48, 0)
        owners = [i for i, cls in enumerate(oracle_classes) if f.coeffs in cls]
        assert len(owners) == 1
        hit.add(owners[0])
    assert len(hit) == 11

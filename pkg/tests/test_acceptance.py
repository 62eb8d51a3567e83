"""End-to-end acceptance checks; each records a one-line verdict printed after the run."""
import os
import random
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE
from oracles import fq_census_bruteforce
from orbitcount.cusp import (
    admissible_saturated,
    builtin_rep,
    check_condition2,
    check_condition3,
    so_even_root_bounds,
    so_even_witness,
    verify_root_witness,
    verify_witness,
)
from orbitcount.invariants import EllipticCurveAB, quartic_invariants, section_iota2, section_iota3, ternary_invariants
from orbitcount.masses import product_check
from orbitcount.rings import primes_up_to
from orbitcount.selmer import isogeny_descent_oracle, selmer2_average, selmer2_size, two_torsion_count
from orbitcount.sieve import disc_p2_density_exact, tail_count
from orbitcount.wps import (
    brute_force_minimal,
    congruence_count,
    count_minimal,
    davenport_experiment,
    enumerate_minimal,
    enumerate_minimal_fq,
    is_minimal,
    WpsPointQ,
)

W46 = (4, 6)
FULL = os.environ.get("ORBITCOUNT_FULL") == "1"


def record(n: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[n] = (ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def zeta10() -> float:
    value = 1.0
    for p in primes_up_to(10**5):
        value /= 1.0 - p**-10.0
    return value


def direct_minimal_count(X: int) -> int:
    """Independent count at integer X: only p = 2, 3 can have p^4 | A and p^6 | B inside the box for X <= 3."""
    assert X <= 3
    count = 0
    for A in range(-X**4, X**4 + 1):
        for B in range(-X**6, X**6 + 1):
            if (A, B) == (0, 0):
                continue
            if any(A % p**4 == 0 and B % p**6 == 0 for p in (2, 3)):
                continue
            count += 1
    return count


def test_criterion_1_section_identities():
    rng = random.Random(1)
    start = time.perf_counter()
    bad = 0
    for _ in range(1000):
        I, J = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
        bad += quartic_invariants(section_iota2(I, J)).as_tuple() != (I, J)
        bad += ternary_invariants(section_iota3(I, J)).as_tuple() != (I, J)
    elapsed = time.perf_counter() - start
    record(1, bad == 0 and elapsed < 10, f"1000 pairs, {bad} mismatches, {elapsed:.2f} s")


def test_criterion_2_curve_census_constant():
    z = zeta10()
    ratios = {}
    for X in (3, 4, 5):
        ratios[X] = count_minimal(X, W46) / (4 * X**10 / z)
    listed = [p.coords for p in enumerate_minimal(3, W46)]
    brute_equal = listed == brute_force_minimal(3, W46) and len(listed) == direct_minimal_count(3)
    ok = brute_equal and all(abs(r - 1) <= 0.10 for r in ratios.values())
    detail = ", ".join(f"X={X}: ratio {r:.5f}" for X, r in ratios.items()) + f"; brute force at X=3 {'matches' if brute_equal else 'differs'}"
    record(2, ok, detail)


def test_criterion_3_cusp_verifications():
    start = time.perf_counter()
    failures = []
    # binary quartic
    bq = builtin_rep("binary-quartic")
    if admissible_saturated(bq) != [frozenset()]:
        failures.append("binary: admissible sets")
    if not (check_condition2(bq).passed and check_condition3(bq).passed):
        failures.append("binary: LP")
    outside_sum = [d + s for d, s in zip(bq.delta, bq.character_sum())]
    if outside_sum != [-1] or not verify_witness(bq, set(), {}):
        failures.append("binary: delta = -alpha")
    if not verify_root_witness(bq, 0, {"x^3y": -1}):
        failures.append("binary: alpha = -chi_{x^3y}")
    # ternary cubic
    tc = builtin_rep("ternary-cubic")
    expected = [frozenset(), frozenset({"x^3"}), frozenset({"x^3", "x^2y"})]
    if admissible_saturated(tc) != expected:
        failures.append("ternary: admissible sets")
    if not (check_condition2(tc).passed and check_condition3(tc).passed):
        failures.append("ternary: LP")
    for eps in (Fraction(1, 100), Fraction(1, 2), Fraction(99, 100)):
        if not verify_witness(tc, expected[1], {"x^2y": eps}):
            failures.append(f"ternary: eps chi_x2y, eps = {eps}")
    for e1, e2 in [(Fraction(11, 10), Fraction(1, 2)), (Fraction(3, 2), Fraction(1, 4)), (Fraction(101, 100), Fraction(97, 100))]:
        if not verify_witness(tc, expected[2], {"x^2z": e1, "xy^2": e2}):
            failures.append(f"ternary: ({e1}, {e2})")
    # even orthogonal family
    counts = {}
    for n in (1, 2, 3):
        rep = builtin_rep("so-even", n)
        c2, c3 = check_condition2(rep), check_condition3(rep)
        counts[n] = len(c2.cases)
        if not (c2.passed and c3.passed):
            failures.append(f"so-even {n}: LP")
        for case in c2.cases:
            if not verify_witness(rep, case.subject, case.witness):
                failures.append(f"so-even {n}: LP witness for {case.subject}")
        for U in admissible_saturated(rep):
            bounds = so_even_root_bounds(rep, n, U)
            witness = so_even_witness(rep, n, U, Fraction(1, 1000)) if U else {}
            if bounds is None or not verify_witness(rep, U, witness):
                failures.append(f"so-even {n}: hand witness for {sorted(U)}")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 300
    detail = f"admissible so-even sets {counts}, {elapsed:.1f} s" + (f"; failures {failures[:5]}" if failures else "")
    record(3, ok, detail)


def curves_with_two_torsion(X: int):
    for pt in enumerate_minimal(X, W46):
        A, B = pt.coords
        if 4 * A**3 + 27 * B**2 == 0:
            continue
        E = EllipticCurveAB(A, B)
        if two_torsion_count(E) > 1:
            yield E


def random_two_torsion_curves(count: int, X: int, seed: int):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        r = rng.randint(-X**2, X**2)
        A = rng.randint(-X**4, X**4)
        B = -r**3 - A * r
        if abs(B) > X**6 or 4 * A**3 + 27 * B**2 == 0 or not is_minimal(WpsPointQ((A, B), W46)):
            continue
        out.append(EllipticCurveAB(A, B))
    return out


@pytest.mark.slow
def test_criterion_4_selmer_oracle_agreement():
    mismatches = []
    exhaustive = 0
    for E in curves_with_two_torsion(3):
        exhaustive += 1
        if selmer2_size(E).selmer_size != isogeny_descent_oracle(E):
            mismatches.append((E.A, E.B))
    for E in random_two_torsion_curves(10, 6, 20261016):
        if selmer2_size(E).selmer_size != isogeny_descent_oracle(E):
            mismatches.append((E.A, E.B))
    fixtures = isogeny_descent_oracle(EllipticCurveAB(-1, 0)) == 4 and isogeny_descent_oracle(EllipticCurveAB(1, 0)) == 2
    fixtures = fixtures and selmer2_size(EllipticCurveAB(-1, 0)).selmer_size == 4 and selmer2_size(EllipticCurveAB(1, 0)).selmer_size == 2
    ok = not mismatches and fixtures
    record(4, ok, f"{exhaustive} curves of height <= 3 plus 10 random of height <= 6, mismatches {mismatches[:5]}")


@pytest.mark.slow
def test_criterion_5_selmer_average_corridor():
    heights = (2, 3, 4) if FULL else (2,)
    jobs = int(os.environ.get("ORBITCOUNT_JOBS", "1"))
    parts, ok = [], True
    for X in heights:
        res = selmer2_average(X, jobs=jobs)
        avg, gen = res.average, res.generic_class_average
        ok = ok and 1 <= avg <= 6 and gen <= 4
        parts.append(f"X={X}: {res.curve_count} curves, average {float(avg):.4f}, generic classes {float(gen):.4f}")
    if not FULL:
        ok = False
        parts.append("X=3 and X=4 not run (set ORBITCOUNT_FULL=1; hours to days on one core)")
    record(5, ok, "; ".join(parts))


def test_criterion_6_mass_product():
    rng = random.Random(6)
    start = time.perf_counter()
    values = []
    while len(values) < 20:
        A, B = rng.randint(-10**4, 10**4), rng.randint(-10**4, 10**4)
        if 4 * A**3 + 27 * B**2:
            values.append(product_check((A, B), 100))
    elapsed = time.perf_counter() - start
    record(6, all(v == 1 for v in values) and elapsed < 1, f"20 curves, distinct products {sorted(str(v) for v in set(values))}, {elapsed:.3f} s")


def test_criterion_7_sieve_shapes():
    scaled = {p: disc_p2_density_exact(p).value * p * p for p in (2, 3, 5, 7, 11, 13)}
    shape_ok = all(v <= 30 for v in scaled.values())
    ratios = {M: Fraction(tail_count(3, M).count * M, 3**10) for M in (10, 100, 1000)}
    lo, hi = min(ratios.values()), max(ratios.values())
    tail_ok = lo > 0 and hi <= 4 * lo
    detail = (
        f"max p^2 density {max(scaled.values())}; tail ratios "
        + ", ".join(f"M={M}: {float(r):.3f}" for M, r in ratios.items())
    )
    if not tail_ok:
        detail += " (no prime above 1000 has its square dividing a height-3 discriminant)"
    record(7, shape_ok and tail_ok, detail)


def test_criterion_8_geometry_of_numbers():
    rng = random.Random(8)
    cases = []
    for _ in range(500):
        s = Fraction(rng.randint(-200, 200), 100)
        rec = davenport_experiment(shear=s, t1=rng.randint(1, 200), t2=rng.randint(1, 200))
        cases.append(abs(rec.count - rec.volume) / (rec.projection_bound + 1))
    C_fit = max(cases[:250])
    held_out = all(c <= 2 * C_fit for c in cases[250:])
    C = max(cases)
    cong_ok = True
    for _ in range(200):
        n = rng.randint(1, 3)
        m = rng.randint(1, 12)
        L = rng.randint(1, 60)
        targets = [tuple(rng.randrange(m) for _ in range(n)) for _ in range(rng.randint(1, 6))]
        rec = congruence_count(L, m, targets, n)
        cong_ok = cong_ok and rec.count <= 2 * rec.bound
    ok = held_out and C <= 4 and cong_ok
    record(8, ok, f"fitted C = {float(C):.4f} (first half {float(C_fit):.4f}); congruence counts within 2x bound: {cong_ok}")


@pytest.mark.slow
def test_criterion_9_function_field_census():
    results = {}
    for q, d in [(2, 1), (3, 1), (2, 2)]:
        ours = sum(1 for _ in enumerate_minimal_fq(q, d, W46))
        results[(q, d)] = (ours, fq_census_bruteforce(q, d))
    ok = all(a == b for a, b in results.values())
    record(9, ok, ", ".join(f"(q,d)={k}: {a} vs {b}" for k, (a, b) in results.items()))

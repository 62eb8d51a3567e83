"""2-Selmer groups over Q from locally soluble classes of binary quartics.

The main path counts generic, everywhere locally soluble GL_2(Q)-classes of
integral quartics with the invariants of the curve. The independent check
runs a second descent through the 2-torsion algebra for curves with a
rational 2-torsion point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .conics import conic_point
from .invariants import (
    BinaryQuartic,
    EllipticCurveAB,
    InvariantPair,
    SingularError,
    coefficient_bounds,
    is_equivalent_q,
    quartic_disc,
    quartic_invariants,
    reduce_quartic,
    scan_quartics,
)
from .rings import IntPolynomial, factorint, legendre, primes_up_to, rational_roots, squarefree_part, valuation
from .wps import enumerate_minimal, height, WpsPointQ

SMALL_PRIME_BOUND = 29


class Undecided(ArithmeticError):
    """Local solubility could not be certified within the search depth."""

    def __init__(self, p: int, f: BinaryQuartic):
        super().__init__(f"undecided at p = {p} for {f}")
        self.p = p
        self.form = f


class OracleInapplicable(ValueError):
    pass


# ---------------------------------------------------------------------------
# local solubility


def _sturm_real_root_count(coeffs_desc: Sequence[int]) -> int:
    """Number of distinct real roots of a squarefree polynomial, by a Sturm chain."""
    p0 = [Fraction(c) for c in coeffs_desc]
    while p0 and p0[0] == 0:
        p0.pop(0)
    n = len(p0) - 1
    if n <= 0:
        return 0
    p1 = [c * (n - i) for i, c in enumerate(p0[:-1])]
    chain = [p0, p1]
    while len(chain[-1]) > 1:
        num, den = chain[-2][:], chain[-1]
        while len(num) >= len(den):
            q = num[0] / den[0]
            for i in range(len(den)):
                num[i] -= q * den[i]
            num.pop(0)
        while num and num[0] == 0:
            num.pop(0)
        if not num:
            break
        chain.append([-c for c in num])

    def sign_changes(at_pos: bool) -> int:
        signs = []
        for poly in chain:
            deg = len(poly) - 1
            lead = poly[0]
            s = 1 if lead > 0 else -1
            if not at_pos and deg % 2:
                s = -s
            signs.append(s)
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    return sign_changes(False) - sign_changes(True)


def _require_nonsingular(f: BinaryQuartic) -> None:
    if f.disc() == 0:
        raise SingularError("Δ = 0")


def soluble_real(f: BinaryQuartic) -> bool:
    _require_nonsingular(f)
    if f.a >= 0:
        return True
    return _sturm_real_root_count(f.coeffs) > 0


def _padic_depth_cap(f: BinaryQuartic, p: int) -> int:
    disc = f.disc()
    return 2 * valuation(disc, p) + 3 + (3 if p == 2 else 0)


def _disc_has_square(poly: IntPolynomial, shift: int, p: int, depth: int, cap: int) -> bool | None:
    """Whether p^shift * poly(u) is a square in Q_p for some u in Z_p.

    None means some branch reached the depth cap without a decision and no
    other branch produced a square.
    """
    cs = poly.coeffs
    if not cs or cs[0] == 0:
        return True  # the disc centre is a root: a point with z = 0
    content = min(valuation(c, p) for c in cs if c)
    if content:
        poly = IntPolynomial([c // p**content for c in cs])
        cs = poly.coeffs
        shift += content
    need = p**3 if p == 2 else p
    if cs[0] % p and all(c % need == 0 for c in cs[1:]):
        if shift % 2:
            return False
        return cs[0] % 8 == 1 if p == 2 else legendre(cs[0], p) == 1
    if depth >= cap:
        return None
    undecided = False
    for r in range(p):
        verdict = _disc_has_square(poly.compose_linear(r, p), shift, p, depth + 1, cap)
        if verdict:
            return True
        undecided |= verdict is None
    return None if undecided else False


def soluble_padic(f: BinaryQuartic, p: int) -> bool:
    """Whether z^2 = f(x, y) has a point over Q_p.

    P^1(Q_p) is covered by (t : 1) with t in Z_p and (1 : p s) with s in Z_p.
    Each chart is searched by splitting Z_p into residue discs until the value
    on a disc is a fixed power of p times a unit whose square class is constant.
    """
    _require_nonsingular(f)
    if not f.is_integral():
        raise ValueError("integral form expected")
    cap = _padic_depth_cap(f, p)
    a, b, c, d, e = f.coeffs
    chart_affine = IntPolynomial([e, d, c, b, a])  # f(t, 1)
    chart_infinity = IntPolynomial([a, b * p, c * p**2, d * p**3, e * p**4])  # f(1, p s)
    verdicts = []
    for chart in (chart_affine, chart_infinity):
        verdict = _disc_has_square(chart, 0, p, 0, cap)
        if verdict:
            return True
        verdicts.append(verdict)
    if None in verdicts:
        raise Undecided(p, f)
    return False


def bad_primes(f: BinaryQuartic) -> list[int]:
    """Primes at which solubility is tested: divisors of 6 * disc plus all p <= 29."""
    disc = f.disc()
    num = abs(disc.numerator) * disc.denominator * 6
    primes = set(factorint(num)) | set(primes_up_to(SMALL_PRIME_BOUND))
    return sorted(primes)


def locally_soluble(f: BinaryQuartic) -> bool:
    if not soluble_real(f):
        return False
    return all(soluble_padic(f, p) for p in bad_primes(f))


def is_generic(f: BinaryQuartic) -> bool:
    """No rational root on P^1."""
    _require_nonsingular(f)
    if f.a == 0:
        return False
    return not rational_roots(list(f.coeffs))


# ---------------------------------------------------------------------------
# the main path


@dataclass
class QuarticClass:
    representative: BinaryQuartic
    invariants: InvariantPair
    flags: dict = field(default_factory=dict)


@dataclass
class SelmerReport:
    curve: EllipticCurveAB
    classes: list[QuarticClass]
    selmer_size: int
    method: str
    audit_flags: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "A": self.curve.A,
            "B": self.curve.B,
            "selmer_size": self.selmer_size,
            "method": self.method,
            "class_count": len(self.classes),
            "classes": [
                {"coeffs": list(c.representative.coeffs), "I": c.invariants.I, "J": c.invariants.J, "flags": c.flags}
                for c in self.classes
            ],
            "audit_flags": self.audit_flags,
        }


def scan_invariants(E: EllipticCurveAB) -> InvariantPair:
    """(2^4 I, 2^6 J) for the curve's own (I, J) = (-3A, -27B)."""
    A, B = E.A, E.B
    if not (isinstance(A, int) and isinstance(B, int)):
        raise ValueError("integral Weierstrass coefficients expected")
    return InvariantPair(-48 * A, -1728 * B)


def two_torsion_count(E: EllipticCurveAB) -> int:
    return 1 + len(E.two_torsion_roots())


def _power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def selmer_candidates(E: EllipticCurveAB) -> list[BinaryQuartic]:
    """Generic, real-soluble integral forms found by the seminvariant scan, reduced and deduplicated.

    Local solubility at finite primes is left to the caller: it is constant on
    rational classes, so testing one representative per class is enough.
    """
    inv = scan_invariants(E)
    a_max, h_max = coefficient_bounds(inv.I, inv.J, include_negative_definite=False)
    out: dict[tuple, BinaryQuartic] = {}
    seen = set()
    for f in scan_quartics(inv.I, inv.J, a_max, h_max):
        if f.coeffs in seen:
            continue
        seen.add(f.coeffs)
        if not soluble_real(f) or not is_generic(f):
            continue
        red = reduce_quartic(f)
        out.setdefault(red.coeffs, red)
    return [out[k] for k in sorted(out)]


def group_rational_classes(forms: Iterable[BinaryQuartic]) -> list[BinaryQuartic]:
    """Reduced representatives of the distinct GL_2(Q)-classes among `forms`."""
    reps: list[BinaryQuartic] = []
    seen: set = set()
    for f in forms:
        red = reduce_quartic(f)
        if red.coeffs in seen:
            continue
        seen.add(red.coeffs)
        if not any(is_equivalent_q(red, other) for other in reps):
            reps.append(red)
    return sorted(reps, key=lambda f: f.coeffs)


def selmer2_size(E: EllipticCurveAB) -> SelmerReport:
    if not isinstance(E, EllipticCurveAB):
        E = EllipticCurveAB(*E)
    inv = scan_invariants(E)
    classes = []
    for f in group_rational_classes(selmer_candidates(E)):
        primes = bad_primes(f)
        if not all(soluble_padic(f, p) for p in primes):
            continue
        classes.append(
            QuarticClass(
                f,
                quartic_invariants(f),
                {"generic": True, "real_soluble": True, "locally_soluble": True, "bad_primes_checked": primes},
            )
        )
    size = 1 + len(classes)
    flags = []
    if not _power_of_two(size):
        flags.append("size-not-power-of-two")
    if size < two_torsion_count(E):
        flags.append("below-two-torsion")
    for cls in classes:
        if cls.invariants != inv:
            flags.append("invariant-mismatch")
    return SelmerReport(E, classes, size, "orbit-descent", flags)


# ---------------------------------------------------------------------------
# Hilbert symbols and conics


def _split_p(x: int, p: int) -> tuple[int, int]:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v, x


def hilbert_symbol(a: int | Fraction, b: int | Fraction, p: int | str) -> int:
    """(a, b)_p for nonzero rationals; p = 'inf' for the real place."""
    a, b = _square_class(a), _square_class(b)
    if p == "inf":
        return -1 if a < 0 and b < 0 else 1
    alpha, u = _split_p(a, p)
    beta, v = _split_p(b, p)
    if p == 2:
        eps = lambda t: ((t - 1) // 2) % 2
        omega = lambda t: ((t * t - 1) // 8) % 2
        e = (eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)) % 2
        return -1 if e else 1
    s = (-1) ** (alpha * beta * ((p - 1) // 2) % 2)
    s *= legendre(u, p) ** beta * legendre(v, p) ** alpha
    return s


def _square_class(x: int | Fraction) -> int:
    x = Fraction(x)
    if x == 0:
        raise ValueError("zero has no square class")
    return squarefree_part(x.numerator * x.denominator)


def conic_locally_soluble(coeffs: Sequence[int | Fraction], places: Iterable) -> bool:
    """Diagonal conic a x^2 + b y^2 + c z^2 = 0 at each place in `places`."""
    a, b, c = coeffs
    return all(hilbert_symbol(-a * c, -b * c, p) == 1 for p in places)


def _conic_point(matrix: Sequence[Sequence[Fraction]]) -> tuple[int, int, int] | None:
    return conic_point(matrix)


def _quad_eval(matrix, u, w):
    return sum(matrix[i][j] * u[i] * w[j] for i in range(3) for j in range(3))


def parametrize_conic(matrix: Sequence[Sequence[Fraction]], point: Sequence[int]) -> list[list[Fraction]]:
    """Three binary quadratic forms (coefficients of m^2, mn, n^2) parametrizing the conic.

    Uses v = Q(u) p - 2 B(p, u) u with u = m t1 + n t2 for two vectors completing p to a basis.
    """
    p = [Fraction(x) for x in point]
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for i in range(3):
        for j in range(i + 1, 3):
            t1, t2 = basis[i], basis[j]
            det = (
                p[0] * (t1[1] * t2[2] - t1[2] * t2[1])
                - p[1] * (t1[0] * t2[2] - t1[2] * t2[0])
                + p[2] * (t1[0] * t2[1] - t1[1] * t2[0])
            )
            if det:
                break
        else:
            continue
        break
    M = [[Fraction(x) for x in row] for row in matrix]
    # Q(u) = q11 m^2 + q12 mn + q22 n^2 and B(p, u) = l1 m + l2 n
    q11 = _quad_eval(M, t1, t1)
    q22 = _quad_eval(M, t2, t2)
    q12 = 2 * _quad_eval(M, t1, t2)
    l1 = _quad_eval(M, p, t1)
    l2 = _quad_eval(M, p, t2)
    forms = []
    for k in range(3):
        # q(m,n) p_k - 2 (l1 m + l2 n)(m t1_k + n t2_k)
        forms.append([
            q11 * p[k] - 2 * l1 * t1[k],
            q12 * p[k] - 2 * (l1 * t2[k] + l2 * t1[k]),
            q22 * p[k] - 2 * l2 * t2[k],
        ])
    return forms


def _qmul(u, v):
    """Product of binary forms given by descending coefficient lists."""
    out = [Fraction(0)] * (len(u) + len(v) - 1)
    for i, x in enumerate(u):
        for j, y in enumerate(v):
            out[i + j] += x * y
    return out


def _qadd(*terms):
    out = [Fraction(0)] * max(len(t) for t in terms)
    for t in terms:
        for i, x in enumerate(t):
            out[i] += x
    return out


def _qscale(k, u):
    return [k * x for x in u]


def integral_primitive_quartic(coeffs: Sequence[Fraction]) -> BinaryQuartic:
    """Scale by a rational square to an integral form with squarefree content."""
    cs = [Fraction(c) for c in coeffs]
    den = math.lcm(*(c.denominator for c in cs))
    ints = [int(c * den * den) for c in cs]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    square = 1
    for p, e in factorint(g).items() if g > 1 else []:
        square *= p ** (e // 2)
    return BinaryQuartic(*(x // (square * square) for x in ints))


def _check_cover_invariants(f: BinaryQuartic, E: EllipticCurveAB) -> None:
    """A 2-covering of E has invariants (lambda^4 I, lambda^6 J) for E's own (I, J)."""
    inv = quartic_invariants(f)
    I0, J0 = -3 * Fraction(E.A), -27 * Fraction(E.B)
    ok = Fraction(inv.I) ** 3 * J0**2 == Fraction(inv.J) ** 2 * I0**3
    if I0 == 0:
        ok = inv.I == 0
    if J0 == 0:
        ok = inv.J == 0
    if not ok or f.disc() == 0:
        raise AssertionError(f"cover {f} does not match {E}")


# ---------------------------------------------------------------------------
# the second-descent oracle


def _signed_squarefree_products(primes: Sequence[int]) -> list[int]:
    out = []
    for signs in (1, -1):
        for mask in range(1 << len(primes)):
            v = signs
            for i, p in enumerate(primes):
                if mask >> i & 1:
                    v *= p
            out.append(v)
    return out


def _els(f: BinaryQuartic) -> bool:
    return locally_soluble(f)


def _oracle_full_torsion(E: EllipticCurveAB, roots: list[int]) -> int:
    e1, e2, e3 = roots
    bad = abs((e1 - e2) * (e1 - e3) * (e2 - e3))
    primes = sorted(set(factorint(2 * bad)))
    places = primes + ["inf"]
    group = _signed_squarefree_products(primes)
    count = 0
    for b1, b2 in product(group, repeat=2):
        # b1 z1^2 - b2 z2^2 = (e2 - e1) w^2 and its companions
        if not conic_locally_soluble((b1, -b2, -(e2 - e1)), places):
            continue
        if not conic_locally_soluble((b1, -b1 * b2, -(e3 - e1)), places):
            continue
        if not conic_locally_soluble((b2, -b1 * b2, -(e3 - e2)), places):
            continue
        M = [[Fraction(b1), 0, 0], [0, Fraction(-b2), 0], [0, 0, Fraction(-(e2 - e1))]]
        pt = _conic_point(M)
        if pt is None:
            continue
        z1, z2, w = parametrize_conic(M, pt)
        inner = _qadd(_qscale(b1, _qmul(z1, z1)), _qscale(-(e3 - e1), _qmul(w, w)))
        quartic = integral_primitive_quartic(_qscale(b1 * b2, inner))
        _check_cover_invariants(quartic, E)
        if _els(quartic):
            count += 1
    return count


def _norm_form_point(c: int, d: int) -> tuple[int, int, int] | None:
    """X, Y, Z with X^2 - c Y^2 = d Z^2 and Z != 0."""
    M = [[Fraction(1), 0, 0], [0, Fraction(-c), 0], [0, 0, Fraction(-d)]]
    pt = _conic_point(M)
    if pt is None:
        return None
    X, Y, Z = pt
    if Z == 0:
        # an isotropic vector with Z = 0 forces c to be a square; excluded by the caller
        return None
    return X, Y, Z


def _phi_dual_selmer(a: int, b: int) -> list[int]:
    """Signed squarefree d | b with d W^2 = d^2 z^4 + a d z^2 + b locally soluble."""
    out = []
    for d in _signed_squarefree_products(sorted(factorint(abs(b)))):
        f = BinaryQuartic(d * d, 0, a * d, 0, b)
        f = integral_primitive_quartic([Fraction(x, 1) * d for x in f.coeffs])  # d * (d^2, 0, a d, 0, b)
        if f.disc() != 0 and _els(f):
            out.append(d)
    return out


def _oracle_one_root(E: EllipticCurveAB, e1: int) -> int:
    a = 3 * e1
    b = 3 * e1 * e1 + E.A
    c = a * a - 4 * b
    c_sf = squarefree_part(c)
    count = 0
    bad = set(factorint(2 * abs(b) * abs(c)))
    for d in _phi_dual_selmer(a, b):
        point = _norm_form_point(c, d)
        if point is None:
            continue
        X, Y, Z = point
        beta1, beta2 = Fraction(X, Z), Fraction(Y, Z)
        primes = sorted(bad | set(factorint(abs(Z))) | set(factorint(abs(X) or 1)) | set(factorint(abs(Y) or 1)))
        seen: set[int] = set()
        for e in _signed_squarefree_products(primes):
            key = min(e, squarefree_part(e * c_sf), key=lambda t: (abs(t), t))
            if key in seen:
                continue
            seen.add(key)
            b1, b2 = e * beta1, e * beta2
            # w^2 = -2 (b2 m^2 + 2 b1 m n + c b2 n^2)
            M = [[-2 * b2, -2 * b1, 0], [-2 * b1, -2 * c * b2, 0], [0, 0, Fraction(-1)]]
            pt = _conic_point(M)
            if pt is None:
                continue
            R, S, W = parametrize_conic(M, pt)
            G = _qadd(
                _qscale(b1, _qadd(_qmul(R, R), _qscale(c, _qmul(S, S)))),
                _qscale(2 * c * b2, _qmul(R, S)),
                _qscale(Fraction(-a, 2), _qmul(W, W)),
            )
            quartic = integral_primitive_quartic(_qscale(d, G))
            _check_cover_invariants(quartic, E)
            if _els(quartic):
                count += 1
    return count


def isogeny_descent_oracle(E: EllipticCurveAB) -> int:
    """|Sel_2(E)| by descent through the 2-torsion algebra, for curves with a rational 2-torsion point.

    With full 2-torsion the Selmer group sits in pairs (b1, b2) of square
    classes; otherwise in pairs (d, beta) with beta in the quadratic field
    cut out by the other two roots. Every candidate becomes an explicit
    quartic 2-covering whose local solubility decides membership.
    """
    if not isinstance(E, EllipticCurveAB):
        E = EllipticCurveAB(*E)
    roots = [int(r) for r in E.two_torsion_roots()]
    if not roots:
        raise OracleInapplicable("oracle inapplicable: no rational 2-torsion")
    if len(roots) == 3:
        return _oracle_full_torsion(E, sorted(roots))
    return _oracle_one_root(E, roots[0])


# ---------------------------------------------------------------------------
# family averages


@dataclass
class SelmerAverage:
    curve_count: int
    total_selmer: int
    average: Fraction
    rows: list[dict]

    @property
    def generic_class_average(self) -> Fraction:
        return Fraction(sum(r["class_count"] for r in self.rows), self.curve_count)


CURVE_COUNT_GUARD = 10**7


def estimated_curve_count(X: float) -> float:
    return 4 * float(X) ** 10


def iter_curves(X) -> Iterable[tuple[EllipticCurveAB, object]]:
    for pt in enumerate_minimal(X, (4, 6)):
        A, B = pt.coords
        if 4 * A**3 + 27 * B**2 == 0:
            continue
        yield EllipticCurveAB(A, B), height(pt)


def _curve_row(item) -> tuple[int, dict]:
    E, h, size_function = item
    rep = (size_function or selmer2_size)(E)
    return rep.selmer_size, {
        "A": E.A,
        "B": E.B,
        "height": str(h),
        "selmer_size": rep.selmer_size,
        "class_count": len(rep.classes),
        "audit_flags": ";".join(rep.audit_flags),
    }


def selmer2_average(X, size_function=None, jobs: int = 1) -> SelmerAverage:
    """Average 2-Selmer size over nonsingular minimal (A, B) of height at most X.

    Rows come out in enumeration order whatever the number of worker processes.
    """
    if Fraction(X) < 1:
        raise ValueError("no curves")
    if estimated_curve_count(X) > CURVE_COUNT_GUARD:
        raise ValueError(f"about {estimated_curve_count(X):.3g} curves at X = {X}; choose a smaller X")
    items = ((E, h, size_function) for E, h in iter_curves(X))
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            results = list(pool.imap(_curve_row, items, chunksize=16))
    else:
        results = [_curve_row(item) for item in items]
    if not results:
        raise ValueError("no curves")
    total = sum(size for size, _ in results)
    rows = [row for _, row in results]
    return SelmerAverage(len(rows), total, Fraction(total, len(rows)), rows)

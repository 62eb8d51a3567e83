"""Invariants, sections and integral reduction for binary quartics, ternary
cubics and pairs of quaternary quadrics.

Binary quartics a x^4 + b x^3 y + c x^2 y^2 + d x y^3 + e y^4 carry the
invariants

    I = 12ae - 3bd + c^2
    J = 72ace + 9bcd - 27ad^2 - 27eb^2 - 2c^3

with discriminant (4 I^3 - J^2) / 27 and Jacobian y^2 = x^3 - (I/3) x - J/27.
GL_2 acts by f |-> f((x, y) g) / det(g)^2, which preserves I and J exactly.
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import mpmath
import numpy as np

from . import _ternary_data
from .rings import determinant, divisors, mpf_to_fraction

Number = int | Fraction
Matrix2 = tuple[tuple[Number, Number], tuple[Number, Number]]


def _normalize(x: Number) -> Number:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


class SingularError(ValueError):
    pass


# ---------------------------------------------------------------------------
# records


@dataclass(frozen=True)
class InvariantPair:
    I: Number
    J: Number

    @property
    def disc(self) -> Fraction:
        return quartic_disc(self.I, self.J)

    def as_tuple(self) -> tuple[Number, Number]:
        return (self.I, self.J)


@dataclass(frozen=True)
class BinaryQuartic:
    a: Number
    b: Number
    c: Number
    d: Number
    e: Number

    def __post_init__(self):
        for name in "abcde":
            object.__setattr__(self, name, _normalize(getattr(self, name)))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Number]) -> "BinaryQuartic":
        if len(coeffs) != 5:
            raise ValueError("a binary quartic has five coefficients")
        return cls(*coeffs)

    @property
    def coeffs(self) -> tuple[Number, ...]:
        return (self.a, self.b, self.c, self.d, self.e)

    def __call__(self, x, y):
        a, b, c, d, e = self.coeffs
        return a * x**4 + b * x**3 * y + c * x**2 * y**2 + d * x * y**3 + e * y**4

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def invariants(self) -> InvariantPair:
        return quartic_invariants(self)

    def disc(self) -> Fraction:
        inv = quartic_invariants(self)
        return quartic_disc(inv.I, inv.J)

    def seminvariants(self) -> tuple[Number, Number]:
        """(H, R): leading coefficients of the Hessian and sextic covariants."""
        a, b, c, d, _ = self.coeffs
        return 8 * a * c - 3 * b * b, b**3 + 8 * a * a * d - 4 * a * b * c

    def to_json(self) -> dict:
        return {"type": "binary_quartic", "coeffs": [str(c) if isinstance(c, Fraction) else c for c in self.coeffs]}

    def __str__(self) -> str:
        monos = ("x^4", "x^3*y", "x^2*y^2", "x*y^3", "y^4")
        parts = [f"{c}*{m}" for c, m in zip(self.coeffs, monos) if c]
        return " + ".join(parts).replace("+ -", "- ") or "0"


def quartic_invariants(f: BinaryQuartic) -> InvariantPair:
    a, b, c, d, e = f.coeffs
    I = 12 * a * e - 3 * b * d + c * c
    J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c**3
    return InvariantPair(_normalize(I), _normalize(J))


def quartic_disc(I: Number, J: Number) -> Fraction:
    return Fraction(4 * Fraction(I) ** 3 - Fraction(J) ** 2, 27)


def section_iota2(I: Number, J: Number) -> BinaryQuartic:
    return BinaryQuartic(0, 1, 0, -Fraction(I) / 3, -Fraction(J) / 27)


def hessian_covariant(f: BinaryQuartic) -> BinaryQuartic:
    """(f_xx f_yy - f_xy^2) / 3, a quartic covariant with leading coefficient 8ac - 3b^2."""
    a, b, c, d, e = f.coeffs
    return BinaryQuartic(
        8 * a * c - 3 * b * b,
        4 * (6 * a * d - b * c),
        2 * (24 * a * e + 3 * b * d - 2 * c * c),
        4 * (6 * b * e - c * d),
        8 * c * e - 3 * d * d,
    )


# ---------------------------------------------------------------------------
# elliptic curves


@dataclass(frozen=True)
class EllipticCurveAB:
    A: Number
    B: Number

    def __post_init__(self):
        object.__setattr__(self, "A", _normalize(Fraction(self.A)))
        object.__setattr__(self, "B", _normalize(Fraction(self.B)))
        if self.discriminant_form == 0:
            raise SingularError("Δ = 0")

    @property
    def discriminant_form(self) -> Number:
        """4A^3 + 27B^2 (zero exactly when the curve is singular)."""
        return 4 * self.A**3 + 27 * self.B**2

    def two_torsion_roots(self) -> list[Fraction]:
        from .rings import rational_roots

        A, B = Fraction(self.A), Fraction(self.B)
        den = math.lcm(A.denominator, B.denominator)
        # x^3 + A x + B with x = u / den scaled to a monic-free integer cubic
        coeffs = [1, 0, int(A * den**2), int(B * den**3)]
        return [r / den for r in rational_roots(coeffs)]


def curve_from_invariants(I: Number, J: Number) -> EllipticCurveAB:
    if 4 * Fraction(I) ** 3 == Fraction(J) ** 2:
        raise SingularError("Δ = 0")
    return EllipticCurveAB(-Fraction(I) / 3, -Fraction(J) / 27)


def invariants_from_curve(E: EllipticCurveAB) -> InvariantPair:
    return InvariantPair(_normalize(-3 * Fraction(E.A)), _normalize(-27 * Fraction(E.B)))


# ---------------------------------------------------------------------------
# the GL_2 action


def _linear_power(p: Number, q: Number, n: int) -> list[Number]:
    """Coefficients of (p x + q y)^n, descending in x."""
    return [math.comb(n, k) * p ** (n - k) * q**k for k in range(n + 1)]


def _mul_desc(u: list[Number], v: list[Number]) -> list[Number]:
    out = [0] * (len(u) + len(v) - 1)
    for i, x in enumerate(u):
        if x:
            for j, y in enumerate(v):
                out[i + j] += x * y
    return out


def substitute(f: BinaryQuartic, g: Matrix2) -> list[Number]:
    """Coefficients of f((x, y) g) without the determinant normalization."""
    (g11, g12), (g21, g22) = g
    # x' = g11 x + g21 y, y' = g12 x + g22 y
    out: list[Number] = [0] * 5
    for k, coef in enumerate(f.coeffs):
        if not coef:
            continue
        term = _mul_desc(_linear_power(g11, g21, 4 - k), _linear_power(g12, g22, k))
        for i, t in enumerate(term):
            out[i] += coef * t
    return out


def transform(f: BinaryQuartic, g: Matrix2) -> BinaryQuartic:
    """f((x, y) g) / det(g)^2 for any invertible rational g."""
    (g11, g12), (g21, g22) = g
    det = g11 * g22 - g12 * g21
    if det == 0:
        raise ValueError("singular matrix")
    det2 = Fraction(det) ** 2
    return BinaryQuartic(*(Fraction(c) / det2 for c in substitute(f, g)))


def gl2_action(g: Matrix2, f: BinaryQuartic) -> BinaryQuartic:
    (g11, g12), (g21, g22) = g
    det = g11 * g22 - g12 * g21
    if abs(det) != 1:
        raise ValueError("|det g| must be 1")
    return BinaryQuartic(*substitute(f, g))


def matmul2(g: Matrix2, h: Matrix2) -> Matrix2:
    (a, b), (c, d) = g
    (e, f), (p, q) = h
    return ((a * e + b * p, a * f + b * q), (c * e + d * p, c * f + d * q))


IDENTITY: Matrix2 = ((1, 0), (0, 1))


# ---------------------------------------------------------------------------
# ternary cubics

TERNARY_MONOMIALS = ("x^3", "x^2*y", "x^2*z", "x*y^2", "x*y*z", "x*z^2", "y^3", "y^2*z", "y*z^2", "z^3")


def _integer_form(poly: dict) -> tuple[int, list[tuple[tuple[int, ...], int]]]:
    den = math.lcm(*(v.denominator for v in poly.values()))
    return den, [(mono, int(v * den)) for mono, v in poly.items()]


_DEGREE4 = _integer_form(_ternary_data.DEGREE4)
_DEGREE6 = _integer_form(_ternary_data.DEGREE6)


def _evaluate_int(form, coeffs) -> Number:
    den, terms = form
    total = 0
    for mono, v in terms:
        term = v
        for c, e in zip(coeffs, mono):
            if e:
                term *= c**e
        total += term
    return _normalize(Fraction(total) / den) if not isinstance(total, Fraction) else _normalize(total / den)


@dataclass(frozen=True)
class TernaryCubic:
    coeffs: tuple[Number, ...]

    def __post_init__(self):
        cs = tuple(_normalize(Fraction(c)) for c in self.coeffs)
        if len(cs) != 10:
            raise ValueError("a ternary cubic has ten coefficients")
        object.__setattr__(self, "coeffs", cs)

    def __call__(self, x, y, z):
        from .ternary_derivation import CUBIC_MONOMIALS

        return sum(c * x**i * y**j * z**k for c, (i, j, k) in zip(self.coeffs, CUBIC_MONOMIALS))

    def to_json(self) -> dict:
        return {"type": "ternary_cubic", "coeffs": [str(c) if isinstance(c, Fraction) else c for c in self.coeffs]}


def ternary_invariants(g: TernaryCubic) -> InvariantPair:
    return InvariantPair(_evaluate_int(_DEGREE4, g.coeffs), _evaluate_int(_DEGREE6, g.coeffs))


def section_iota3(I: Number, J: Number) -> TernaryCubic:
    from .ternary_derivation import section_coefficients

    return TernaryCubic(tuple(section_coefficients(I, J)))


def ternary_substitute(g: Sequence[Sequence[Number]], f: TernaryCubic) -> TernaryCubic:
    """f((x, y, z) g): invariants scale by det(g)^4 and det(g)^6."""
    from .ternary_derivation import CUBIC_MONOMIALS

    index = {m: i for i, m in enumerate(CUBIC_MONOMIALS)}
    # each new variable is a linear form: column j of g
    cols = [[g[r][j] for r in range(3)] for j in range(3)]

    def lin_pow(col, n):
        poly = {(0, 0, 0): 1}
        for _ in range(n):
            nxt: dict = {}
            for mono, v in poly.items():
                for axis in range(3):
                    if col[axis]:
                        m = list(mono)
                        m[axis] += 1
                        m = tuple(m)
                        nxt[m] = nxt.get(m, 0) + v * col[axis]
            poly = nxt
        return poly

    out = [0] * 10
    for c, (i, j, k) in zip(f.coeffs, CUBIC_MONOMIALS):
        if not c:
            continue
        prod_poly = {(0, 0, 0): c}
        for col, n in zip(cols, (i, j, k)):
            factor = lin_pow(col, n)
            nxt: dict = {}
            for m1, v1 in prod_poly.items():
                for m2, v2 in factor.items():
                    m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                    nxt[m] = nxt.get(m, 0) + v1 * v2
            prod_poly = nxt
        for m, v in prod_poly.items():
            out[index[m]] += v
    return TernaryCubic(tuple(out))


# ---------------------------------------------------------------------------
# pairs of quadrics


@dataclass(frozen=True)
class QuadricPair:
    A: tuple[tuple[Number, ...], ...]
    B: tuple[tuple[Number, ...], ...]

    def __post_init__(self):
        for name in ("A", "B"):
            m = tuple(tuple(_normalize(Fraction(x)) for x in row) for row in getattr(self, name))
            if len(m) != 4 or any(len(row) != 4 for row in m):
                raise ValueError("quadrics are 4x4 matrices")
            if any(m[i][j] != m[j][i] for i in range(4) for j in range(4)):
                raise ValueError("quadric matrices must be symmetric")
            object.__setattr__(self, name, m)

    def to_json(self) -> dict:
        enc = lambda m: [[str(x) if isinstance(x, Fraction) else x for x in row] for row in m]
        return {"type": "quadric_pair", "A": enc(self.A), "B": enc(self.B)}


def section_iota4(I: Number, J: Number) -> QuadricPair:
    i6 = -Fraction(I) / 6
    j27 = -Fraction(J) / 27
    A = ((0, 0, 0, 1), (0, 0, 0, 0), (0, 0, 1, 0), (1, 0, 0, 0))
    B = ((0, 0, -1, 0), (0, -1, 0, 0), (-1, 0, 0, i6), (0, 0, i6, j27))
    return QuadricPair(A, B)


def resolvent_quartic(pair: QuadricPair) -> BinaryQuartic:
    """det(A x + B y) as a binary quartic, by exact interpolation in x at y = 1."""
    samples = []
    for t in range(5):
        m = [[pair.A[i][j] * t + pair.B[i][j] for j in range(4)] for i in range(4)]
        samples.append(Fraction(determinant(m)))
    # Newton divided differences, then expand to monomial coefficients
    coef = list(samples)
    for level in range(1, 5):
        for i in range(4, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / level
    poly = [Fraction(0)] * 5  # ascending in x
    for i in range(4, -1, -1):
        # poly = poly * (x - i) + coef[i]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [s - i * p for s, p in zip(shifted, poly)]
        poly[0] += coef[i]
    return BinaryQuartic(*reversed(poly))


# ---------------------------------------------------------------------------
# roots and the reduction covariant


def _digits(f: BinaryQuartic) -> int:
    return max(len(str(abs(c))) for c in f.coeffs)


# coefficient sizes (decimal digits) up to which double precision is tried first:
# reduction only needs an approximately reduced result, matching needs accurate roots
FLOAT_DIGITS_REDUCE = 12
FLOAT_DIGITS_MATCH = 6


def projective_roots(f: BinaryQuartic, dps: int | None = None) -> list[tuple]:
    """Roots of f as projective pairs (u, v) with v in {0, 1}, at working precision."""
    roots: list[tuple] = []
    cs = list(f.coeffs)
    while cs and cs[0] == 0:
        roots.append((mpmath.mpc(1), mpmath.mpc(0)))
        cs.pop(0)
    if len(cs) > 1:
        mp_cs = [mpmath.mpf(x) if isinstance(x, int) else mpmath.mpf(x.numerator) / x.denominator for x in cs]
        for z in mpmath.polyroots(mp_cs, maxsteps=400, extraprec=4 * (dps or mpmath.mp.dps)):
            roots.append((mpmath.mpc(z), mpmath.mpc(1)))
    return roots


def float_projective_roots(f: BinaryQuartic) -> list[tuple[complex, complex]]:
    """Double-precision roots, each polished by two Newton steps."""
    roots: list[tuple[complex, complex]] = []
    cs = [float(c) for c in f.coeffs]
    while cs and cs[0] == 0:
        roots.append((1 + 0j, 0j))
        cs.pop(0)
    if len(cs) > 1:
        deriv = [c * (len(cs) - 1 - i) for i, c in enumerate(cs[:-1])]
        for z in np.roots(cs):
            z = complex(z)
            for _ in range(2):
                dz = np.polyval(deriv, z)
                if dz:
                    z -= np.polyval(cs, z) / dz
            roots.append((complex(z), 1 + 0j))
    return roots


def _well_separated(roots, threshold: float = 1e-5) -> bool:
    for (u1, v1), (u2, v2) in itertools.combinations(roots, 2):
        norm = math.hypot(abs(u1), abs(v1)) * math.hypot(abs(u2), abs(v2))
        if abs(u1 * v2 - u2 * v1) < threshold * norm:
            return False
    return True


def _float_path(*forms: BinaryQuartic, digits: int = FLOAT_DIGITS_MATCH, separation: float = 1e-3) -> list | None:
    """Double-precision roots of each form when that is trustworthy, else None."""
    if max(_digits(f) for f in forms) > digits:
        return None
    out = []
    for f in forms:
        roots = float_projective_roots(f)
        if len(roots) != 4 or not _well_separated(roots, separation):
            return None
        out.append(roots)
    return out


def _working_dps(f: BinaryQuartic) -> int:
    return 40 + 2 * _digits(f)


def _covariant_from_roots(f: BinaryQuartic, roots) -> tuple:
    a, b, c, d, _ = f.coeffs
    P = Q = R = 0
    for z, _v in roots:
        deriv = 4 * a * z**3 + 3 * b * z**2 + 2 * c * z + d
        w = 1 / abs(deriv)
        P += w
        Q += -2 * w * z.real
        R += w * abs(z) ** 2
    return P, Q, R


def covariant_quadratic(f: BinaryQuartic) -> tuple:
    """The positive definite quadratic sum |x - alpha y|^2 / |f'(alpha)| over roots alpha.

    Requires a != 0. Transforms as Q o g / |det g| under the action on f.
    """
    if f.a == 0:
        raise ValueError("leading coefficient must be nonzero")
    return _covariant_from_roots(f, projective_roots(f))


def _apply_quadratic(form, h: Matrix2):
    P, Q, R = form
    (h11, h12), (h21, h22) = h
    return (
        P * h11 * h11 + Q * h11 * h12 + R * h12 * h12,
        2 * P * h11 * h21 + Q * (h11 * h22 + h21 * h12) + 2 * R * h12 * h22,
        P * h21 * h21 + Q * h21 * h22 + R * h22 * h22,
    )


def _nearest_int(x) -> int:
    return int(mpmath.nint(x)) if isinstance(x, mpmath.mpf) else round(x)


def gauss_reduce(form) -> tuple[tuple, Matrix2]:
    """Reduce a positive definite quadratic, returning (reduced form, h) with form o h reduced."""
    total: Matrix2 = IDENTITY
    P, Q, R = form
    swap: Matrix2 = ((0, 1), (1, 0))
    for _ in range(10_000):
        k = _nearest_int(-Q / (2 * P))
        if k:
            step: Matrix2 = ((1, 0), (k, 1))
            P, Q, R = _apply_quadratic((P, Q, R), step)
            total = matmul2(step, total)
        if P > R:
            P, Q, R = _apply_quadratic((P, Q, R), swap)
            total = matmul2(swap, total)
            continue
        break
    if Q < 0:
        flip: Matrix2 = ((1, 0), (0, -1))
        P, Q, R = _apply_quadratic((P, Q, R), flip)
        total = matmul2(flip, total)
    return (P, Q, R), total


@lru_cache(maxsize=1)
def _small_unimodular() -> tuple[Matrix2, ...]:
    out = []
    for g11, g12, g21, g22 in itertools.product((-1, 0, 1), repeat=4):
        if abs(g11 * g22 - g12 * g21) == 1:
            out.append(((g11, g12), (g21, g22)))
    return tuple(out)


def _form_key(f: BinaryQuartic):
    cs = f.coeffs
    return (max(abs(c) for c in cs), sum(abs(c) for c in cs), tuple(abs(c) for c in cs), tuple(-c for c in cs))


def _nonzero_leading(f: BinaryQuartic) -> tuple[BinaryQuartic, Matrix2]:
    if f.a != 0:
        return f, IDENTITY
    for k in itertools.count():
        for kk in (k, -k):
            if f(kk, 1) != 0:
                g: Matrix2 = ((kk, 1), (1, 0))
                return gl2_action(g, f), g


def _reduced_choice(f: BinaryQuartic, reduced, h: Matrix2, g0: Matrix2, tol) -> tuple[BinaryQuartic, Matrix2]:
    """Among the small unimodular moves keeping the quadratic reduced, the form with the smallest key."""
    best_total = matmul2(h, g0)
    best = gl2_action(best_total, f)
    P0 = reduced[0]
    for s in _small_unimodular():
        P, Q, R = _apply_quadratic(reduced, s)
        if abs(P - P0) > tol * P0 or abs(Q) > P + tol * P0 or P > R + tol * P0:
            continue
        total = matmul2(s, matmul2(h, g0))
        cand = gl2_action(total, f)
        if _form_key(cand) < _form_key(best):
            best, best_total = cand, total
    return best, best_total


def reduce_quartic_with_transform(f: BinaryQuartic) -> tuple[BinaryQuartic, Matrix2]:
    """A reduced GL_2(Z)-equivalent form and the unimodular g with gl2_action(g, f) equal to it."""
    if not f.is_integral():
        raise ValueError("integral form expected")
    if f.disc() == 0:
        raise SingularError("Δ = 0")
    g0_form, g0 = _nonzero_leading(f)
    fast = _float_path(g0_form, digits=FLOAT_DIGITS_REDUCE, separation=1e-6)
    if fast is not None:
        reduced, h = gauss_reduce(_covariant_from_roots(g0_form, fast[0]))
        red, total = _reduced_choice(f, reduced, h, g0, 1e-9)
        if _digits(red) <= FLOAT_DIGITS_MATCH:
            return red, total
    with mpmath.workdps(_working_dps(g0_form)):
        reduced, h = gauss_reduce(covariant_quadratic(g0_form))
        tol = mpmath.mpf(10) ** (-(mpmath.mp.dps // 3))
        return _reduced_choice(f, reduced, h, g0, tol)


def reduce_quartic(f: BinaryQuartic) -> BinaryQuartic:
    return reduce_quartic_with_transform(f)[0]


# ---------------------------------------------------------------------------
# equivalence by matching roots


def _frame(points) -> list[list]:
    """Matrix M (row convention) with e1 M ~ p1, e2 M ~ p2, (1,1) M ~ p3."""
    (u1, v1), (u2, v2), (u3, v3) = points
    det = u1 * v2 - v1 * u2
    l1 = (u3 * v2 - v3 * u2) / det
    l2 = (u1 * v3 - v1 * u3) / det
    return [[l1 * u1, l1 * v1], [l2 * u2, l2 * v2]]


def _inv2(m):
    (a, b), (c, d) = m
    det = a * d - b * c
    return [[d / det, -b / det], [-c / det, a / det]]


def _mul2(m, n):
    return [[m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]],
            [m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]]]


def _rationalize_mp(x, limit: int) -> Fraction | None:
    if abs(x.imag) > mpmath.mpf(10) ** (-(mpmath.mp.dps // 2)):
        return None
    return mpf_to_fraction(x.real).limit_denominator(limit)


def _root_match_test(r1, r2, perm, tol) -> Matrix2 | None:
    """Mobius matrix sending the roots r2 onto r1 permuted by `perm`, if the fourth root agrees."""
    target = [r1[i] for i in perm]
    g = _mul2(_inv2(_frame(r2[:3])), _frame(target[:3]))
    u, v = r2[3]
    img = (u * g[0][0] + v * g[1][0], u * g[0][1] + v * g[1][1])
    tu, tv = target[3]
    scale = max(abs(img[0]), abs(img[1])) * max(abs(tu), abs(tv))
    if abs(img[0] * tv - img[1] * tu) > tol * scale:
        return None
    return g


def _rational_matrix(g, rationalize) -> Matrix2 | None:
    entries = [g[0][0], g[0][1], g[1][0], g[1][1]]
    big = max(entries, key=abs)
    ratios = [rationalize(x / big) for x in entries]
    if any(r is None for r in ratios):
        return None
    den = math.lcm(*(r.denominator for r in ratios))
    ints = [int(r * den) for r in ratios]
    content = math.gcd(*ints)
    ints = [x // content for x in ints]
    if ints[0] * ints[3] - ints[1] * ints[2] == 0:
        return None
    return ((ints[0], ints[1]), (ints[2], ints[3]))


@functools.lru_cache(maxsize=4096)
def _seed_roots(coeffs: tuple) -> tuple | None:
    seeds = float_projective_roots(BinaryQuartic(*coeffs))
    if len(seeds) != 4 or not _well_separated(seeds, 1e-8):
        return None
    return tuple(seeds)


@functools.lru_cache(maxsize=4096)
def _polished_roots(coeffs: tuple, dps: int) -> tuple | None:
    """Roots at `dps` digits, from double-precision seeds refined by Newton.

    None when the seeds are too close together for Newton to be trusted.
    """
    seeds = _seed_roots(coeffs)
    if seeds is None:
        return None
    cs = [int(c) for c in coeffs]
    while cs and cs[0] == 0:
        cs.pop(0)
    deriv = [c * (len(cs) - 1 - i) for i, c in enumerate(cs[:-1])]
    with mpmath.workdps(dps):
        eps = mpmath.mpf(10) ** (5 - dps)
        out = []
        for u, v in seeds:
            if v == 0:
                out.append((mpmath.mpc(1), mpmath.mpc(0)))
                continue
            z = mpmath.mpc(u)
            for _ in range(12):
                step = mpmath.polyval(cs, z) / mpmath.polyval(deriv, z)
                z -= step
                if abs(step) <= eps * max(1, abs(z)):
                    break
            else:
                return None
            out.append((z, mpmath.mpc(1)))
    if not _well_separated([(complex(u), complex(v)) for u, v in out], 1e-8):
        return None
    return tuple(out)


@functools.lru_cache(maxsize=4096)
def _filter_roots(coeffs: tuple) -> tuple | None:
    """Polished roots rounded to double precision, accurate even when the seeds are not."""
    digits = max(len(str(abs(c))) for c in coeffs)
    polished = _polished_roots(coeffs, 30 + 3 * digits)
    if polished is None:
        return None
    return tuple((complex(u), complex(v)) for u, v in polished)


def _nearly_real(g, tol: float) -> bool:
    entries = [g[0][0], g[0][1], g[1][0], g[1][1]]
    big = max(entries, key=abs)
    return all(abs((x / big).imag) <= tol for x in entries)


def rational_transforms(f1: BinaryQuartic, f2: BinaryQuartic, limit: int = 10**12) -> list[Matrix2]:
    """Every primitive integral g with transform(f1, g) == f2.

    A transform carries the roots of f2 onto the roots of f1, so it is the
    Mobius map fixed by a bijection of roots. Double-precision roots pick out
    the bijections giving a real map whose fourth root lines up; those are
    redone with polished high-precision roots, rounded to rationals and
    verified exactly.
    """
    if f1.invariants() != f2.invariants() or f1.disc() == 0:
        return []
    dps = 30 + 3 * max(_digits(f1), _digits(f2))
    perms = list(itertools.permutations(range(4)))
    s1, s2 = _filter_roots(f1.coeffs), _filter_roots(f2.coeffs)
    r1 = r2 = None
    if s1 is not None and s2 is not None:
        perms = [p for p in perms if (g := _root_match_test(s1, s2, p, 1e-6)) is not None and _nearly_real(g, 1e-6)]
        if not perms:
            return []
        r1, r2 = _polished_roots(f1.coeffs, dps), _polished_roots(f2.coeffs, dps)
    with mpmath.workdps(dps):
        if r1 is None or r2 is None:
            perms = list(itertools.permutations(range(4)))
            r1, r2 = projective_roots(f1), projective_roots(f2)
            if len(r1) != 4 or len(r2) != 4:
                return []
        tol = mpmath.mpf(10) ** (-(dps // 2))
        found: list[Matrix2] = []
        for perm in perms:
            g = _root_match_test(r1, r2, perm, tol)
            if g is None:
                continue
            cand = _rational_matrix(g, lambda x: _rationalize_mp(x, limit))
            if cand is not None and cand not in found and transform(f1, cand) == f2:
                found.append(cand)
    return found


def is_equivalent_q(f1: BinaryQuartic, f2: BinaryQuartic) -> bool:
    return bool(rational_transforms(f1, f2))


def is_equivalent_z(f1: BinaryQuartic, f2: BinaryQuartic) -> bool:
    if f1.invariants() != f2.invariants():
        return False
    if f1.disc() == 0:
        raise SingularError("Δ = 0")
    return any(abs(g[0][0] * g[1][1] - g[0][1] * g[1][0]) == 1 for g in rational_transforms(f1, f2))


def search_unimodular(f1: BinaryQuartic, f2: BinaryQuartic, bound: int) -> Matrix2 | None:
    """Exhaustive search for g in GL_2(Z) with entries at most `bound` mapping f1 to f2."""
    rng = range(-bound, bound + 1)
    for g11, g12, g21 in itertools.product(rng, repeat=3):
        for g22 in rng:
            det = g11 * g22 - g12 * g21
            if det in (1, -1):
                g = ((g11, g12), (g21, g22))
                if gl2_action(g, f1) == f2:
                    return g
    return None


# ---------------------------------------------------------------------------
# coefficient bounds from real orbit representatives


def real_orbit_representatives(I: Number, J: Number) -> list[tuple[float, float, float, float, float]]:
    """Even real forms s x^4 + c x^2 y^2 + s (I - c^2)/12 y^4, one for each real root c
    of 8 c^3 - 6 I c + J and each sign s; every real form with invariants (I, J) is
    GL_2(R)-equivalent to one of them."""
    roots = np.roots([8.0, 0.0, -6.0 * float(I), float(J)])
    reps = []
    for z in roots:
        if abs(z.imag) > 1e-7 * (1 + abs(z.real)):
            continue
        # polish the root in double precision
        c = float(z.real)
        for _ in range(3):
            fc = 8 * c**3 - 6 * float(I) * c + float(J)
            dc = 24 * c**2 - 6 * float(I)
            if dc:
                c -= fc / dc
        for s in (1.0, -1.0):
            reps.append((s, 0.0, c, 0.0, s * (float(I) - c * c) / 12))
    return reps


def _float_roots(coeffs) -> np.ndarray:
    return np.roots(coeffs)


def _sup_ratio(numerator, quad) -> float:
    """Upper bound for sup |numerator(v)| / quad(v)^2 over real v."""
    P, Q, R = quad
    D = 4 * P * R - Q * Q
    t = Q / (2 * P)
    sp, sq = math.sqrt(P), math.sqrt(D / (4 * P))
    # v = (x, y) with x = u / sp - t * w / sq, y = w / sq makes quad = u^2 + w^2
    g = ((1 / sp, 0.0), (-t / sq, 1 / sq))
    a, b, c, d, e = substitute(BinaryQuartic(*[Fraction(x) for x in numerator]), ((Fraction(g[0][0]), Fraction(g[0][1])), (Fraction(g[1][0]), Fraction(g[1][1]))))
    cs = [float(x) for x in (a, b, c, d, e)]
    n = 4096
    theta = np.linspace(0.0, math.pi, n, endpoint=False)
    u, w = np.cos(theta), np.sin(theta)
    vals = cs[0] * u**4 + cs[1] * u**3 * w + cs[2] * u**2 * w**2 + cs[3] * u * w**3 + cs[4] * w**4
    slack = 4 * sum(abs(x) for x in cs) * (math.pi / n)
    return float(np.max(np.abs(vals))) + slack


def _float_covariant(coeffs) -> tuple[float, float, float]:
    a, b, c, d, e = coeffs
    P = Q = R = 0.0
    for z in _float_roots([a, b, c, d, e]):
        deriv = 4 * a * z**3 + 3 * b * z**2 + 2 * c * z + d
        w = 1 / abs(deriv)
        P += w
        Q += -2 * w * z.real
        R += w * abs(z) ** 2
    return P, Q, R


def reduction_constants(coeffs) -> tuple[float, float, float]:
    """(D, K_f, K_H) for a real form with nonzero leading coefficient."""
    quad = _float_covariant(coeffs)
    P, Q, R = quad
    D = 4 * P * R - Q * Q
    f = BinaryQuartic(*[Fraction(x) for x in coeffs])
    H = hessian_covariant(f)
    return D, _sup_ratio(coeffs, quad), _sup_ratio([float(x) for x in H.coeffs], quad)


def coefficient_bounds(I: Number, J: Number, include_negative_definite: bool = True) -> tuple[int, int]:
    """(a_max, H_max): every class with invariants (I, J) has a reduced member with
    |a| <= a_max and |8ac - 3b^2| <= H_max.

    For reduced covariant Q one has Q(1, 0) <= sqrt(D/3), and both f/Q^2 and
    H_f/Q^2 are bounded by real-orbit constants.
    """
    if quartic_disc(I, J) == 0:
        raise SingularError("Δ = 0")
    a_max = h_max = 0.0
    for rep in real_orbit_representatives(I, J):
        s, _, c, _, e = rep
        if not include_negative_definite and s < 0 and c < 0 and e < 0 and c * c < 4 * s * e:
            continue
        D, Kf, KH = reduction_constants(rep)
        a_max = max(a_max, Kf * D / 3)
        h_max = max(h_max, KH * D / 3)
    margin = 1 + 1e-6
    return int(a_max * margin) + 1, int(h_max * margin) + 1


# ---------------------------------------------------------------------------
# enumeration of integral forms with given invariants

_INT64_SAFE = 2**62


def _allowed_residues(a: int) -> list[int]:
    m = 8 * abs(a)
    return sorted({(-3 * b * b) % m for b in range(-2 * abs(a) + 1, 2 * abs(a) + 1)})


def _reconstruct(I: int, J: int, a: int, H: int, r: int) -> Iterator[BinaryQuartic]:
    m = 8 * abs(a)
    for b in range(-2 * abs(a) + 1, 2 * abs(a) + 1):
        if (H + 3 * b * b) % m:
            continue
        c = (H + 3 * b * b) // (8 * a)
        for R in {r, -r}:
            num = R - b**3 + 4 * a * b * c
            if num % (8 * a * a):
                continue
            d = num // (8 * a * a)
            num2 = I + 3 * b * d - c * c
            if num2 % (12 * a):
                continue
            e = num2 // (12 * a)
            f = BinaryQuartic(a, b, c, d, e)
            inv = quartic_invariants(f)
            if inv.I == I and inv.J == J:
                yield f


def _square_hits_python(I: int, J: int, a: int, H_max: int) -> list[tuple[int, int]]:
    m = 8 * abs(a)
    hits = []
    for res in _allowed_residues(a):
        start = res - ((res + H_max) // m) * m
        for H in range(start, H_max + 1, m):
            val = 48 * I * a * a * H - H**3 - 64 * J * a**3
            if val < 0 or val % 27:
                continue
            r = math.isqrt(val // 27)
            if r * r * 27 == val:
                hits.append((H, r))
    return hits


def _square_hits_numpy(I: int, J: int, a: int, H_max: int) -> list[tuple[int, int]]:
    m = 8 * abs(a)
    chunks = []
    for res in _allowed_residues(a):
        start = res - ((res + H_max) // m) * m
        chunks.append(np.arange(start, H_max + 1, m, dtype=np.int64))
    if not chunks:
        return []
    H = np.concatenate(chunks)
    val = np.int64(48 * I * a * a) * H - H * H * H - np.int64(64 * J * a**3)
    keep = (val >= 0) & (val % 27 == 0)
    H, val = H[keep], val[keep] // 27
    if H.size == 0:
        return []
    root = np.floor(np.sqrt(val.astype(np.float64))).astype(np.int64)
    hits = []
    for dr in (-1, 0, 1):
        rr = root + dr
        ok = (rr >= 0) & (rr * rr == val)
        hits.extend(zip(H[ok].tolist(), rr[ok].tolist()))
    return sorted(set(hits))


def scan_fits_int64(I: int, J: int, a_max: int, H_max: int) -> bool:
    worst = 48 * abs(I) * a_max**2 * H_max + H_max**3 + 64 * abs(J) * a_max**3
    return worst < _INT64_SAFE


def scan_quartics(I: int, J: int, a_max: int, H_max: int, engine: str = "auto") -> Iterator[BinaryQuartic]:
    """Integral forms with invariants (I, J), a != 0, |a| <= a_max, |H| <= H_max,
    one per residue of b modulo 4a (the seminvariants H and R determine the rest).

    Uses 27 R^2 = 48 I a^2 H - H^3 - 64 J a^3.
    """
    if engine == "auto":
        engine = "numpy" if scan_fits_int64(I, J, a_max, H_max) else "python"
    hits_for = _square_hits_numpy if engine == "numpy" else _square_hits_python
    for a in range(-a_max, a_max + 1):
        if a == 0:
            continue
        for H, r in hits_for(I, J, a, H_max):
            yield from _reconstruct(I, J, a, H, r)


def quartics_with_rational_root(I: int, J: int) -> Iterator[BinaryQuartic]:
    """Forms b x^3 y + c x^2 y^2 + d x y^3 + e y^4 covering every class with a rational root.

    b^2 divides the discriminant, and x -> x + k y moves c through residues mod 3b.
    """
    disc = quartic_disc(I, J)
    if disc == 0:
        raise SingularError("Δ = 0")
    if disc.denominator != 1:
        return
    disc = abs(int(disc))
    for b in divisors(disc):
        if disc % (b * b):
            continue
        for c in range(3 * b):
            if (c * c - I) % (3 * b):
                continue
            d = (c * c - I) // (3 * b)
            num = 9 * b * c * d - 2 * c**3 - J
            if num % (27 * b * b):
                continue
            f = BinaryQuartic(0, b, c, d, num // (27 * b * b))
            if quartic_invariants(f) == InvariantPair(I, J):
                yield f


def dedupe_classes(forms: Iterable[BinaryQuartic], equivalent=None) -> list[BinaryQuartic]:
    """Reduced representatives of distinct classes among `forms`."""
    equivalent = equivalent or is_equivalent_z
    reps: list[BinaryQuartic] = []
    seen: set = set()
    for f in forms:
        red = reduce_quartic(f)
        if red.coeffs in seen:
            continue
        seen.add(red.coeffs)
        if not any(equivalent(red, other) for other in reps):
            reps.append(red)
    return sorted(reps, key=lambda f: f.coeffs)


def enumerate_quartics_with_invariants(I: int, J: int) -> list[BinaryQuartic]:
    """One reduced representative per GL_2(Z)-class of integral forms with invariants (I, J)."""
    if quartic_disc(I, J) == 0:
        raise SingularError("Δ = 0")
    a_max, H_max = coefficient_bounds(I, J)
    forms = itertools.chain(scan_quartics(I, J, a_max, H_max), quartics_with_rational_root(I, J))
    return dedupe_classes(forms)

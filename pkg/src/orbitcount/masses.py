"""Local mass factors for 2-coverings and their product over all places.

At a place K the factor is #(E(K)/2E(K)) / #E[2](K). The numerator comes
from the local index formula #(E(K)/2E(K)) = #E[2](K) * |2|_K^(-1), while
#E[2](K) is counted independently from the roots of x^3 + Ax + B in K.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .invariants import EllipticCurveAB
from .rings import INFINITY, IntPolynomial, is_prime, primes_up_to, valuation

Place = int | str


class UnsupportedDegree(ValueError):
    pass


class PrecisionExhausted(ArithmeticError):
    pass


@dataclass(frozen=True)
class MassFactor:
    place: Place
    value: Fraction
    torsion2_count: int

    def __post_init__(self) -> None:
        if self.value <= 0:
            raise ValueError("mass factors are positive")


def _as_curve(E) -> EllipticCurveAB:
    return E if isinstance(E, EllipticCurveAB) else EllipticCurveAB(*E)


def _count_zp_roots(poly: IntPolynomial, p: int, depth: int, cap: int) -> int:
    """Roots of poly in Z_p, assuming they are distinct."""
    cs = poly.coeffs
    if not any(cs):
        raise ValueError("zero polynomial")
    content = min(valuation(c, p) for c in cs if c)
    if content:
        poly = IntPolynomial([c // p**content for c in cs])
    if depth > cap:
        raise PrecisionExhausted(f"root count at p = {p} not settled by depth {cap}")
    deriv = poly.derivative()
    total = 0
    for r in range(p):
        if poly(r) % p:
            continue
        if deriv(r) % p:
            total += 1  # a simple root mod p lifts uniquely
        else:
            total += _count_zp_roots(poly.compose_linear(r, p), p, depth + 1, cap)
    return total


def _cubic(E: EllipticCurveAB) -> IntPolynomial:
    if not (isinstance(E.A, int) and isinstance(E.B, int)):
        raise ValueError("integral Weierstrass coefficients expected")
    return IntPolynomial([E.B, E.A, 0, 1])


def torsion2_local(E, place: Place) -> int:
    """#E[2](K) for K the completion at `place`: 1 plus the roots of x^3 + Ax + B in K."""
    E = _as_curve(E)
    disc = 4 * E.A**3 + 27 * E.B**2
    if place == INFINITY:
        return 4 if disc < 0 else 2
    if not is_prime(place):
        raise ValueError(f"{place} is not a prime")
    # monic integral cubic: every root in Q_p lies in Z_p
    cap = 2 * valuation(disc, place) + 4
    return 1 + _count_zp_roots(_cubic(E), place, 0, cap)


def local_index(E, place: Place, n: int = 2) -> Fraction:
    """#(E(K)/nE(K)) from the torsion count and the normalized absolute value of n."""
    if n != 2:
        raise UnsupportedDegree("unsupported: only n = 2 is implemented")
    t = torsion2_local(E, place)
    if place == INFINITY:
        return Fraction(t, 2)
    return Fraction(t) * Fraction(place) ** valuation(2, place)


def local_mass(E, place: Place, n: int = 2) -> MassFactor:
    if n != 2:
        raise UnsupportedDegree("unsupported: only n = 2 is implemented")
    E = _as_curve(E)
    t = torsion2_local(E, place)
    return MassFactor(place, local_index(E, place, n) / t, t)


def product_check(E, pmax: int) -> Fraction:
    """The archimedean factor times the factors at every prime up to pmax."""
    E = _as_curve(E)
    total = local_mass(E, INFINITY).value
    for p in primes_up_to(pmax):
        total *= local_mass(E, p).value
    return total

"""Local densities and tail counts behind the sieve estimates.

Densities are exact fractions from enumeration over finite rings, except
where a closed count is available and cross-checked against enumeration.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .rings import FqPolynomial, GF, count_monic_irreducibles, is_prime, primes_up_to
from .wps import _is_minimal_fq, _orbit_key, _unit_orbit, iter_minimal_coords, iter_minimal_fq_coords


@dataclass
class DensityResult:
    p: int
    numerator: int
    denominator: int
    description: str
    extra: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        g = math.gcd(self.numerator, self.denominator)
        self.numerator //= g
        self.denominator //= g
        if not 0 <= self.numerator <= self.denominator:
            raise ValueError("density outside [0, 1]")

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def to_json(self) -> dict:
        out = {"p": self.p, "value": str(self.value), "description": self.description}
        out.update({k: str(v) if isinstance(v, Fraction) else v for k, v in self.extra.items()})
        return out


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


# ---------------------------------------------------------------------------
# binary quartics over F_p


def quartic_disc_poly(a, b, c, d, e):
    """Discriminant of a x^4 + b x^3 y + c x^2 y^2 + d x y^3 + e y^4 as an integer polynomial.

    Works elementwise on numpy arrays as well as on Python integers.
    """
    return (
        256 * a**3 * e**3 - 192 * a**2 * b * d * e**2 - 128 * a**2 * c**2 * e**2
        + 144 * a**2 * c * d**2 * e - 27 * a**2 * d**4 + 144 * a * b**2 * c * e**2
        - 6 * a * b**2 * d**2 * e - 80 * a * b * c**2 * d * e + 18 * a * b * c * d**3
        + 16 * a * c**4 * e - 4 * a * c**3 * d**2 - 27 * b**4 * e**2 + 18 * b**3 * c * d * e
        - 4 * b**3 * d**3 - 4 * b**2 * c**3 * e + b**2 * c**2 * d**2
    )


ENUMERATION_PRIME_LIMIT = 31


def generic_quartic_count_fp(p: int) -> int:
    """Binary quartics over F_p with nonzero discriminant and no root on P^1, by factorization type.

    Such a form is a unit times a squarefree monic quartic without linear
    factor: either irreducible, or a product of two distinct irreducible quadratics.
    """
    n2 = count_monic_irreducibles(p, 2)
    n4 = count_monic_irreducibles(p, 4)
    return (p - 1) * (n4 + n2 * (n2 - 1) // 2)


def generic_quartic_count_enumerated(p: int) -> int:
    """The same count by running over every monic quartic (forms with a = 0 have a root at infinity)."""
    grid = np.arange(p, dtype=np.int64)
    b, c, d, e = (x.ravel() for x in np.meshgrid(grid, grid, grid, grid, indexing="ij"))
    has_root = np.zeros(b.shape, dtype=bool)
    for x in range(p):
        has_root |= (((((x + b) % p * x + c) % p * x + d) % p * x + e) % p) == 0
    disc = quartic_disc_poly(1, b, c, d, e) % p
    generic = (~has_root) & (disc != 0)
    return (p - 1) * int(generic.sum())


def nongeneric_density_fp(p: int) -> DensityResult:
    """Fraction of binary quartics over F_p with a rational linear factor or zero discriminant."""
    _require_prime(p)
    if not 2 < p <= 101:
        raise ValueError("p must satisfy 2 < p <= 101")
    if p <= ENUMERATION_PRIME_LIMIT:
        generic = generic_quartic_count_enumerated(p)
        method = "enumeration"
    else:
        generic = generic_quartic_count_fp(p)
        method = "factorization-type count"
    total = p**5
    return DensityResult(
        p,
        total - generic,
        total,
        f"non-generic binary quartics over F_{p} ({method})",
        {"generic_fraction": Fraction(generic, total), "method": method},
    )


def generic_density_limit() -> Fraction:
    """Large-p limit of the generic fraction: 1/4 from irreducible quartics plus 1/8 from pairs of quadratics."""
    return Fraction(1, 4) + Fraction(1, 8)


# ---------------------------------------------------------------------------
# p^2 dividing the discriminant


def bare_disc(A, B):
    """4A^3 + 27B^2; the curve discriminant is -16 times this."""
    return 4 * A**3 + 27 * B**2


def disc_p2_density_exact(p: int) -> DensityResult:
    """Fraction of (A, B) mod p^2 with p^2 | 4A^3 + 27B^2."""
    _require_prime(p)
    if p > 50:
        raise ValueError("p must be at most 50")
    m = p * p
    r = np.arange(m, dtype=np.int64)
    cube = (4 * r**3) % m
    square = (27 * r**2) % m
    hits = (cube[:, None] + square[None, :]) % m == 0
    total = m * m
    coprime = hits[r % p != 0, :].sum()
    return DensityResult(
        p,
        int(hits.sum()),
        total,
        f"(A, B) mod {p}^2 with {p}^2 | 4A^3 + 27B^2",
        {"coprime_A_fraction": Fraction(int(coprime), total), "scaled": Fraction(int(hits.sum()) * m, total)},
    )


@dataclass
class TailRecord:
    X: int
    M: int
    count: int
    bound_value: Fraction
    curves: int
    singular_skipped: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.count) / self.bound_value if self.bound_value else Fraction(0)


def _has_large_square_factor(values: np.ndarray, M: int) -> np.ndarray:
    """Whether each positive value has p^2 | v for some prime p > M.

    Primes up to the cube root are divided out; what is left has at most two
    prime factors, so it carries a square exactly when it is a perfect square.
    """
    values = values.astype(object) if values.dtype == object else values.copy()
    big = max(int(values.max()), 1)
    limit = int(round(big ** (1 / 3))) + 2
    hit = np.zeros(len(values), dtype=bool)
    rest = values.copy()
    for p in primes_up_to(limit):
        exp = np.zeros(len(values), dtype=np.int64)
        mask = rest % p == 0
        while mask.any():
            exp[mask] += 1
            rest[mask] //= p
            mask = rest % p == 0
        if p > M:
            hit |= exp >= 2
    roots = np.array([math.isqrt(int(v)) for v in rest], dtype=np.int64)
    square = (roots.astype(object) ** 2 == rest.astype(object)) & (roots > 1)
    hit |= square & (roots > M)
    return hit


def tail_count(X: int, M: int) -> TailRecord:
    """Minimal (A, B) of height at most X where some prime p > M has p^2 | 4A^3 + 27B^2.

    Singular pairs (zero discriminant) are skipped and counted separately.
    """
    if X > 5:
        raise ValueError("X must be at most 5")
    if M < 2:
        raise ValueError("M must be at least 2")
    pairs = np.array(list(iter_minimal_coords(X, (4, 6))), dtype=np.int64)
    if len(pairs) == 0:
        return TailRecord(X, M, 0, Fraction(X**10, M), 0, 0)
    disc = np.abs(bare_disc(pairs[:, 0], pairs[:, 1]))
    nonzero = disc != 0
    hits = _has_large_square_factor(disc[nonzero], M)
    return TailRecord(X, M, int(hits.sum()), Fraction(X**10, M), int(nonzero.sum()), int((~nonzero).sum()))


def tail_count_by_factoring(X: int, M: int) -> int:
    """Slow reference for tail_count: full factorization of each discriminant."""
    from .rings import factorint

    count = 0
    for A, B in iter_minimal_coords(X, (4, 6)):
        D = abs(bare_disc(A, B))
        if D and any(p > M and e >= 2 for p, e in factorint(D).items()):
            count += 1
    return count


# ---------------------------------------------------------------------------
# lattice points on coordinate subspaces


@dataclass
class LatticeRecord:
    count: int
    bound: int


def codim_lattice_count(zero_coords: Sequence[int], r: int, n: int, predicate: Callable[[tuple], bool] | None = None) -> LatticeRecord:
    """Points of [0, r)^n on the subspace where the listed coordinates vanish, with the bound r^(n-k).

    With a `predicate` the points are enumerated and tested one by one
    (r^n at most 10^6); otherwise the count is a product over coordinates.
    """
    if not 1 <= n <= 3:
        raise ValueError("n must be 1, 2 or 3")
    if not 1 <= r <= 10**4:
        raise ValueError("r must be in [1, 10^4]")
    zeros = set(zero_coords)
    if not zeros <= set(range(n)):
        raise ValueError("coordinate index out of range")
    k = len(zeros)
    bound = r ** (n - k)
    if predicate is None:
        return LatticeRecord(math.prod(1 if i in zeros else r for i in range(n)), bound)
    if r**n > 10**6:
        raise ValueError("enumeration limited to 10^6 points")
    import itertools

    count = sum(1 for pt in itertools.product(range(r), repeat=n) if predicate(pt))
    return LatticeRecord(count, bound)


# ---------------------------------------------------------------------------
# function-field squarefree discriminants


FQ_SAMPLE_THRESHOLD = 10**6


def _fq_disc(A: FqPolynomial, B: FqPolynomial) -> FqPolynomial:
    F = A.field
    return (A * A * A).scale(F.from_int(4)) + (B * B).scale(F.from_int(27))


def fq_squarefree_disc_density(q: int, d: int, samples: int = 20000, seed: int = 0) -> DensityResult:
    """Fraction of minimal (A, B) over F_q[t], deg A <= 4d and deg B <= 6d, whose 4A^3 + 27B^2 is squarefree.

    The fraction is over minimal points. Exhaustive runs visit one point per
    unit orbit and weight it by the orbit size (squarefreeness is unit
    invariant). Above 10^6 raw pairs a seeded uniform sample of raw pairs is
    drawn, non-minimal ones are rejected, and the result says so.
    """
    if q not in (2, 3, 5):
        raise ValueError("q must be 2, 3 or 5")
    if not 0 <= d <= 3:
        raise ValueError("d must be between 0 and 3")
    raw = q ** (4 * d + 1) * q ** (6 * d + 1)
    if raw <= FQ_SAMPLE_THRESHOLD:
        good = total = 0
        for A, B in iter_minimal_fq_coords(q, d, (4, 6)):
            size = len({_orbit_key(pt) for pt in _unit_orbit((A, B), (4, 6))})
            total += size
            good += size * _fq_disc(A, B).is_squarefree()
        return DensityResult(q, good, total, f"squarefree discriminants over F_{q}[t], d = {d}", {"mode": "exact"})
    rng = random.Random(seed)
    good = total = 0
    F = GF(q)
    while total < samples:
        A = FqPolynomial(F, [rng.randrange(q) for _ in range(4 * d + 1)])
        B = FqPolynomial(F, [rng.randrange(q) for _ in range(6 * d + 1)])
        if (A.is_zero() and B.is_zero()) or not _is_minimal_fq((A, B), (4, 6)):
            continue
        total += 1
        good += _fq_disc(A, B).is_squarefree()
    return DensityResult(q, good, total, f"squarefree discriminants over F_{q}[t], d = {d}", {"mode": "sampled", "seed": seed, "samples": samples})

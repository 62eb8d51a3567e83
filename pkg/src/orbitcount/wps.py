"""Weighted projective points, heights and minimal representatives over Z and F_q[t].

A point (A_1, ..., A_n) of weights (w_1, ..., w_n) is scaled by
alpha . A = (alpha^w_1 A_1, ..., alpha^w_n A_n). A representative is minimal
when no prime pi has pi^w_i | A_i for every i; the height of a minimal
integral point is max |A_i|^(1/w_i).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from .rings import FqPolynomial, GF, factorint, monic_irreducibles, primes_up_to


class NotMinimal(ValueError):
    pass


@dataclass(frozen=True)
class WeightSystem:
    weights: tuple[int, ...]

    def __post_init__(self):
        ws = tuple(int(w) for w in self.weights)
        if not ws or any(w < 1 for w in ws):
            raise ValueError("weights must be a nonempty list of positive integers")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def of(cls, weights) -> "WeightSystem":
        return weights if isinstance(weights, WeightSystem) else cls(tuple(weights))

    @property
    def lcm(self) -> int:
        return math.lcm(*self.weights)

    def __len__(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class WpsPointQ:
    coords: tuple[int, ...]
    weights: WeightSystem

    def __post_init__(self):
        object.__setattr__(self, "weights", WeightSystem.of(self.weights))
        object.__setattr__(self, "coords", tuple(self.coords))
        if len(self.coords) != len(self.weights):
            raise ValueError("coordinate count does not match the weight system")
        if not any(self.coords):
            raise ValueError("zero point")


@dataclass(frozen=True)
class WpsPointFq:
    coords: tuple[FqPolynomial, ...]
    weights: WeightSystem
    q: int

    def __post_init__(self):
        object.__setattr__(self, "weights", WeightSystem.of(self.weights))
        object.__setattr__(self, "coords", tuple(self.coords))
        if len(self.coords) != len(self.weights):
            raise ValueError("coordinate count does not match the weight system")
        if all(c.is_zero() for c in self.coords):
            raise ValueError("zero point")


@dataclass(frozen=True, order=False)
class Height:
    """The real number radicand^(1/index), kept exact.

    Over Q the radicand is max |A_i|^(L/w_i) with L the lcm of the weights.
    """

    radicand: int
    index: int

    def power(self, k: int) -> int:
        """H^k when k is a multiple of the index."""
        assert k % self.index == 0
        return self.radicand ** (k // self.index)

    def exact(self) -> int | None:
        r = _integer_root(self.radicand, self.index)
        return r if r is not None and r**self.index == self.radicand else None

    def le(self, bound: int | Fraction) -> bool:
        bound = Fraction(bound)
        if bound < 0:
            return False
        n = self.index
        return self.radicand * bound.denominator**n <= bound.numerator**n

    def __le__(self, bound) -> bool:
        return self.le(bound)

    def __float__(self) -> float:
        return float(self.radicand) ** (1.0 / self.index)

    def __str__(self) -> str:
        e = self.exact()
        if e is not None:
            return str(e)
        return f"{self.radicand}^(1/{self.index})"


@dataclass(frozen=True)
class FqHeight:
    """q^exponent with exponent = max deg A_i / w_i."""

    q: int
    exponent: Fraction

    def le(self, d: int | Fraction) -> bool:
        """Compare against q^d."""
        return self.exponent <= Fraction(d)

    def __str__(self) -> str:
        e = self.exponent
        return f"{self.q}^{e.numerator}" if e.denominator == 1 else f"{self.q}^({e})"


def _integer_root(n: int, k: int) -> int | None:
    if n < 0:
        return None
    if n in (0, 1):
        return n
    r = int(round(n ** (1.0 / k)))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == n:
            return cand
    lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo**k == n else None


# ---------------------------------------------------------------------------
# over Q


def is_minimal(point: WpsPointQ | WpsPointFq) -> bool:
    if isinstance(point, WpsPointFq):
        return _is_minimal_fq(point.coords, point.weights.weights)
    g = 0
    for c in point.coords:
        g = math.gcd(g, c)
    if g == 1:
        return True
    for p in factorint(g):
        if all(c == 0 or _divisible_power(c, p, w) for c, w in zip(point.coords, point.weights.weights)):
            return False
    return True


def _divisible_power(c: int, p: int, w: int) -> bool:
    return c % p**w == 0


def height(point: WpsPointQ | WpsPointFq) -> Height | FqHeight:
    if not is_minimal(point):
        raise NotMinimal("reduce first")
    if isinstance(point, WpsPointFq):
        exps = [Fraction(c.degree, w) for c, w in zip(point.coords, point.weights.weights) if not c.is_zero()]
        return FqHeight(point.q, max(exps))
    return archimedean_height(point)


def archimedean_height(point: WpsPointQ) -> Height:
    """max |A_i|^(1/w_i) without the minimality check.

    Equals the height only on minimal representatives.
    """
    L = point.weights.lcm
    rad = max(abs(c) ** (L // w) for c, w in zip(point.coords, point.weights.weights))
    return _simplify_height(rad, L)


def _simplify_height(rad: int, index: int) -> Height:
    for d in sorted(_divisors_small(index), reverse=True):
        if d == 1:
            break
        r = _integer_root(rad, d)
        if r is not None:
            return Height(r, index // d)
    return Height(rad, index)


def _divisors_small(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _sign_key(weights: Sequence[int]) -> list[int]:
    """Odd-weight coordinate indices, by (weight, index)."""
    return sorted((i for i, w in enumerate(weights) if w % 2), key=lambda i: (weights[i], i))


def reduce_to_minimal(point: WpsPointQ | WpsPointFq):
    """Minimal representative of the class of `point`."""
    if isinstance(point, WpsPointFq):
        return _reduce_fq(point)
    return reduce_rational(point.coords, point.weights)


def reduce_rational(coords: Sequence[int | Fraction], weights) -> WpsPointQ:
    """Minimal integral representative of a point with rational coordinates.

    Denominators are cleared by the weight action before content is removed.
    """
    ws = WeightSystem.of(weights)
    cs = [Fraction(c) for c in coords]
    if len(cs) != len(ws):
        raise ValueError("coordinate count does not match the weight system")
    if not any(cs):
        raise ValueError("zero point")
    wt = ws.weights
    # clear denominators: alpha = prod p^ceil(v_p(den)/w)
    alpha = 1
    den = math.lcm(*(c.denominator for c in cs))
    for p in factorint(den) if den > 1 else {}:
        need = max(-(-_vp(c.denominator, p) // w) for c, w in zip(cs, wt))
        alpha *= p**need
    ints = [int(c * alpha**w) for c, w in zip(cs, wt)]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    for p in factorint(g) if g > 1 else {}:
        k = min(_vp(c, p) // w for c, w in zip(ints, wt) if c)
        if k:
            ints = [c // p ** (k * w) for c, w in zip(ints, wt)]
    for i in _sign_key(wt):
        if ints[i]:
            if ints[i] < 0:
                ints = [-c if w % 2 else c for c, w in zip(ints, wt)]
            break
    return WpsPointQ(tuple(ints), ws)


def _vp(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n and n % p == 0:
        n //= p
        v += 1
    return v


def box_bounds(X: int | Fraction, weights: Sequence[int]) -> list[int]:
    """floor(X^w) for each weight."""
    X = Fraction(X)
    return [(X.numerator**w) // (X.denominator**w) for w in weights]


def iter_minimal_coords(X: int | Fraction, weights: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Coordinates of every minimal point with height <= X, lexicographic.

    Only primes p with p^w_i <= floor(X^w_i) for some i can divide a point
    of the box to the required powers, and those are the primes <= X.
    """
    wt = tuple(weights)
    bounds = box_bounds(X, wt)
    X = Fraction(X)
    primes = [p for p in primes_up_to(int(X) + 1) if any(p**w <= b for w, b in zip(wt, bounds))]
    n = len(wt)

    def rec(i: int, prefix: tuple[int, ...], alive: tuple[int, ...], all_zero: bool):
        b, w = bounds[i], wt[i]
        if i == n - 1:
            bad: set[int] = set()
            for p in alive:
                step = p**w
                bad.update(range(-(b // step) * step, b + 1, step))
            if all_zero:
                bad.add(0)
            if not bad:
                for v in range(-b, b + 1):
                    yield prefix + (v,)
            else:
                for v in range(-b, b + 1):
                    if v not in bad:
                        yield prefix + (v,)
            return
        for v in range(-b, b + 1):
            if v == 0:
                nxt = alive
            else:
                nxt = tuple(p for p in alive if v % p**w == 0)
            yield from rec(i + 1, prefix + (v,), nxt, all_zero and v == 0)

    yield from rec(0, (), tuple(primes), True)


def enumerate_minimal(X: int | Fraction, weights) -> Iterator[WpsPointQ]:
    ws = WeightSystem.of(weights)
    if Fraction(X) < 1:
        return
    for cs in iter_minimal_coords(X, ws.weights):
        yield WpsPointQ(cs, ws)


def count_minimal(X: int | Fraction, weights) -> int:
    return sum(1 for _ in iter_minimal_coords(X, WeightSystem.of(weights).weights))


def brute_force_minimal(X: int | Fraction, weights: Sequence[int]) -> list[tuple[int, ...]]:
    """Loop over the whole box and keep minimal points (slow reference)."""
    bounds = box_bounds(X, weights)
    out = []
    for cs in product(*(range(-b, b + 1) for b in bounds)):
        if any(cs) and is_minimal(WpsPointQ(cs, WeightSystem(tuple(weights)))):
            out.append(cs)
    return out


# ---------------------------------------------------------------------------
# over F_q[t]

SUPPORTED_Q = (2, 3, 4, 5)


def _is_minimal_fq(coords: Sequence[FqPolynomial], weights: Sequence[int]) -> bool:
    nonzero = [c for c in coords if not c.is_zero()]
    g = nonzero[0]
    for c in nonzero[1:]:
        g = g.gcd(c)
    g = g.monic()
    if g.degree <= 0:
        return True
    q = g.q
    max_deg = min(c.degree // w for c, w in zip(coords, weights) if not c.is_zero())
    for k in range(1, max_deg + 1):
        for pi in monic_irreducibles(q, k):
            if pi.divides(g) and all((pi**w).divides(c) for c, w in zip(coords, weights)):
                return False
    return True


def _unit_orbit(coords: Sequence[FqPolynomial], weights: Sequence[int]) -> list[tuple[FqPolynomial, ...]]:
    F = coords[0].field
    out = []
    for alpha in F.units():
        out.append(tuple(c.scale(F.power(alpha, w)) for c, w in zip(coords, weights)))
    return out


def _orbit_key(coords: Sequence[FqPolynomial]) -> tuple[int, ...]:
    return tuple(c.encode() for c in coords)


def _canonical_fq(coords, weights):
    return min(_unit_orbit(coords, weights), key=_orbit_key)


def _reduce_fq(point: WpsPointFq) -> WpsPointFq:
    coords = list(point.coords)
    wt = point.weights.weights
    changed = True
    while changed:
        changed = False
        nonzero = [c for c in coords if not c.is_zero()]
        g = nonzero[0]
        for c in nonzero[1:]:
            g = g.gcd(c)
        if g.degree <= 0:
            break
        max_deg = min(c.degree // w for c, w in zip(coords, wt) if not c.is_zero())
        for k in range(1, max_deg + 1):
            for pi in monic_irreducibles(point.q, k):
                if all((pi**w).divides(c) for c, w in zip(coords, wt)):
                    coords = [c.divmod(pi**w)[0] for c, w in zip(coords, wt)]
                    changed = True
                    break
            if changed:
                break
    return WpsPointFq(_canonical_fq(coords, wt), point.weights, point.q)


def iter_minimal_fq_coords(q: int, d: int, weights: Sequence[int]) -> Iterator[tuple[FqPolynomial, ...]]:
    """Canonical minimal representatives with deg A_i <= w_i d, one per unit orbit."""
    if q not in SUPPORTED_Q:
        raise ValueError(f"unsupported q = {q}; supported: {SUPPORTED_Q}")
    wt = tuple(weights)
    F = GF(q)
    spaces = [q ** (w * d + 1) for w in wt]
    n = len(wt)
    unit_powers = [[F.power(alpha, w) for w in wt] for alpha in F.units() if alpha != 1]

    def rec(i: int, prefix: tuple, alive: tuple):
        w = wt[i]
        for code in range(spaces[i]):
            c = FqPolynomial.decode(q, code)
            if c.is_zero():
                nxt = alive
            else:
                nxt = tuple(pi for pi in alive if (pi**w).divides(c))
            cur = prefix + (c,)
            if i == n - 1:
                if all(x.is_zero() for x in cur) or nxt:
                    continue
                if unit_powers and not _is_canonical(cur, unit_powers):
                    continue
                yield cur
            else:
                yield from rec(i + 1, cur, nxt)

    candidates = tuple(pi for k in range(1, d + 1) for pi in monic_irreducibles(q, k))
    yield from rec(0, (), candidates)


def _is_canonical(coords, unit_powers) -> bool:
    key = _orbit_key(coords)
    for pw in unit_powers:
        other = tuple(c.scale(s) for c, s in zip(coords, pw))
        if _orbit_key(other) < key:
            return False
    return True


def enumerate_minimal_fq(q: int, d: int, weights) -> Iterator[WpsPointFq]:
    ws = WeightSystem.of(weights)
    for cs in iter_minimal_fq_coords(q, d, ws.weights):
        yield WpsPointFq(cs, ws, q)


def count_minimal_fq_sieve(q: int, d: int, weights: Sequence[int]) -> int:
    """Independent count of unit orbits of minimal points in the degree box.

    Points are integer-encoded; a point is non-minimal iff for some monic
    pi of degree <= d every coordinate lies in the set of encoded multiples
    of pi^w_i. Orbits are counted with Burnside's lemma over F_q^x.
    """
    F = GF(q)
    wt = tuple(weights)
    sizes = [q ** (w * d + 1) for w in wt]
    # encoded multiples of pi^w with degree <= w d, for every monic pi of degree 1..d
    pis = [pi for k in range(1, d + 1) for pi in _all_monic(q, k)]
    bad_sets = []
    for pi in pis:
        sets = []
        for w, size in zip(wt, sizes):
            base = pi**w
            mult = {0}
            room = w * d - base.degree
            if room >= 0:
                for code in range(q ** (room + 1)):
                    h = FqPolynomial.decode(q, code)
                    mult.add((h * base).encode())
            sets.append(mult)
        bad_sets.append(sets)
    nonminimal_by_point = set()
    for sets in bad_sets:
        for combo in product(*[sorted(s) for s in sets]):
            nonminimal_by_point.add(combo)
    total_points = 1
    for s in sizes:
        total_points *= s
    # Burnside: orbits = (1/|G|) sum_g |Fix(g)| over minimal nonzero points
    units = F.units()
    total_fixed = 0
    for alpha in units:
        powers = [F.power(alpha, w) for w in wt]
        fixed_axes = []
        for s, size in zip(powers, sizes):
            # coefficients c with s*c = c: all c if s = 1, otherwise only 0
            fixed_axes.append(size if s == 1 else 1)
        count = 1
        for f in fixed_axes:
            count *= f
        count -= 1  # zero point
        bad_fixed = sum(
            1
            for pt in nonminimal_by_point
            if any(pt) and all(s == 1 or c == 0 for c, s in zip(pt, powers))
        )
        total_fixed += count - bad_fixed
    assert total_fixed % len(units) == 0
    return total_fixed // len(units)


def _all_monic(q: int, k: int) -> list[FqPolynomial]:
    """Every monic polynomial of degree k (irreducible or not)."""
    return [FqPolynomial(q, [(n // q**i) % q for i in range(k)] + [1]) for n in range(q**k)]


# ---------------------------------------------------------------------------
# geometry-of-numbers experiments


@dataclass(frozen=True)
class DavenportRecord:
    count: int
    volume: Fraction
    projection_bound: Fraction


def davenport_experiment(box=((0, 1), (0, 1)), shear: Fraction | int = 0, t1: int = 1, t2: int = 1) -> DavenportRecord:
    """Lattice points in the closed image of box under diag(t1, t2) [[1, shear], [0, 1]].

    (u, v) maps to (t1 (u + shear v), t2 v). Counted exactly row by row.
    """
    shear = Fraction(shear)
    if t1 < 1 or t2 < 1:
        raise ValueError("t1, t2 must be >= 1")
    if abs(shear) > 2:
        raise ValueError("|shear| must be <= 2")
    (u0, u1), (v0, v1) = [(Fraction(a), Fraction(b)) for a, b in box]
    ylo, yhi = t2 * v0, t2 * v1
    count = 0
    for y in range(math.ceil(ylo), math.floor(yhi) + 1):
        v = Fraction(y, t2)
        lo = t1 * (u0 + shear * v)
        hi = t1 * (u1 + shear * v)
        n = math.floor(hi) - math.ceil(lo) + 1
        if n > 0:
            count += n
    volume = (u1 - u0) * (v1 - v0) * t1 * t2
    xs = [t1 * (u + shear * v) for u in (u0, u1) for v in (v0, v1)]
    projection = max(max(xs) - min(xs), yhi - ylo)
    return DavenportRecord(count, volume, projection)


@dataclass(frozen=True)
class CongruenceRecord:
    count: int
    bound: Fraction


def congruence_count(L: int, m: int, targets, n: int) -> CongruenceRecord:
    """Points of [0, L)^n whose reduction mod m lies in targets."""
    if L < 1 or m < 1:
        raise ValueError("L and m must be positive")
    per_residue = [0 if r >= L else (L - 1 - r) // m + 1 for r in range(m)]
    tset = {tuple(int(x) % m for x in t) for t in targets}
    count = 0
    for t in tset:
        if len(t) != n:
            raise ValueError("target of the wrong dimension")
        c = 1
        for r in t:
            c *= per_residue[r]
        count += c
    bound = (Fraction(L**n, m**n) + 1) * len(tset)
    return CongruenceRecord(count, bound)

"""Exact arithmetic substrate.

Integer polynomials with subresultant resultants, modular root finding and
Hensel lifting, local squareness over Q_p and R, small prime and factoring
helpers, finite fields F_q with q = p^k, polynomials over F_q, and a
bounded-precision p-adic number type.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

INFINITY = "inf"


class ArithmeticError_(ValueError):
    """Raised for mathematically undefined requests."""


class InsufficientPrecision(ArithmeticError_):
    pass


# ---------------------------------------------------------------------------
# primes and factoring


@lru_cache(maxsize=None)
def primes_up_to(n: int) -> tuple[int, ...]:
    if n < 2:
        return ()
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i in range(n + 1) if sieve[i])


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 64
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of |n| (n != 0) as {prime: exponent}."""
    if n == 0:
        raise ArithmeticError_("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    for p in primes_up_to(1000):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _pollard_brent(m)
        stack += [d, m // d]
    return dict(sorted(out.items()))


def prime_divisors(n: int) -> list[int]:
    return list(factorint(n)) if n else []


def valuation(x: int | Fraction, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    if x == 0:
        raise ArithmeticError_("valuation of zero")
    x = Fraction(x)
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def squarefree_part(n: int) -> int:
    """Signed squarefree kernel: n = s * m^2 with s squarefree."""
    if n == 0:
        raise ArithmeticError_("squarefree part of 0")
    s = -1 if n < 0 else 1
    for p, e in factorint(n).items():
        if e % 2:
            s *= p
    return s


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_mod_prime(a: int, p: int) -> int:
    """A square root of a modulo an odd prime p (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        raise ArithmeticError_("non-residue")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


# ---------------------------------------------------------------------------
# integer polynomials


class IntPolynomial:
    """Polynomial over Z, coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def from_descending(cls, coeffs: Sequence[int]) -> "IntPolynomial":
        return cls(list(reversed(coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return IntPolynomial([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def exact_div(self, k: int) -> "IntPolynomial":
        assert all(c % k == 0 for c in self.coeffs)
        return IntPolynomial(c // k for c in self.coeffs)

    def compose_linear(self, shift: int, scale: int = 1) -> "IntPolynomial":
        """Coefficients of f(shift + scale*x)."""
        out = IntPolynomial([])
        base = IntPolynomial([shift, scale])
        power = IntPolynomial([1])
        for c in self.coeffs:
            out = out + power * c
            power = power * base
        return out

    def pseudo_remainder(self, other: "IntPolynomial") -> "IntPolynomial":
        if other.is_zero():
            raise ArithmeticError_("division by zero polynomial")
        r = list(self.coeffs)
        dg, lg = other.degree, other.lc
        e = len(r) - 1 - dg + 1
        while r and len(r) - 1 >= dg:
            lead = r[-1]
            shift = len(r) - 1 - dg
            r = [c * lg for c in r]
            for i, c in enumerate(other.coeffs):
                r[i + shift] -= lead * c
            r.pop()
            e -= 1
            while r and r[-1] == 0:
                r.pop()
        return IntPolynomial(r) * (lg ** max(e, 0))


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Sylvester resultant via the subresultant pseudo-remainder sequence."""
    if f.is_zero() and g.is_zero():
        raise ArithmeticError_("undefined resultant")
    if f.is_zero() or g.is_zero():
        return 0
    if f.degree == 0:
        return f.lc ** g.degree
    if g.degree == 0:
        return g.lc ** f.degree
    a_cont, b_cont = f.content(), g.content()
    A, B = f.exact_div(a_cont), g.exact_div(b_cont)
    sign = 1
    if A.degree < B.degree:
        A, B = B, A
        if A.degree % 2 and B.degree % 2:
            sign = -1
    t = a_cont ** g.degree * b_cont ** f.degree
    gg = Fraction(1)
    h = Fraction(1)
    while True:
        delta = A.degree - B.degree
        if A.degree % 2 and B.degree % 2:
            sign = -sign
        R = A.pseudo_remainder(B)
        A = B
        if R.is_zero():
            return 0
        div = gg * h ** delta
        B = IntPolynomial(_exact(Fraction(c) / div) for c in R.coeffs)
        gg = Fraction(A.lc)
        h = h ** (1 - delta) * gg ** delta if delta <= 1 else gg ** delta / h ** (delta - 1)
        if B.degree == 0:
            res = Fraction(B.lc) ** A.degree / h ** (A.degree - 1)
            return sign * t * _exact(res)


def _exact(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError_("inexact division in subresultant sequence")
    return x.numerator


def sylvester_resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Determinant of the Sylvester matrix (slow, independent check)."""
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return determinant(rows)


def determinant(rows: Sequence[Sequence]) -> Fraction | int:
    """Exact determinant by fraction-free Bareiss elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num // prev if isinstance(num, int) and isinstance(prev, int) else num / prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def disc_univariate(f: IntPolynomial) -> int:
    if f.degree < 1:
        raise ArithmeticError_("discriminant of a constant")
    d = f.degree
    r = resultant(f, f.derivative())
    s = -1 if (d * (d - 1) // 2) % 2 else 1
    q, rem = divmod(s * r, f.lc)
    assert rem == 0
    return q


def roots_mod_p(f: IntPolynomial, p: int) -> list[int]:
    cs = [c % p for c in f.coeffs]
    if not any(cs):
        raise ArithmeticError_("identically zero mod p")
    out = []
    for x in range(p):
        acc = 0
        for c in reversed(cs):
            acc = (acc * x + c) % p
        if acc == 0:
            out.append(x)
    return out


def hensel_lift_root(f: IntPolynomial, p: int, r: int, k: int) -> int:
    if f(r) % p or f.derivative()(r) % p == 0:
        raise ArithmeticError_("Hensel hypothesis fails")
    df = f.derivative()
    s, mod = r % p, p
    while mod < p**k:
        mod = min(mod * mod, p**k)
        inv = pow(df(s) % mod, -1, mod)
        s = (s - f(s) * inv) % mod
    return s


def is_square_local(x: int | Fraction, place) -> bool:
    x = Fraction(x)
    if x == 0:
        raise ArithmeticError_("degenerate")
    if place == INFINITY:
        return x > 0
    p = int(place)
    v = valuation(x, p)
    if v % 2:
        return False
    u = x / Fraction(p) ** v
    if p == 2:
        return u.numerator * pow(u.denominator, -1, 8) % 8 == 1
    return legendre(u.numerator * u.denominator, p) == 1


def rational_roots(coeffs_desc: Sequence[int]) -> list[Fraction]:
    """Rational roots of an integer polynomial given by descending coefficients.

    A root p/q in lowest terms has q | lc, so it reduces to a root modulo any
    prime not dividing lc; if some small such prime admits no root there is
    nothing to find. Otherwise candidates come from high-precision complex
    roots rounded with denominator at most |lc|, and every candidate is
    verified exactly.
    """
    cs = list(coeffs_desc)
    while cs and cs[0] == 0:
        cs.pop(0)
    out: set[Fraction] = set()
    while len(cs) > 1 and cs[-1] == 0:
        out.add(Fraction(0))
        cs.pop()
    if len(cs) <= 1:
        return sorted(out)
    poly = IntPolynomial.from_descending(cs)
    lead = abs(cs[0])
    for ell in (3, 5, 7, 11, 13, 17):
        if lead % ell and not roots_mod_p(poly, ell):
            return sorted(out)
    import mpmath

    with mpmath.workdps(max(40, 3 * len(str(max(abs(c) for c in cs))))):
        for z in _approximate_roots(cs):
            if abs(z.imag) > mpmath.mpf(10) ** (-10) * (1 + abs(z.real)):
                continue
            cand = mpf_to_fraction(z.real).limit_denominator(lead)
            if _eval_homog(poly, cand.numerator, cand.denominator) == 0:
                out.add(cand)
    return sorted(out)


def mpf_to_fraction(x) -> Fraction:
    """Exact value of a finite mpmath real."""
    import mpmath

    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    if not man:
        return Fraction(0)
    man = -int(man) if sign else int(man)
    return Fraction(man * 2**exp) if exp >= 0 else Fraction(man, 2 ** (-exp))


def _approximate_roots(cs: Sequence[int]) -> list:
    """Complex roots at the current mpmath precision.

    Double-precision seeds are refined by Newton; if any seed fails to
    converge (a multiple or clustered root) the full Durand-Kerner solver runs.
    """
    import mpmath
    import numpy as np

    deriv = [c * (len(cs) - 1 - i) for i, c in enumerate(cs[:-1])]
    eps = mpmath.mpf(10) ** (5 - mpmath.mp.dps)
    out = []
    for seed in np.roots([float(c) for c in cs]):
        z = mpmath.mpc(complex(seed))
        for _ in range(30):
            dz = mpmath.polyval(deriv, z)
            if dz == 0:
                break
            step = mpmath.polyval(cs, z) / dz
            z -= step
            if abs(step) <= eps * max(1, abs(z)):
                out.append(z)
                break
        else:
            break
    distinct = all(abs(u - v) > 1e-8 * max(1, abs(u)) for i, u in enumerate(out) for v in out[:i])
    if len(out) == len(cs) - 1 and distinct:
        return out
    return [mpmath.mpc(z) for z in mpmath.polyroots([mpmath.mpf(c) for c in cs], maxsteps=200, extraprec=200)]


def _eval_homog(poly: IntPolynomial, num: int, den: int) -> int:
    d = poly.degree
    return sum(c * num**i * den ** (d - i) for i, c in enumerate(poly.coeffs))


def rational_roots_by_divisors(coeffs_desc: Sequence[int]) -> list[Fraction]:
    """Slow rational-root-theorem search, used as an independent check."""
    cs = list(coeffs_desc)
    while cs and cs[0] == 0:
        cs.pop(0)
    out: set[Fraction] = set()
    while len(cs) > 1 and cs[-1] == 0:
        out.add(Fraction(0))
        cs.pop()
    if len(cs) <= 1:
        return sorted(out)
    poly = IntPolynomial.from_descending(cs)
    for q in divisors(cs[0]):
        for pnum in divisors(cs[-1]):
            for s in (1, -1):
                if math.gcd(pnum, q) == 1 and _eval_homog(poly, s * pnum, q) == 0:
                    out.add(Fraction(s * pnum, q))
    return sorted(out)


def divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        raise ArithmeticError_("divisors of 0")
    out = [1]
    for p, e in factorint(n).items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


# ---------------------------------------------------------------------------
# finite fields and polynomials over them


class FiniteField:
    """F_q for q = p^k, elements encoded as integers 0..q-1.

    For k > 1 an element is the base-p digit vector of a polynomial in a
    fixed root of the lexicographically first monic irreducible of degree k.
    """

    def __init__(self, q: int):
        fac = factorint(q)
        if len(fac) != 1:
            raise ArithmeticError_(f"{q} is not a prime power")
        (self.p, self.k), = fac.items()
        self.q = q
        if self.k == 1:
            self._mul = None
        else:
            self.modulus = _first_irreducible(self.p, self.k)
            self._build_tables()

    def _build_tables(self) -> None:
        p, k, q = self.p, self.k, self.q
        digits = [[(x // p**i) % p for i in range(k)] for x in range(q)]
        enc = lambda v: sum(c * p**i for i, c in enumerate(v))
        self._add = [[enc([(a + b) % p for a, b in zip(digits[x], digits[y])]) for y in range(q)] for x in range(q)]
        self._neg = [enc([(-a) % p for a in digits[x]]) for x in range(q)]
        mod = self.modulus
        mul = [[0] * q for _ in range(q)]
        for x in range(q):
            for y in range(q):
                prod = [0] * (2 * k - 1)
                for i, a in enumerate(digits[x]):
                    for j, b in enumerate(digits[y]):
                        prod[i + j] = (prod[i + j] + a * b) % p
                for deg in range(2 * k - 2, k - 1, -1):
                    c = prod[deg]
                    if c:
                        for i in range(k + 1):
                            prod[deg - k + i] = (prod[deg - k + i] - c * mod[i]) % p
                mul[x][y] = enc(prod[:k])
        self._mul = mul
        self._inv = [0] * q
        for x in range(1, q):
            for y in range(1, q):
                if mul[x][y] == 1:
                    self._inv[x] = y

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.p if self._mul is None else self._add[x][y]

    def neg(self, x: int) -> int:
        return (-x) % self.p if self._mul is None else self._neg[x]

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        return x * y % self.p if self._mul is None else self._mul[x][y]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return pow(x, -1, self.p) if self._mul is None else self._inv[x]

    def power(self, x: int, n: int) -> int:
        out = 1
        for _ in range(n % (self.q - 1) if x else n):
            out = self.mul(out, x)
        return out if (x or n == 0) else 0

    def from_int(self, n: int) -> int:
        """Image of an integer under Z -> F_q."""
        return n % self.p

    def units(self) -> list[int]:
        return list(range(1, self.q))

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("GF", self.q))


def _first_irreducible(p: int, k: int) -> list[int]:
    """Ascending coefficients of the first monic irreducible of degree k over F_p."""
    for n in range(p**k):
        cs = [(n // p**i) % p for i in range(k)] + [1]
        if cs[0] == 0:
            continue
        if _is_irreducible_prime_field(cs, p):
            return cs
    raise AssertionError("no irreducible found")


def _is_irreducible_prime_field(cs: list[int], p: int) -> bool:
    k = len(cs) - 1
    for d in range(1, k // 2 + 1):
        for n in range(p**d):
            g = [(n // p**i) % p for i in range(d)] + [1]
            if not any(_polymod_prime(cs, g, p)):
                return False
    return True


def _polymod_prime(a: list[int], b: list[int], p: int) -> list[int]:
    r = a[:]
    inv = pow(b[-1], -1, p)
    while len(r) >= len(b):
        c = r[-1] * inv % p
        s = len(r) - len(b)
        for i, x in enumerate(b):
            r[s + i] = (r[s + i] - c * x) % p
        r.pop()
    return r


@lru_cache(maxsize=None)
def GF(q: int) -> FiniteField:
    return FiniteField(q)


class FqPolynomial:
    """Polynomial over F_q in the variable t, ascending coefficients."""

    __slots__ = ("field", "coeffs")

    def __init__(self, q: int | FiniteField, coeffs: Iterable[int]):
        self.field = q if isinstance(q, FiniteField) else GF(q)
        cs = list(coeffs)
        for c in cs:
            if not 0 <= c < self.field.q:
                raise ArithmeticError_("coefficient outside F_q encoding")
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, FqPolynomial) and self.q == other.q and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.q, self.coeffs))

    def __repr__(self) -> str:
        return f"FqPolynomial(q={self.q}, {list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)

    def _new(self, cs) -> "FqPolynomial":
        return FqPolynomial(self.field, cs)

    def __add__(self, other: "FqPolynomial") -> "FqPolynomial":
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return self._new(F.add(x, y) for x, y in zip(a, b))

    def __neg__(self) -> "FqPolynomial":
        return self._new(self.field.neg(c) for c in self.coeffs)

    def __sub__(self, other: "FqPolynomial") -> "FqPolynomial":
        return self + (-other)

    def scale(self, c: int) -> "FqPolynomial":
        return self._new(self.field.mul(c, x) for x in self.coeffs)

    def __mul__(self, other: "FqPolynomial") -> "FqPolynomial":
        F = self.field
        if self.is_zero() or other.is_zero():
            return self._new([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return self._new(out)

    def __pow__(self, n: int) -> "FqPolynomial":
        out = self._new([1])
        for _ in range(n):
            out = out * self
        return out

    def divmod(self, other: "FqPolynomial") -> tuple["FqPolynomial", "FqPolynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        F = self.field
        r = list(self.coeffs)
        qout = [0] * max(len(r) - len(other.coeffs) + 1, 0)
        inv = F.inv(other.lc)
        db = other.degree
        while len(r) - 1 >= db and r:
            c = F.mul(r[-1], inv)
            s = len(r) - 1 - db
            qout[s] = c
            for i, x in enumerate(other.coeffs):
                r[s + i] = F.sub(r[s + i], F.mul(c, x))
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        return self._new(qout), self._new(r)

    def __mod__(self, other: "FqPolynomial") -> "FqPolynomial":
        return self.divmod(other)[1]

    def divides(self, other: "FqPolynomial") -> bool:
        """True iff self | other (the zero polynomial is divisible by everything)."""
        return (other % self).is_zero()

    def monic(self) -> "FqPolynomial":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lc))

    def derivative(self) -> "FqPolynomial":
        F = self.field
        return self._new(F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs) if i)

    def gcd(self, other: "FqPolynomial") -> "FqPolynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def is_squarefree(self) -> bool:
        """Nonzero and without repeated irreducible factors (units count as squarefree)."""
        if self.is_zero():
            return False
        if self.degree == 0:
            return True
        return self.gcd(self.derivative()).degree == 0

    def encode(self) -> int:
        """Base-q integer encoding (coefficient i is digit i)."""
        q = self.q
        return sum(c * q**i for i, c in enumerate(self.coeffs))

    @classmethod
    def decode(cls, q: int, n: int) -> "FqPolynomial":
        cs = []
        while n:
            n, c = divmod(n, q)
            cs.append(c)
        return cls(q, cs)


@lru_cache(maxsize=None)
def monic_irreducibles(q: int, degree: int) -> tuple[FqPolynomial, ...]:
    """All monic irreducible polynomials of the given degree over F_q, by trial division."""
    lower = [g for d in range(1, degree // 2 + 1) for g in monic_irreducibles(q, d)]
    out = []
    for n in range(q**degree):
        f = FqPolynomial(q, [(n // q**i) % q for i in range(degree)] + [1])
        if all(not g.divides(f) for g in lower):
            out.append(f)
    return tuple(out)


def count_monic_irreducibles(q: int, degree: int) -> int:
    """Necklace count (1/k) sum_{d | k} mu(d) q^(k/d)."""
    total = 0
    for d in divisors(degree):
        total += _mobius(d) * q ** (degree // d)
    return total // degree


def _mobius(n: int) -> int:
    if n == 1:
        return 1
    fac = factorint(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


# ---------------------------------------------------------------------------
# p-adic numbers


@dataclass(frozen=True)
class PadicNumber:
    """x = p^valuation * unit, with unit known modulo p^precision."""

    p: int
    unit: int
    valuation: int
    precision: int

    def __post_init__(self):
        if self.precision < 1:
            raise ArithmeticError_("precision must be positive")

    @classmethod
    def from_rational(cls, x: int | Fraction, p: int, precision: int = 20) -> "PadicNumber":
        x = Fraction(x)
        if x == 0:
            return cls(p, 0, precision, precision)
        v = valuation(x, p)
        u = x / Fraction(p) ** v
        mod = p**precision
        unit = u.numerator * pow(u.denominator, -1, mod) % mod
        return cls(p, unit, v, precision)

    def is_zero(self) -> bool:
        return self.unit % self.p == 0

    def __mul__(self, other: "PadicNumber") -> "PadicNumber":
        assert self.p == other.p
        prec = min(self.precision, other.precision)
        mod = self.p**prec
        return PadicNumber(self.p, self.unit * other.unit % mod, self.valuation + other.valuation, prec)

    def __add__(self, other: "PadicNumber") -> "PadicNumber":
        assert self.p == other.p
        p = self.p
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        v = min(self.valuation, other.valuation)
        abs_prec = min(self.valuation + self.precision, other.valuation + other.precision)
        total = self.unit * p ** (self.valuation - v) + other.unit * p ** (other.valuation - v)
        if total == 0:
            return PadicNumber(p, 0, abs_prec, max(abs_prec - v, 1))
        extra = 0
        while total % p == 0:
            total //= p
            extra += 1
        prec = abs_prec - v - extra
        if prec < 1:
            return PadicNumber(p, 0, abs_prec, 1)
        return PadicNumber(p, total % p**prec, v + extra, prec)

    def is_square(self) -> bool:
        if self.is_zero():
            raise InsufficientPrecision("insufficient precision: value indistinguishable from 0")
        if self.valuation % 2:
            return False
        if self.p == 2:
            if self.precision < 3:
                raise InsufficientPrecision("insufficient precision for a 2-adic square test")
            return self.unit % 8 == 1
        return legendre(self.unit, self.p) == 1

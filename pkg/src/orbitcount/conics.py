"""Rational points on conics by Legendre descent."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .rings import factorint, sqrt_mod_prime, squarefree_part

Vector = tuple[int, int, int]


def _sqrt_mod_squarefree(a: int, n: int) -> int | None:
    """t with t^2 = a mod n for squarefree n > 0, or None."""
    t, mod = 0, 1
    for p in factorint(n) if n > 1 else {}:
        r = a % p
        if p == 2:
            root = r
        elif r == 0:
            root = 0
        elif pow(r, (p - 1) // 2, p) != 1:
            return None
        else:
            root = sqrt_mod_prime(r, p)
        # combine t mod `mod` with root mod p
        k = ((root - t) * pow(mod, -1, p)) % p
        t += mod * k
        mod *= p
    return t


def _split_square(n: int) -> tuple[int, int]:
    """n = core * m^2 with squarefree signed core."""
    core = squarefree_part(n)
    return core, math.isqrt(n // core)


def legendre_solve(a: int, b: int, _depth: int = 0) -> Vector | None:
    """Nontrivial integer solution of X^2 = a Y^2 + b Z^2 for squarefree a, b, or None."""
    if _depth > 500:
        raise RuntimeError("Legendre descent did not terminate")
    if a < 0 and b < 0:
        return None
    if a == 1:
        return (1, 1, 0)
    if b == 1:
        return (1, 0, 1)
    if a + b == 0:
        return (0, 1, 1)
    if abs(a) > abs(b):
        sol = legendre_solve(b, a, _depth + 1)
        return None if sol is None else (sol[0], sol[2], sol[1])
    if abs(b) == 1:
        return None  # b = -1 and a = -1 remain, which has no real point
    t = _sqrt_mod_squarefree(a, abs(b))
    if t is None:
        return None
    if t > abs(b) // 2:
        t -= abs(b)
    q = (t * t - a) // b
    k, m = _split_square(q)
    sol = legendre_solve(a, k, _depth + 1)
    if sol is None:
        return None
    x, y, z = sol
    return (t * x + a * y, x + t * y, k * m * z)


def _bilinear(M, u, w):
    return sum(M[i][j] * u[i] * w[j] for i in range(3) for j in range(3))


def _primitive(v: Sequence[Fraction]) -> Vector:
    den = math.lcm(*(Fraction(x).denominator for x in v))
    ints = [int(Fraction(x) * den) for x in v]
    g = math.gcd(*ints)
    return tuple(x // g for x in ints)


def _solve_diagonal(d: Sequence[Fraction]) -> tuple[Fraction, Fraction, Fraction] | None:
    """Nontrivial rational zero of d1 u^2 + d2 v^2 + d3 w^2."""
    den = math.lcm(*(x.denominator for x in d))
    ints = [int(x * den) for x in d]
    cores, scales = zip(*(_split_square(x) for x in ints))
    r1, r2, r3 = cores
    # (r1 U)^2 = -r1 r2 V^2 - r1 r3 W^2
    a, alpha = _split_square(-r1 * r2)
    b, beta = _split_square(-r1 * r3)
    sol = legendre_solve(a, b)
    if sol is None:
        return None
    X, Y, Z = sol
    U, V, W = Fraction(X, r1), Fraction(Y, alpha), Fraction(Z, beta)
    return U / scales[0], V / scales[1], W / scales[2]


def conic_point(matrix: Sequence[Sequence[int | Fraction]]) -> Vector | None:
    """A nonzero integral isotropic vector of the symmetric 3x3 `matrix`, or None."""
    M = [[Fraction(x) for x in row] for row in matrix]
    remaining = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    chosen: list[list[Fraction]] = []
    diag: list[Fraction] = []
    while remaining:
        pick = None
        for v in remaining:
            if any(v):
                if _bilinear(M, v, v) == 0:
                    return _check(M, _primitive(v))
                pick = v
                break
        if pick is None:
            break
        remaining.remove(pick)
        q = _bilinear(M, pick, pick)
        remaining = [[w[i] - _bilinear(M, w, pick) / q * pick[i] for i in range(3)] for w in remaining]
        chosen.append(pick)
        diag.append(q)
    if len(diag) < 3:
        raise ValueError("degenerate conic")
    sol = _solve_diagonal(diag)
    if sol is None:
        return None
    point = [sum(sol[k] * chosen[k][i] for k in range(3)) for i in range(3)]
    return _check(M, _primitive(point))


def _check(M, v: Vector) -> Vector:
    if not any(v) or _bilinear(M, v, v) != 0:
        raise AssertionError(f"conic solver produced a non-point {v}")
    return v

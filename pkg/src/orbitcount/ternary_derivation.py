"""Derive the degree-4 and degree-6 invariants of ternary cubics from scratch.

An SL_3 invariant of the 10 cubic coefficients is a torus-weight-zero
polynomial killed by the six root operators x_i d/dx_j. We build that linear
system on weight-zero monomials, take its one-dimensional kernel in each
degree, and rescale the kernel vector so that the section
x^3 - (I/3) x z^2 - (J/27) z^3 - y^2 z has invariants exactly (I, J).

`python -m orbitcount.ternary_derivation` regenerates `_ternary_data.py`.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from pathlib import Path

# exponent vectors of x^i y^j z^k in the record order of TernaryCubic
CUBIC_MONOMIALS: tuple[tuple[int, int, int], ...] = (
    (3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1),
    (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3),
)
_INDEX = {m: i for i, m in enumerate(CUBIC_MONOMIALS)}

Monomial = tuple[int, ...]  # exponent of each of the 10 coefficients
Poly = dict[Monomial, Fraction]


def _weight(mono: Monomial) -> tuple[int, int, int]:
    w = [0, 0, 0]
    for k, e in enumerate(mono):
        if e:
            for axis in range(3):
                w[axis] += e * CUBIC_MONOMIALS[k][axis]
    return tuple(w)


def _weight_zero_monomials(degree: int) -> list[Monomial]:
    target = (degree, degree, degree)
    out = []
    for combo in combinations_with_replacement(range(10), degree):
        mono = [0] * 10
        for k in combo:
            mono[k] += 1
        mono = tuple(mono)
        if _weight(mono) == target:
            out.append(mono)
    return out


def _root_operator(i: int, j: int) -> list[list[tuple[int, int]]]:
    """Coefficient-space image of x_i d/dx_j: for each coefficient k, list of (k', multiplier)
    with d c_{k'} / dt = sum multiplier * c_k along the flow."""
    images: list[list[tuple[int, int]]] = [[] for _ in range(10)]
    for k, m in enumerate(CUBIC_MONOMIALS):
        if m[j] == 0:
            continue
        new = list(m)
        new[j] -= 1
        new[i] += 1
        images[k].append((_INDEX[tuple(new)], m[j]))
    return images


def _apply_operator(poly_monos: list[Monomial], images) -> dict[int, dict[Monomial, int]]:
    """For each basis monomial index, the image polynomial under the derivation.

    The derivation on coefficient polynomials is
    D(P) = sum_k dP/dc_k * (L c)_k where (L c)_{k'} = sum mult * c_k.
    """
    # (L c)_{k'} as linear forms
    lin: dict[int, list[tuple[int, int]]] = {}
    for k, targets in enumerate(images):
        for kp, mult in targets:
            lin.setdefault(kp, []).append((k, mult))
    out = {}
    for idx, mono in enumerate(poly_monos):
        img: dict[Monomial, int] = {}
        for kp, e in enumerate(mono):
            if not e or kp not in lin:
                continue
            for k, mult in lin[kp]:
                new = list(mono)
                new[kp] -= 1
                new[k] += 1
                new = tuple(new)
                img[new] = img.get(new, 0) + e * mult
        out[idx] = img
    return out


def _nullspace(rows: list[dict[int, int]], ncols: int) -> list[list[Fraction]]:
    """Kernel of a sparse integer matrix (rows as {col: value}) over Q."""
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        r = {c: Fraction(v) for c, v in row.items() if v}
        while r:
            col = min(r)
            if col in pivots:
                factor = r[col]
                for c, v in pivots[col].items():
                    nv = r.get(c, 0) - factor * v
                    if nv:
                        r[c] = nv
                    else:
                        r.pop(c, None)
            else:
                lead = r[col]
                pivots[col] = {c: v / lead for c, v in r.items()}
                break
    # back-substitute to reduced form
    for col in sorted(pivots, reverse=True):
        row = pivots[col]
        for other_col, other in pivots.items():
            if other_col != col and col in other:
                f = other[col]
                for c, v in row.items():
                    nv = other.get(c, 0) - f * v
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [Fraction(0)] * ncols
        vec[fcol] = Fraction(1)
        for pcol, row in pivots.items():
            vec[pcol] = -row.get(fcol, Fraction(0))
        basis.append(vec)
    return basis


def invariant_kernel(degree: int) -> list[Poly]:
    monos = _weight_zero_monomials(degree)
    rows_by_target: dict[Monomial, dict[int, int]] = {}
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            images = _apply_operator(monos, _root_operator(i, j))
            local: dict[Monomial, dict[int, int]] = {}
            for idx, img in images.items():
                for target, v in img.items():
                    local.setdefault(target, {})
                    local[target][idx] = local[target].get(idx, 0) + v
            for target, row in local.items():
                rows_by_target[(i, j) + target] = row
    basis = _nullspace(list(rows_by_target.values()), len(monos))
    return [{monos[k]: v for k, v in enumerate(vec) if v} for vec in basis]


def evaluate(poly: Poly, coeffs) -> Fraction:
    total = Fraction(0)
    for mono, v in poly.items():
        term = v
        for c, e in zip(coeffs, mono):
            if e:
                term *= Fraction(c) ** e
        total += term
    return total


def section_coefficients(I, J) -> list[Fraction]:
    coeffs = [Fraction(0)] * 10
    coeffs[_INDEX[(3, 0, 0)]] = Fraction(1)
    coeffs[_INDEX[(1, 0, 2)]] = -Fraction(I) / 3
    coeffs[_INDEX[(0, 0, 3)]] = -Fraction(J) / 27
    coeffs[_INDEX[(0, 2, 1)]] = Fraction(-1)
    return coeffs


def derive() -> tuple[Poly, Poly]:
    """Normalized (degree-4, degree-6) invariants."""
    (s_raw,) = invariant_kernel(4)
    (t_raw,) = invariant_kernel(6)
    s_scale = evaluate(s_raw, section_coefficients(1, 0))
    t_scale = evaluate(t_raw, section_coefficients(0, 1))
    assert s_scale and t_scale
    s = {m: v / s_scale for m, v in s_raw.items()}
    t = {m: v / t_scale for m, v in t_raw.items()}
    return s, t


def _render(name: str, poly: Poly) -> str:
    lines = [f"{name} = {{"]
    for mono in sorted(poly):
        v = poly[mono]
        lines.append(f"    {mono}: Fraction({v.numerator}, {v.denominator}),")
    lines.append("}")
    return "\n".join(lines)


def write_data_module(path: Path | None = None) -> Path:
    s, t = derive()
    path = path or Path(__file__).with_name("_ternary_data.py")
    text = (
        '"""Generated by orbitcount.ternary_derivation; do not edit by hand."""\n'
        "from fractions import Fraction\n\n"
        + _render("DEGREE4", s)
        + "\n\n"
        + _render("DEGREE6", t)
        + "\n"
    )
    path.write_text(text)
    return path


if __name__ == "__main__":
    print(write_data_module())

"""Combinatorial cusp conditions on torus characters, checked by exact LP.

A representation is summarized by the characters of a split maximal torus,
written as rational vectors over the simple roots, together with the
modular character of the Haar measure and a list of coordinate subsets
whose simultaneous vanishing forces non-genericity. Everything here runs in
exact rational arithmetic.
"""
from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from .lp import feasible_point, maximize

RootVector = tuple[Fraction, ...]
SATURATION_GUARD = 40


class CuspError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


def root_vector(coords: Iterable) -> RootVector:
    return tuple(Fraction(c) for c in coords)


@dataclass(frozen=True)
class Character:
    label: str
    vector: RootVector


@dataclass
class RepDatum:
    name: str
    rank: int
    u0: list[Character]
    delta: RootVector
    nongeneric_subsets: list[frozenset[str]]
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        labels = [c.label for c in self.u0]
        if len(set(labels)) != len(labels):
            raise CuspError("character labels must be unique")
        for c in self.u0:
            if len(c.vector) != self.rank:
                raise CuspError(f"character {c.label} has the wrong length")
        if len(self.delta) != self.rank:
            raise CuspError("delta has the wrong length")
        known = set(labels)
        for s in self.nongeneric_subsets:
            if not set(s) <= known:
                raise CuspError(f"unknown labels in {sorted(s)}")
        self._by_label = {c.label: c for c in self.u0}
        self._index = {c.label: i for i, c in enumerate(self.u0)}

    @property
    def labels(self) -> list[str]:
        return [c.label for c in self.u0]

    def vector(self, label: str) -> RootVector:
        try:
            return self._by_label[label].vector
        except KeyError:
            raise CuspError(f"unknown character {label!r}") from None

    def well_posed(self) -> bool:
        return all(x < 0 for x in self.delta)

    def character_sum(self, labels: Iterable[str] | None = None) -> RootVector:
        labels = self.labels if labels is None else labels
        total = [Fraction(0)] * self.rank
        for lab in labels:
            for k, x in enumerate(self.vector(lab)):
                total[k] += x
        return tuple(total)

    def ordered(self, labels: Iterable[str]) -> list[str]:
        return sorted(labels, key=self._index.__getitem__)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "rank": self.rank,
            "characters": [{"label": c.label, "coords": [str(x) for x in c.vector]} for c in self.u0],
            "delta": [str(x) for x in self.delta],
            "nongeneric_subsets": [self.ordered(s) for s in self.nongeneric_subsets],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "RepDatum":
        return cls(
            name=data["name"],
            rank=int(data["rank"]),
            u0=[Character(c["label"], root_vector(c["coords"])) for c in data["characters"]],
            delta=root_vector(data["delta"]),
            nongeneric_subsets=[frozenset(s) for s in data.get("nongeneric_subsets", [])],
        )

    @classmethod
    def load(cls, path: str | Path) -> "RepDatum":
        return cls.from_json(json.loads(Path(path).read_text()))


# ---------------------------------------------------------------------------
# domination and saturation


def dominates(v1: Sequence, v2: Sequence) -> bool:
    """v1 - v2 has no negative coordinate over the simple roots."""
    if len(v1) != len(v2):
        raise CuspError("rank mismatch")
    return all(Fraction(a) >= Fraction(b) for a, b in zip(v1, v2))


def set_dominates_chi(U: Iterable[str], chi: Character | str, rep: RepDatum) -> tuple[bool, dict[str, Fraction]]:
    """Whether a convex combination of the characters in U dominates chi, with the weights used.

    The empty set dominates nothing.
    """
    label = chi.label if isinstance(chi, Character) else chi
    target = rep.vector(label)
    members = tuple(rep.ordered(set(U)))
    key = (members, label)
    if key in rep._memo:
        return rep._memo[key]
    result = _dominates_search(members, target, rep)
    rep._memo[key] = result
    return result


def _dominates_search(members: tuple[str, ...], target: RootVector, rep: RepDatum) -> tuple[bool, dict[str, Fraction]]:
    if not members:
        return False, {}
    vecs = [rep.vector(m) for m in members]
    for m, v in zip(members, vecs):
        if dominates(v, target):
            return True, {m: Fraction(1)}
    # each coordinate needs some member at least as large
    for k in range(rep.rank):
        if max(v[k] for v in vecs) < target[k]:
            return False, {}
    # sum a = 1, sum a v_k >= target_k, a >= 0
    A_ub = [[-v[k] for v in vecs] for k in range(rep.rank)]
    b_ub = [-target[k] for k in range(rep.rank)]
    x = feasible_point(A_ub, b_ub, [[1] * len(vecs)], [1], n=len(vecs))
    if x is None:
        return False, {}
    return True, {m: a for m, a in zip(members, x) if a}


def saturate(U: Iterable[str], rep: RepDatum) -> frozenset[str]:
    """Smallest saturated set containing U."""
    current = set(U)
    for lab in current:
        rep.vector(lab)
    changed = True
    while changed:
        changed = False
        for lab in rep.labels:
            if lab not in current and set_dominates_chi(current, lab, rep)[0]:
                current.add(lab)
                changed = True
    return frozenset(current)


def enumerate_saturated(rep: RepDatum, budget_seconds: float | None = None) -> list[frozenset[str]]:
    """Every saturated subset, by Ganter's next-closure over the label order."""
    n = len(rep.u0)
    if n > SATURATION_GUARD:
        raise CuspError(f"{n} characters exceed the enumeration guard of {SATURATION_GUARD}")
    start = time.monotonic()
    labels = rep.labels
    closure_cache: dict[frozenset, frozenset] = {}

    def close(s: frozenset) -> frozenset:
        if s not in closure_cache:
            closure_cache[s] = saturate(s, rep)
        return closure_cache[s]

    def as_bits(s: frozenset) -> list[bool]:
        return [lab in s for lab in labels]

    found = []
    A = close(frozenset())
    while True:
        found.append(A)
        if budget_seconds is not None and time.monotonic() - start > budget_seconds:
            raise BudgetExceeded(f"saturated-set enumeration passed {budget_seconds} s")
        bits = as_bits(A)
        nxt = None
        for i in range(n - 1, -1, -1):
            if bits[i]:
                continue
            B = close(frozenset(lab for j, lab in enumerate(labels[:i]) if bits[j]) | {labels[i]})
            bbits = as_bits(B)
            if bbits[:i] == bits[:i]:
                nxt = B
                break
        if nxt is None:
            break
        A = nxt
    index = {lab: i for i, lab in enumerate(labels)}
    return sorted(set(found), key=lambda s: (len(s), sorted(index[x] for x in s)))


def admissible_saturated(rep: RepDatum, budget_seconds: float | None = None) -> list[frozenset[str]]:
    """Saturated sets containing none of the non-generic subsets."""
    return [
        U for U in enumerate_saturated(rep, budget_seconds)
        if not any(s <= U for s in rep.nongeneric_subsets)
    ]


# ---------------------------------------------------------------------------
# the two LP conditions


@dataclass
class LPCase:
    subject: list[str] | int  # a saturated set, or the index of a simple root
    feasible: bool
    witness: dict[str, Fraction]
    margin: Fraction

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "feasible": self.feasible,
            "witness": {k: str(v) for k, v in self.witness.items()},
            "margin": str(self.margin),
        }


@dataclass
class LPReport:
    condition: str  # "cond2" or "cond3"
    cases: list[LPCase]
    saturated_count: int | None = None

    @property
    def passed(self) -> bool:
        return all(c.feasible for c in self.cases)

    def to_json(self) -> dict:
        out = {"condition": self.condition, "passed": self.passed, "cases": [c.to_json() for c in self.cases]}
        if self.saturated_count is not None:
            out["saturated_count"] = self.saturated_count
        return out


def _condition2_target(rep: RepDatum, U: frozenset[str]) -> RootVector:
    outside = [lab for lab in rep.labels if lab not in U]
    s = rep.character_sum(outside)
    return tuple(d + x for d, x in zip(rep.delta, s))


def condition2_case(rep: RepDatum, U: frozenset[str]) -> LPCase:
    """Largest margin m <= 1 with pi + delta + sum(outside) <= -m and deg(pi) <= #U - m."""
    base = _condition2_target(rep, U)
    subject = rep.ordered(U)
    if not U:
        # only pi = 0 has degree below 0
        margin = min(Fraction(1), min(-x for x in base))
        return LPCase(subject, margin > 0, {}, margin)
    outside = [lab for lab in rep.labels if lab not in U]
    vecs = [rep.vector(lab) for lab in outside]
    nv = len(vecs)
    # variables: a_chi for chi outside U, then m
    A_ub = [[v[k] for v in vecs] + [1] for k in range(rep.rank)]
    b_ub = [-base[k] for k in range(rep.rank)]
    A_ub.append([1] * nv + [1])
    b_ub.append(len(U))
    A_ub.append([0] * nv + [1])
    b_ub.append(1)
    res = maximize([0] * nv + [1], A_ub, b_ub)
    if res.status != "optimal":
        return LPCase(subject, False, {}, Fraction(0))
    margin = res.x[-1]
    witness = {lab: a for lab, a in zip(outside, res.x[:-1]) if a}
    return LPCase(subject, margin > 0, witness, margin)


def check_condition2(rep: RepDatum, budget_seconds: float | None = None) -> LPReport:
    saturated = enumerate_saturated(rep, budget_seconds)
    cases = [
        condition2_case(rep, U) for U in saturated
        if not any(s <= U for s in rep.nongeneric_subsets)
    ]
    return LPReport("cond2", cases, saturated_count=len(saturated))


def condition3_case(rep: RepDatum, k: int) -> LPCase:
    """A nonpositive combination of characters dominating the k-th simple root."""
    alpha = [Fraction(int(i == k)) for i in range(rep.rank)]
    vecs = [c.vector for c in rep.u0]
    # a = -b with b >= 0: need -sum b v >= alpha
    A_ub = [[v[i] for v in vecs] for i in range(rep.rank)]
    b_ub = [-alpha[i] for i in range(rep.rank)]
    x = feasible_point(A_ub, b_ub, n=len(vecs))
    if x is None:
        return LPCase(k, False, {}, Fraction(0))
    witness = {c.label: -b for c, b in zip(rep.u0, x) if b}
    margin = min(_combine(rep, witness)[i] - alpha[i] for i in range(rep.rank))
    return LPCase(k, True, witness, margin)


def check_condition3(rep: RepDatum) -> LPReport:
    return LPReport("cond3", [condition3_case(rep, k) for k in range(rep.rank)])


# ---------------------------------------------------------------------------
# direct witness checks


def _combine(rep: RepDatum, coeffs: Mapping[str, Fraction]) -> RootVector:
    total = [Fraction(0)] * rep.rank
    for lab, a in coeffs.items():
        for k, x in enumerate(rep.vector(lab)):
            total[k] += Fraction(a) * x
    return tuple(total)


def verify_witness(rep: RepDatum, U: Iterable[str], coeffs: Mapping[str, int | Fraction]) -> bool:
    """Substitute a proposed pi_U into the cusp inequalities for the saturated set U."""
    U = frozenset(U)
    coeffs = {lab: Fraction(a) for lab, a in coeffs.items()}
    for lab in coeffs:
        rep.vector(lab)
        if lab in U:
            raise CuspError(f"witness uses {lab}, which lies in U")
    if any(a < 0 for a in coeffs.values()):
        return False
    nonzero = {lab: a for lab, a in coeffs.items() if a}
    if nonzero and sum(nonzero.values()) >= len(U):
        return False
    if not nonzero and not U:
        pass  # deg 0 is minus infinity
    pi = _combine(rep, nonzero)
    total = tuple(p + b for p, b in zip(pi, _condition2_target(rep, U)))
    return all(x < 0 for x in total)


def verify_root_witness(rep: RepDatum, k: int, coeffs: Mapping[str, int | Fraction]) -> bool:
    """Check that a nonpositive combination of characters dominates the k-th simple root."""
    coeffs = {lab: Fraction(a) for lab, a in coeffs.items()}
    if any(a > 0 for a in coeffs.values()):
        return False
    alpha = [Fraction(int(i == k)) for i in range(rep.rank)]
    return dominates(_combine(rep, coeffs), alpha)


# ---------------------------------------------------------------------------
# built-in data


def _binary_quartic() -> RepDatum:
    chars = [("x^4", -2), ("x^3y", -1), ("x^2y^2", 0), ("xy^3", 1), ("y^4", 2)]
    return RepDatum(
        "binary-quartic",
        1,
        [Character(lab, root_vector([c])) for lab, c in chars],
        root_vector([-1]),
        [frozenset({"x^4"})],
    )


def _ternary_cubic() -> RepDatum:
    chars = [
        ("x^3", (-2, -1)), ("x^2y", (-1, -1)), ("x^2z", (-1, 0)), ("xy^2", (0, -1)), ("xyz", (0, 0)),
        ("xz^2", (0, 1)), ("y^3", (1, -1)), ("y^2z", (1, 0)), ("yz^2", (1, 1)), ("z^3", (1, 2)),
    ]
    return RepDatum(
        "ternary-cubic",
        2,
        [Character(lab, root_vector(c)) for lab, c in chars],
        root_vector([-2, -2]),
        [frozenset({"x^3", "x^2y", "x^2z"}), frozenset({"x^3", "x^2y", "xy^2"})],
    )


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a square nonsingular system exactly."""
    n = len(matrix)
    aug = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def b_label(i: int, j: int) -> str:
    i, j = min(i, j), max(i, j)
    return f"b{i},{j}"


def _so_even(n: int) -> RepDatum:
    size = 2 * n + 2
    rank = n + 1

    def t_exponent(i: int) -> list[Fraction]:
        """Exponent vector in t_1..t_{n+1} of the i-th diagonal torus entry (1-based)."""
        e = [Fraction(0)] * rank
        if i <= n + 1:
            e[i - 1] = Fraction(-1)
        else:
            e[size + 1 - i - 1] = Fraction(1)
        return e

    # simple roots as t-exponent vectors, stored as matrix columns
    roots = []
    for i in range(1, n + 1):
        v = [Fraction(0)] * rank
        v[i - 1], v[i] = Fraction(1), Fraction(-1)
        roots.append(v)
    v = [Fraction(0)] * rank
    v[n - 1] += 1
    v[n] += 1
    roots.append(v)
    basis = [[roots[c][r] for c in range(rank)] for r in range(rank)]

    chars = []
    for i in range(1, size + 1):
        for j in range(i, size + 1):
            e = [a + b for a, b in zip(t_exponent(i), t_exponent(j))]
            chars.append(Character(b_label(i, j), tuple(_solve(basis, e))))
    by_label = {c.label: c.vector for c in chars}

    def alpha(*terms: tuple[int, int]) -> RootVector:
        out = [Fraction(0)] * rank
        for k, coef in terms:
            out[k - 1] += coef
        return tuple(out)

    for i in range(1, n + 1):
        assert by_label[b_label(i, size - i)] == alpha((i, -1))
    assert by_label[b_label(n + 1, n + 1)] == alpha((n, 1), (n + 1, -1))
    assert by_label[b_label(1, 1)] == alpha(*[(k, -2) for k in range(1, n)], (n, -1), (n + 1, -1))

    delta = [Fraction(j * (j - 2 * n - 1)) for j in range(1, n)]
    delta += [Fraction(-n * (n + 1), 2)] * 2
    return RepDatum(f"so-even-{n}", rank, chars, tuple(delta), _so_even_nongeneric(n))


def _so_even_nongeneric(n: int) -> list[frozenset[str]]:
    """Inclusion-minimal coordinate sets whose vanishing makes a symmetric matrix non-generic."""
    size = 2 * n + 2
    idx = range(1, size + 1)
    labels = [b_label(i, j) for i in idx for j in idx if i <= j]
    bit = {lab: 1 << k for k, lab in enumerate(labels)}

    def mask(labs: Iterable[str]) -> int:
        out = 0
        for lab in labs:
            out |= bit[lab]
        return out

    masks = set()
    for k in range(1, size):
        for I in itertools.combinations(idx, k):
            for J in itertools.combinations(idx, size - k):
                masks.add(mask(b_label(i, j) for i in I for j in J))
    low = {b_label(i, j) for i in range(1, n) for j in range(i, size + 1) if i + j < size}
    masks.add(mask(low | {b_label(n, n), b_label(n, n + 1)}))
    masks.add(mask(low | {b_label(n, n), b_label(n, n + 2)}))
    # sets of equal size never contain one another, so sweep by size and drop supersets
    arr = np.array(sorted(masks, key=lambda m: (m.bit_count(), m)), dtype=np.uint64)
    sizes = np.array([int(m).bit_count() for m in arr])
    alive = np.ones(len(arr), dtype=bool)
    minimal: list[int] = []
    for size_now in np.unique(sizes):
        level = np.flatnonzero((sizes == size_now) & alive)
        later = np.flatnonzero(sizes > size_now)
        for i in level:
            m = arr[i]
            minimal.append(int(m))
            hit = later[(arr[later] & m) == m]
            alive[hit] = False
    return [frozenset(lab for lab in labels if m & bit[lab]) for m in minimal]


def builtin_rep(name: str, n: int | None = None) -> RepDatum:
    if name == "binary-quartic":
        return _binary_quartic()
    if name == "ternary-cubic":
        return _ternary_cubic()
    if name == "so-even":
        if n is None or not 1 <= n <= 4:
            raise CuspError("so-even needs 1 <= n <= 4")
        return _so_even(n)
    raise CuspError(f"unknown representation {name!r}")


# ---------------------------------------------------------------------------
# the hand-built witnesses for the even orthogonal family


def so_even_root_bounds(rep: RepDatum, n: int, U: frozenset[str]) -> dict[int, dict[str, Fraction]] | None:
    """For k = 1..n+1, a nonnegative combination pi_k of characters outside U with pi_k <= -alpha_k.

    Rows k < n use a minimal character of row k outside U; rows n and n+1 use
    the fixed choices keyed by which row-n coordinates U contains. None if U's
    row n is not one of the covered shapes.
    """
    size = 2 * n + 2
    out: dict[int, dict[str, Fraction]] = {}
    for k in range(1, n):
        row = [b_label(k, j) for j in range(k, size + 1) if b_label(k, j) not in U]
        if not row:
            return None
        minimal = [a for a in row if not any(b != a and dominates(rep.vector(a), rep.vector(b)) for b in row)]
        out[k] = {minimal[0]: Fraction(1)}
    row_n = {lab for lab in U if lab.startswith(f"b{n},")}
    nn, n1, n2 = b_label(n, n), b_label(n, n + 1), b_label(n, n + 2)
    if row_n <= {nn}:
        out[n], out[n + 1] = {n2: Fraction(1)}, {n1: Fraction(1)}
    elif row_n == {nn, n1}:
        out[n], out[n + 1] = {n2: Fraction(1)}, {b_label(n + 1, n + 1): Fraction(1), n2: Fraction(1)}
    elif row_n == {nn, n2}:
        out[n], out[n + 1] = {n1: Fraction(1), b_label(n + 2, n + 2): Fraction(1)}, {n1: Fraction(1)}
    else:
        return None
    return out


def so_even_witness(rep: RepDatum, n: int, U: frozenset[str], epsilon: Fraction) -> dict[str, Fraction] | None:
    """pi_U = sum_k (epsilon + max(0, e_k + delta_k)) pi_k, with e the sum of characters outside U."""
    bounds = so_even_root_bounds(rep, n, U)
    if bounds is None:
        return None
    outside = rep.character_sum(lab for lab in rep.labels if lab not in U)
    coeffs: dict[str, Fraction] = {}
    for k, pi_k in bounds.items():
        weight = epsilon + max(Fraction(0), outside[k - 1] + rep.delta[k - 1])
        for lab, a in pi_k.items():
            coeffs[lab] = coeffs.get(lab, Fraction(0)) + weight * a
    return coeffs

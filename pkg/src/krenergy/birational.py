"""The rational (non-tropical) side: kappa, the birational R-action, and
the product formula for rational energy.

Points assign an exact positive rational to every variable ``x_i^{(r)}``;
positivity keeps all the denominators below nonzero, so the action

    s_j(x_j^{(r)})   = x_{j+1}^{(r+1)} kappa_{r+1} / kappa_r
    s_j(x_{j+1}^{(r)}) = x_j^{(r-1)}   kappa_{r-1} / kappa_r

is everywhere defined and lands on positive points again.  Composite
actions like ``s_i s_{i+1} ... s_{j-2}`` are applied to the point left to
right (s_i first), matching the combinatorial convention on tensors.

Evaluation helpers (eval_loop_e, eval_loop_h, eval_tau, eval_sigma) compute
the symmetric-function families directly at a point by dynamic programming;
they are cross-checked against the symbolic expansions in the test suite.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence
from fractions import Fraction


class RationalPoint:
    """Strictly positive rational values for the variables ``x_i^{(r)}``."""

    __slots__ = ("m", "n", "values")

    def __init__(self, m: int, n: int, values: Iterable[Iterable[Fraction]]):
        values = tuple(tuple(Fraction(v) for v in row) for row in values)
        if len(values) != m or any(len(row) != n for row in values):
            raise ValueError(f"expected a {m} x {n} array of values")
        for row in values:
            for v in row:
                if v <= 0:
                    raise ValueError(f"point values must be strictly positive, got {v}")
        self.m = m
        self.n = n
        self.values = values

    def value(self, i: int, r: int) -> Fraction:
        """Value of ``x_i^{(r)}``; the color is reduced mod n."""
        if not 1 <= i <= self.m:
            raise KeyError(f"variable row {i} out of range 1..{self.m}")
        return self.values[i - 1][r % self.n]

    @classmethod
    def all_ones(cls, m: int, n: int) -> RationalPoint:
        return cls(m, n, [[Fraction(1)] * n for _ in range(m)])

    def with_columns(self, replacements: dict[int, Sequence[Fraction]]) -> RationalPoint:
        rows = list(self.values)
        for i, row in replacements.items():
            rows[i - 1] = tuple(row)
        return RationalPoint(self.m, self.n, rows)

    def to_jsonable(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "values": [
                [str(v.numerator), str(v.denominator)] for row in self.values for v in row
            ],
        }

    @classmethod
    def from_jsonable(cls, data: dict) -> RationalPoint:
        m, n = int(data["m"]), int(data["n"])
        flat = [Fraction(int(num), int(den)) for num, den in data["values"]]
        if len(flat) != m * n:
            raise ValueError(f"expected {m * n} values, got {len(flat)}")
        rows = [flat[i * n : (i + 1) * n] for i in range(m)]
        return cls(m, n, rows)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RationalPoint)
            and (self.m, self.n, self.values) == (other.m, other.n, other.values)
        )

    def __hash__(self) -> int:
        return hash(("RationalPoint", self.m, self.n, self.values))

    def __repr__(self) -> str:
        return f"RationalPoint(m={self.m}, n={self.n}, values={self.values!r})"


def random_point(m: int, n: int, rng: random.Random, bound: int = 1000) -> RationalPoint:
    """A random positive point with numerators and denominators in 1..bound."""
    return RationalPoint(
        m,
        n,
        [
            [Fraction(rng.randint(1, bound), rng.randint(1, bound)) for _ in range(n)]
            for _ in range(m)
        ],
    )


def kappa(r: int, j: int, p: RationalPoint) -> Fraction:
    """kappa_r on columns (j, j+1): the n-term sum of mixed color products."""
    if not 1 <= j <= p.m - 1:
        raise ValueError(f"column index {j} out of range 1..{p.m - 1}")
    n = p.n
    total = Fraction(0)
    for s in range(n):
        term = Fraction(1)
        for t in range(1, s + 1):
            term *= p.value(j + 1, r + t)
        for t in range(s + 1, n):
            term *= p.value(j, r + t)
        total += term
    return total


def s_action(j: int, p: RationalPoint) -> RationalPoint:
    """The birational R-matrix on columns (j, j+1); identity elsewhere."""
    if not 1 <= j <= p.m - 1:
        raise ValueError(f"column index {j} out of range 1..{p.m - 1}")
    n = p.n
    ks = [kappa(r, j, p) for r in range(n)]
    new_j = [p.value(j + 1, r + 1) * ks[(r + 1) % n] / ks[r] for r in range(n)]
    new_j1 = [p.value(j, r - 1) * ks[(r - 1) % n] / ks[r] for r in range(n)]
    return p.with_columns({j: new_j, j + 1: new_j1})


def apply_chain(p: RationalPoint, js: Iterable[int]) -> RationalPoint:
    """Apply ``s_j`` for each j in order (leftmost first)."""
    for j in js:
        p = s_action(j, p)
    return p


def rational_energy_global(p: RationalPoint) -> Fraction:
    """Rational intrinsic energy as the product over pairs i < j of
    kappa_{j-1} on columns (j-1, j) of ``s_i ... s_{j-2}`` applied to the
    point.  The empty product gives 1 for m = 1."""
    m = p.m
    total = Fraction(1)
    for i in range(1, m):
        cur = p
        for j in range(i + 1, m + 1):
            total *= kappa(j - 1, j - 1, cur)
            if j < m:
                cur = s_action(j - 1, cur)
    return total


def eval_loop_e(k: int, r: int, indices: Sequence[int], p: RationalPoint) -> Fraction:
    """e_k^{(r)} on the given variable indices, evaluated at ``p``."""
    idx = tuple(indices)
    if k < 0 or k > len(idx):
        return Fraction(0)
    n = p.n
    memo: dict[tuple[int, int, int], Fraction] = {}

    def rec(pos: int, need: int, color: int) -> Fraction:
        if need == 0:
            return Fraction(1)
        if len(idx) - pos < need:
            return Fraction(0)
        key = (pos, need, color)
        if key in memo:
            return memo[key]
        skip = rec(pos + 1, need, color)
        take = p.value(idx[pos], color) * rec(pos + 1, need - 1, (color + 1) % n)
        memo[key] = skip + take
        return memo[key]

    return rec(0, k, r % n)


def eval_loop_h(k: int, r: int, indices: Sequence[int], p: RationalPoint) -> Fraction:
    """h_k^{(r)} on the given variable indices, evaluated at ``p``."""
    idx = tuple(indices)
    if k < 0:
        return Fraction(0)
    if k == 0:
        return Fraction(1)
    n = p.n
    memo: dict[tuple[int, int, int], Fraction] = {}

    def rec(pos: int, need: int, color: int) -> Fraction:
        # weakly increasing choices starting at position >= pos
        if need == 0:
            return Fraction(1)
        if pos == len(idx):
            return Fraction(0)
        key = (pos, need, color)
        if key in memo:
            return memo[key]
        skip = rec(pos + 1, need, color)
        take = p.value(idx[pos], color) * rec(pos, need - 1, (color - 1) % n)
        memo[key] = skip + take
        return memo[key]

    return rec(0, k, r % n)


def eval_tau(k: int, r: int, indices: Sequence[int], p: RationalPoint) -> Fraction:
    """tau_k^{(r)} (multiplicities at most n - 1) evaluated at ``p``."""
    idx = tuple(indices)
    n = p.n
    if k < 0 or k > (n - 1) * len(idx):
        return Fraction(0)
    if k == 0:
        return Fraction(1)
    memo: dict[tuple[int, int, int], Fraction] = {}

    def rec(pos: int, need: int, color: int) -> Fraction:
        if need == 0:
            return Fraction(1)
        if pos == len(idx):
            return Fraction(0)
        key = (pos, need, color)
        if key in memo:
            return memo[key]
        total = Fraction(0)
        prod = Fraction(1)
        for cnt in range(min(n - 1, need) + 1):
            if cnt:
                prod *= p.value(idx[pos], color - cnt + 1)
            total += prod * rec(pos + 1, need - cnt, (color - cnt) % n)
        memo[key] = total
        return total

    return rec(0, k, r % n)


def eval_sigma(k: int, r: int, indices: Sequence[int], p: RationalPoint) -> Fraction:
    """sigma_k^{(r)} evaluated at ``p``; the first index carries the prefix."""
    idx = tuple(indices)
    if not idx:
        raise ValueError("sigma needs a nonempty variable range")
    if k < 0:
        return Fraction(0)
    first, rest = idx[0], idx[1:]
    total = Fraction(0)
    prefix = Fraction(1)
    for i in range(k + 1):
        total += prefix * eval_tau(k - i, r - i, rest, p)
        prefix *= p.value(first, r - i)
    return total


def rational_energy_product(p: RationalPoint) -> Fraction:
    """Rational intrinsic energy by the sigma product formula:
    the product over i of sigma_{(n-1)(m-i)}^{(i-1)} on variables i..m."""
    m, n = p.m, p.n
    total = Fraction(1)
    for i in range(1, m):
        total *= eval_sigma((n - 1) * (m - i), i - 1, range(i, m + 1), p)
    return total


def fraction_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by Gaussian elimination with column pivot search."""
    size = len(rows)
    mat = [[Fraction(v) for v in row] for row in rows]
    if any(len(row) != size for row in mat):
        raise ValueError("determinant of a non-square matrix")
    det = Fraction(1)
    for c in range(size):
        piv = next((k for k in range(c, size) if mat[k][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            mat[c], mat[piv] = mat[piv], mat[c]
            det = -det
        det *= mat[c][c]
        inv = 1 / mat[c][c]
        for k in range(c + 1, size):
            if mat[k][c] == 0:
                continue
            factor = mat[k][c] * inv
            for col in range(c, size):
                mat[k][col] -= factor * mat[c][col]
    return det


class TactCheck:
    """Outcome of the three displayed identities relating kappa, the chain
    action, and sigma ratios for a pair 1 <= i < j <= m."""

    __slots__ = ("i", "j", "r", "kappa_ratio", "chain_first_form", "chain_second_form")

    def __init__(self, i: int, j: int, r: int, a: bool, b: bool, c: bool):
        self.i = i
        self.j = j
        self.r = r
        self.kappa_ratio = a
        self.chain_first_form = b
        self.chain_second_form = c

    @property
    def passed(self) -> bool:
        return self.kappa_ratio and self.chain_first_form and self.chain_second_form

    def __repr__(self) -> str:
        return (
            f"TactCheck(i={self.i}, j={self.j}, r={self.r}, "
            f"kappa_ratio={self.kappa_ratio}, chain_first_form={self.chain_first_form}, "
            f"chain_second_form={self.chain_second_form})"
        )


def check_lem_tact(i: int, j: int, r: int, p: RationalPoint) -> TactCheck:
    """Exactly evaluate both sides of the three transported-kappa identities.

    (1) kappa_r on columns (j-1, j) after the chain s_i ... s_{j-2} equals
        sigma_{(n-1)(j-i)}^{(r-j+i)}(x_i..x_j) / sigma_{(n-1)(j-i-1)}^{(r-j+i)}(x_i..x_{j-1});
    (2) the chain s_i ... s_{j-1} applied to x_j^{(r)} equals
        x_i^{(r-j+i)} sigma^{(r-j+i-1)} / sigma^{(r-j+i)} of degree (n-1)(j-i);
    (3) the same value equals the degree-((n-1)(j-i)+1 over (n-1)(j-i))
        sigma ratio with color r-j+i.
    """
    if not 1 <= i < j <= p.m:
        raise ValueError(f"need 1 <= i < j <= m, got i={i}, j={j}, m={p.m}")
    n = p.n
    d = j - i
    span = tuple(range(i, j + 1))
    span_short = tuple(range(i, j))

    q = apply_chain(p, range(i, j - 1))
    lhs1 = kappa(r, j - 1, q)
    rhs1 = eval_sigma((n - 1) * d, r - j + i, span, p) / eval_sigma(
        (n - 1) * (d - 1), r - j + i, span_short, p
    )

    q2 = apply_chain(q, [j - 1])
    lhs2 = q2.value(j, r)
    denom = eval_sigma((n - 1) * d, r - j + i, span, p)
    rhs2 = p.value(i, r - j + i) * eval_sigma((n - 1) * d, r - j + i - 1, span, p) / denom
    rhs3 = eval_sigma((n - 1) * d + 1, r - j + i, span, p) / denom

    return TactCheck(i, j, r, lhs1 == rhs1, lhs2 == rhs2, lhs2 == rhs3)

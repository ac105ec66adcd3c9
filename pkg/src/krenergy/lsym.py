"""Loop symmetric functions over colored variables, with exact arithmetic.

Polynomials live in variables ``x_i^{(r)}`` with ``i`` in ``1..m`` and the
color ``r`` in ``Z/nZ`` (stored 0-based).  Coefficients are arbitrary
precision integers.  A monomial is a sorted tuple of ``((i, r), exponent)``
pairs with positive exponents, so equality of polynomials is plain equality
of term maps.

The generating families:

    loop_e(k, r):  sum over i1 < ... < ik of x_{i1}^(r) x_{i2}^(r+1) ...
    loop_h(k, r):  sum over i1 <= ... <= ik of x_{i1}^(r) x_{i2}^(r-1) ...
    tau(k, r):     like loop_h but no index may repeat more than n-1 times
    sigma(k, r):   sum_i (prefix of the first variable, colors r, r-1, ...)
                   times tau(k-i, r-i) of the remaining variables

``loop_schur_tableaux`` sums the color-shifted content weights of the
semistandard tableaux of a skew shape; ``loop_schur_jt`` computes the same
polynomial as a determinant of loop elementary functions.  ``build_A`` and
``build_B`` assemble the banded dilated-staircase matrices used by the
closing identities, and ``trop_eval`` is the (min, +) shadow of a
subtraction-free polynomial.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Iterator, Sequence
from fractions import Fraction

try:
    import numpy as _np
except ImportError:  # pragma: no cover - numpy is a declared dependency
    _np = None

from .tableaux import Shape, SkewShape, enumerate_ssyt, staircase

Mono = tuple[tuple[tuple[int, int], int], ...]

_NUMPY_VALUE_BOUND = 1 << 40
_NUMPY_MIN_TERMS = 64


def _mono_from_dict(d: dict[tuple[int, int], int]) -> Mono:
    return tuple(sorted((k, e) for k, e in d.items() if e))


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for k, e in b:
        d[k] = d.get(k, 0) + e
    return tuple(sorted(d.items()))


def _mono_degree(mono: Mono) -> int:
    return sum(e for _, e in mono)


class ColoredPoly:
    """Sparse integer polynomial in the colored variables of an m x n array."""

    __slots__ = ("m", "n", "terms", "_trop_matrix")

    def __init__(self, m: int, n: int, terms: dict[Mono, int] | None = None):
        if m < 1 or n < 2:
            raise ValueError(f"ambient sizes must satisfy m >= 1, n >= 2, got ({m}, {n})")
        clean: dict[Mono, int] = {}
        for mono, coef in (terms or {}).items():
            if not coef:
                continue
            for (i, r), e in mono:
                if not (1 <= i <= m and 0 <= r < n and e > 0):
                    raise ValueError(f"bad variable ({i}, {r})^{e} for ambient ({m}, {n})")
            clean[mono] = int(coef)
        self.m = m
        self.n = n
        self.terms = clean
        self._trop_matrix = None

    @classmethod
    def _raw(cls, m: int, n: int, terms: dict[Mono, int]) -> ColoredPoly:
        self = object.__new__(cls)
        self.m = m
        self.n = n
        self.terms = terms
        self._trop_matrix = None
        return self

    @classmethod
    def zero(cls, m: int, n: int) -> ColoredPoly:
        return cls._raw(m, n, {})

    @classmethod
    def one(cls, m: int, n: int) -> ColoredPoly:
        return cls._raw(m, n, {(): 1})

    @classmethod
    def const(cls, m: int, n: int, value: int) -> ColoredPoly:
        return cls._raw(m, n, {(): int(value)} if value else {})

    @classmethod
    def variable(cls, i: int, r: int, *, m: int, n: int) -> ColoredPoly:
        return cls(m, n, {(((i, r % n), 1),): 1})

    def _check_same(self, other: ColoredPoly) -> None:
        if self.m != other.m or self.n != other.n:
            raise ValueError(
                f"ambient mismatch: ({self.m}, {self.n}) vs ({other.m}, {other.n})"
            )

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(_mono_degree(mono) for mono in self.terms)

    def is_homogeneous(self, k: int) -> bool:
        return all(_mono_degree(mono) == k for mono in self.terms)

    def sorted_terms(self) -> list[tuple[Mono, int]]:
        return sorted(self.terms.items())

    def __add__(self, other: ColoredPoly | int) -> ColoredPoly:
        if isinstance(other, int):
            other = ColoredPoly.const(self.m, self.n, other)
        self._check_same(other)
        terms = dict(self.terms)
        for mono, coef in other.terms.items():
            c = terms.get(mono, 0) + coef
            if c:
                terms[mono] = c
            else:
                terms.pop(mono, None)
        return ColoredPoly._raw(self.m, self.n, terms)

    __radd__ = __add__

    def __neg__(self) -> ColoredPoly:
        return ColoredPoly._raw(self.m, self.n, {mono: -c for mono, c in self.terms.items()})

    def __sub__(self, other: ColoredPoly | int) -> ColoredPoly:
        if isinstance(other, int):
            other = ColoredPoly.const(self.m, self.n, other)
        return self + (-other)

    def __mul__(self, other: ColoredPoly | int) -> ColoredPoly:
        if isinstance(other, int):
            if other == 0:
                return ColoredPoly.zero(self.m, self.n)
            return ColoredPoly._raw(
                self.m, self.n, {mono: c * other for mono, c in self.terms.items()}
            )
        self._check_same(other)
        if not self.terms or not other.terms:
            return ColoredPoly.zero(self.m, self.n)
        small, large = (self.terms, other.terms)
        if len(small) > len(large):
            small, large = large, small
        out: dict[Mono, int] = {}
        for mono_a, ca in small.items():
            for mono_b, cb in large.items():
                mono = _mono_mul(mono_a, mono_b)
                c = out.get(mono, 0) + ca * cb
                if c:
                    out[mono] = c
                else:
                    out.pop(mono, None)
        return ColoredPoly._raw(self.m, self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> ColoredPoly:
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = ColoredPoly.one(self.m, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ColoredPoly)
            and (self.m, self.n) == (other.m, other.n)
            and self.terms == other.terms
        )

    def eval_rational(self, value) -> Fraction:
        """Evaluate at a point; ``value(i, r)`` must return an exact number."""
        total = Fraction(0)
        for mono, coef in self.terms.items():
            prod = Fraction(coef)
            for (i, r), e in mono:
                prod *= Fraction(value(i, r)) ** e
            total += prod
        return total

    def to_jsonable(self) -> dict:
        terms = []
        for mono, coef in self.sorted_terms():
            terms.append(
                {"coef": str(coef), "exps": [[i, r, e] for (i, r), e in mono]}
            )
        return {"m": self.m, "n": self.n, "terms": terms}

    @classmethod
    def from_jsonable(cls, data: dict) -> ColoredPoly:
        m, n = int(data["m"]), int(data["n"])
        terms: dict[Mono, int] = {}
        for item in data["terms"]:
            mono = _mono_from_dict({(int(i), int(r)): int(e) for i, r, e in item["exps"]})
            terms[mono] = terms.get(mono, 0) + int(item["coef"])
        return cls(m, n, terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coef in self.sorted_terms():
            factors = [f"x{i}^({r})" + (f"^{e}" if e > 1 else "") for (i, r), e in mono]
            body = "*".join(factors) if factors else "1"
            parts.append(f"{coef}*{body}" if body != "1" else str(coef))
        return " + ".join(parts)


def _normalize_indices(indices: Sequence[int] | None, m: int) -> tuple[int, ...]:
    if indices is None:
        return tuple(range(1, m + 1))
    out = tuple(int(i) for i in indices)
    if any(not 1 <= i <= m for i in out):
        raise ValueError(f"indices {out} out of range 1..{m}")
    if any(a >= b for a, b in zip(out, out[1:])):
        raise ValueError(f"indices must be strictly increasing: {out}")
    return out


def loop_e(k: int, r: int, *, n: int, m: int, indices: Sequence[int] | None = None) -> ColoredPoly:
    """Loop elementary symmetric function e_k^{(r)} on the given variables."""
    idx = _normalize_indices(indices, m)
    if k < 0 or k > len(idx):
        return ColoredPoly.zero(m, n)
    if k == 0:
        return ColoredPoly.one(m, n)
    terms: dict[Mono, int] = {}
    for combo in itertools.combinations(idx, k):
        mono = tuple(((i, (r + t) % n), 1) for t, i in enumerate(combo))
        terms[mono] = terms.get(mono, 0) + 1
    return ColoredPoly._raw(m, n, terms)


def loop_h(k: int, r: int, *, n: int, m: int, indices: Sequence[int] | None = None) -> ColoredPoly:
    """Loop complete homogeneous symmetric function h_k^{(r)}."""
    idx = _normalize_indices(indices, m)
    if k < 0:
        return ColoredPoly.zero(m, n)
    if k == 0:
        return ColoredPoly.one(m, n)
    if not idx:
        return ColoredPoly.zero(m, n)
    terms: dict[Mono, int] = {}
    for combo in itertools.combinations_with_replacement(idx, k):
        d: dict[tuple[int, int], int] = {}
        for t, i in enumerate(combo):
            key = (i, (r - t) % n)
            d[key] = d.get(key, 0) + 1
        mono = _mono_from_dict(d)
        terms[mono] = terms.get(mono, 0) + 1
    return ColoredPoly._raw(m, n, terms)


def _bounded_multisets(idx: tuple[int, ...], k: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Weakly increasing k-tuples from idx, no value repeated more than cap times."""

    def rec(pos: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if pos == len(idx):
            return
        most = min(cap, remaining)
        for cnt in range(most + 1):
            head = (idx[pos],) * cnt
            for rest in rec(pos + 1, remaining - cnt):
                yield head + rest

    yield from rec(0, k)


def tau(k: int, r: int, *, n: int, m: int, indices: Sequence[int] | None = None) -> ColoredPoly:
    """The tau family: loop_h restricted to multiplicities at most n - 1."""
    idx = _normalize_indices(indices, m)
    if k < 0 or k > (n - 1) * len(idx):
        return ColoredPoly.zero(m, n)
    if k == 0:
        return ColoredPoly.one(m, n)
    terms: dict[Mono, int] = {}
    for combo in _bounded_multisets(idx, k, n - 1):
        d: dict[tuple[int, int], int] = {}
        for t, i in enumerate(combo):
            key = (i, (r - t) % n)
            d[key] = d.get(key, 0) + 1
        mono = _mono_from_dict(d)
        terms[mono] = terms.get(mono, 0) + 1
    return ColoredPoly._raw(m, n, terms)


def sigma(k: int, r: int, *, n: int, m: int, indices: Sequence[int] | None = None) -> ColoredPoly:
    """sigma_k^{(r)}: prefix powers of the first variable times tau of the rest."""
    idx = _normalize_indices(indices, m)
    if not idx:
        raise ValueError("sigma needs a nonempty variable range")
    if k < 0:
        return ColoredPoly.zero(m, n)
    first, rest = idx[0], idx[1:]
    total = ColoredPoly.zero(m, n)
    prefix = ColoredPoly.one(m, n)
    for i in range(k + 1):
        total = total + prefix * tau(k - i, r - i, n=n, m=m, indices=rest)
        prefix = prefix * ColoredPoly.variable(first, (r - i) % n, m=m, n=n)
    return total


def loop_schur_tableaux(
    shape: SkewShape | Shape | Iterable[int],
    r: int,
    max_entry: int,
    *,
    n: int,
    guard: int | None = None,
) -> ColoredPoly:
    """Loop (skew) Schur function as a sum over semistandard tableaux.

    Each tableau contributes the monomial with one factor
    ``x_{T(i,j)}^{(i - j + r)}`` per cell; the ambient variable count is
    ``max_entry``.
    """
    m = max_entry
    terms: dict[Mono, int] = {}
    for t in enumerate_ssyt(shape, max_entry, guard=guard):
        d: dict[tuple[int, int], int] = {}
        for (i, j) in t.shape.cells():
            key = (t.entry(i, j), (i - j + r) % n)
            d[key] = d.get(key, 0) + 1
        mono = _mono_from_dict(d)
        terms[mono] = terms.get(mono, 0) + 1
    return ColoredPoly._raw(m, n, terms)


def loop_schur_jt(
    shape: SkewShape | Shape | Iterable[int],
    r: int,
    *,
    n: int,
    m: int,
) -> ColoredPoly:
    """Loop Schur function of ``shape`` by the Jacobi-Trudi determinant.

    With ``lam``/``mu`` the conjugates of the outer/inner shape, the matrix
    entry at (i, j) is ``e_{lam_i - mu_j - i + j}`` with color
    ``r - j + 1 + mu_j``; the top-left entries of the dilated staircase
    matrix below pin this convention.
    """
    skew = SkewShape.of(shape)
    lam = skew.outer.conjugate()
    mu = skew.inner.conjugate()
    size = len(lam)
    if size == 0:
        return ColoredPoly.one(m, n)
    entries = [
        [
            loop_e(lam.part(i) - mu.part(j) - i + j, r - j + 1 + mu.part(j), n=n, m=m)
            for j in range(1, size + 1)
        ]
        for i in range(1, size + 1)
    ]
    return PolyMatrix(m, n, entries).det()


class PolyMatrix:
    """A rectangular matrix of colored polynomials over one ambient (m, n)."""

    __slots__ = ("m", "n", "entries")

    def __init__(self, m: int, n: int, entries: Sequence[Sequence[ColoredPoly]]):
        entries = [list(row) for row in entries]
        width = len(entries[0]) if entries else 0
        for row in entries:
            if len(row) != width:
                raise ValueError("ragged matrix")
            for p in row:
                if (p.m, p.n) != (m, n):
                    raise ValueError("matrix entry with mismatched ambient")
        self.m = m
        self.n = n
        self.entries = entries

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def entry(self, k: int, j: int) -> ColoredPoly:
        """Entry at row k, column j (1-based)."""
        return self.entries[k - 1][j - 1]

    def drop_column(self, j: int) -> PolyMatrix:
        return PolyMatrix(
            self.m, self.n, [row[: j - 1] + row[j:] for row in self.entries]
        )

    def matvec(self, vec: Sequence[ColoredPoly]) -> list[ColoredPoly]:
        if len(vec) != self.ncols:
            raise ValueError(f"vector length {len(vec)} != {self.ncols} columns")
        out = []
        for row in self.entries:
            acc = ColoredPoly.zero(self.m, self.n)
            for p, v in zip(row, vec):
                if not p.is_zero and not v.is_zero:
                    acc = acc + p * v
            out.append(acc)
        return out

    def det(self) -> ColoredPoly:
        """Division-free determinant by memoized Laplace expansion along rows.

        Blank-heavy banded matrices (the only large ones here) share minors
        aggressively; a column that no remaining row can reach prunes to 0.
        """
        size = self.nrows
        if size != self.ncols:
            raise ValueError(f"determinant of a {self.nrows} x {self.ncols} matrix")
        if size == 0:
            return ColoredPoly.one(self.m, self.n)
        rows = self.entries
        nonzero = [frozenset(j for j in range(size) if not rows[k][j].is_zero) for k in range(size)]
        reach = [size] * (size + 1)
        for k in range(size - 1, -1, -1):
            reach[k] = min(reach[k + 1], min(nonzero[k], default=size))
        zero = ColoredPoly.zero(self.m, self.n)
        one = ColoredPoly.one(self.m, self.n)
        memo: dict[tuple[int, tuple[int, ...]], ColoredPoly] = {}

        def minor(k: int, cols: tuple[int, ...]) -> ColoredPoly:
            if k == size:
                return one
            if cols[0] < reach[k]:
                return zero
            key = (k, cols)
            cached = memo.get(key)
            if cached is not None:
                return cached
            acc = zero
            for idx, j in enumerate(cols):
                if j not in nonzero[k]:
                    continue
                sub = minor(k + 1, cols[:idx] + cols[idx + 1 :])
                if sub.is_zero:
                    continue
                term = rows[k][j] * sub
                acc = acc + term if idx % 2 == 0 else acc - term
            memo[key] = acc
            return acc

        return minor(0, tuple(range(size)))


def staircase_matrix_size(m: int, n: int) -> tuple[int, int]:
    """(a, n*a) with a = ceil((n-1)(m-1) / n), the padded Jacobi-Trudi size."""
    deg = (n - 1) * (m - 1)
    a = -(-deg // n)
    return a, n * a


def build_A(m: int, *, n: int, r: int = 0) -> PolyMatrix:
    """The na x na Jacobi-Trudi matrix of the dilated staircase, zero-padded.

    Row k, column j holds ``e_{lam_k - k + j}`` with color ``r - j + 1``,
    where lam is the conjugate of the staircase ``(n-1) * delta_{m-1}``.
    """
    if m < 2:
        raise ValueError(f"the staircase matrices need m >= 2, got {m}")
    _, size = staircase_matrix_size(m, n)
    lam = staircase(m - 1, n - 1).conjugate()
    entries = [
        [loop_e(lam.part(k) - k + j, r - j + 1, n=n, m=m) for j in range(1, size + 1)]
        for k in range(1, size + 1)
    ]
    return PolyMatrix(m, n, entries)


def build_B(m: int, *, n: int, r: int = 0) -> PolyMatrix:
    """The (n(a+1) - 1) x n(a+1) extension of build_A by n extra columns,
    keeping the column-translation structure (each column repeats the one
    n to its left, shifted down by n - 1)."""
    if m < 2:
        raise ValueError(f"the staircase matrices need m >= 2, got {m}")
    a, _ = staircase_matrix_size(m, n)
    nrows = n * (a + 1) - 1
    ncols = n * (a + 1)
    lam = staircase(m, n - 1).conjugate()
    entries = [
        [loop_e(lam.part(k) - k + j - 1, r - j + 1, n=n, m=m) for j in range(1, ncols + 1)]
        for k in range(1, nrows + 1)
    ]
    return PolyMatrix(m, n, entries)


def tau_vector(m: int, *, n: int, r: int = 0) -> list[ColoredPoly]:
    """The alternating tau column vector annihilated by build_B.

    Component j (1-based) is ``(-1)^(j-1) tau_{(n-1)m - j + 1}`` with color
    ``r - j``; components with negative subscript vanish.
    """
    if m < 2:
        raise ValueError(f"the staircase matrices need m >= 2, got {m}")
    a, _ = staircase_matrix_size(m, n)
    out = []
    for j in range(1, n * (a + 1) + 1):
        p = tau((n - 1) * m - j + 1, r - j, n=n, m=m)
        out.append(p if j % 2 == 1 else -p)
    return out


def trop_eval(p: ColoredPoly, grid) -> int | float:
    """Tropical (min, +) evaluation of a subtraction-free polynomial.

    ``grid`` must expose ``m``, ``n`` and ``flat()`` like
    :class:`krenergy.crystal.TropicalGrid`.  Returns ``math.inf`` for the
    zero polynomial and rejects polynomials with a negative coefficient.
    """
    if (grid.m, grid.n) != (p.m, p.n):
        raise ValueError(f"grid ({grid.m}, {grid.n}) does not match poly ({p.m}, {p.n})")
    if not p.terms:
        return math.inf
    if any(c < 0 for c in p.terms.values()):
        raise ValueError("tropical evaluation needs a subtraction-free polynomial")
    flat = grid.flat()
    n = p.n
    if (
        _np is not None
        and len(p.terms) >= _NUMPY_MIN_TERMS
        and max(abs(v) for v in flat) < _NUMPY_VALUE_BOUND
    ):
        mat = p._trop_matrix
        if mat is None:
            mat = _np.zeros((len(p.terms), p.m * p.n), dtype=_np.int64)
            for t, mono in enumerate(p.terms):
                for (i, r), e in mono:
                    mat[t, (i - 1) * n + r] = e
            p._trop_matrix = mat
        return int((mat @ _np.asarray(flat, dtype=_np.int64)).min())
    best: int | None = None
    for mono in p.terms:
        s = 0
        for (i, r), e in mono:
            s += e * flat[(i - 1) * n + r]
        if best is None or s < best:
            best = s
    assert best is not None
    return best

"""Exact integer and rational linear algebra.

Row-style Hermite and Smith normal forms with unimodular transforms,
integral linear solving, and lattice saturation.  Everything runs on
Python's arbitrary-precision integers; there is no entry-size limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch

__all__ = [
    "IntMatrix",
    "Lattice",
    "RatVector",
    "hnf",
    "snf",
    "solve_integral",
    "saturate",
    "kernel_basis",
]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        if not all(isinstance(e, int) for e in self.entries):
            raise DimensionMismatch("entries must be integers")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionMismatch("ragged rows")
        flat = tuple(int(e) for r in rows for e in r)
        return IntMatrix(len(rows), cols, flat)

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(rows, cols, (0,) * (rows * cols))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_list(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(
            [[self.entry(i, j) for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def matmul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} times {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            out.append(
                [
                    sum(ri[k] * other.entry(k, j) for k in range(self.cols))
                    for j in range(other.cols)
                ]
            )
        return IntMatrix.from_rows(out, cols=other.cols)

    def det(self) -> int:
        """Determinant by fraction-free Gaussian elimination (Bareiss)."""
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = self.row_list()
        sign = 1
        prev = 1
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
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(e) for e in self.row(i)) for i in range(self.rows)) + "]"


@dataclass(frozen=True)
class RatVector:
    """Vector of exact rationals."""

    coords: tuple[Fraction, ...]

    @staticmethod
    def of(values: Iterable) -> "RatVector":
        return RatVector(tuple(Fraction(v) for v in values))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)


def _row_combine(rows: list[list[int]], i: int, k: int, col: int) -> None:
    """Unimodular 2-row transform zeroing rows[k][col] against pivot rows[i][col]."""
    a, b = rows[i][col], rows[k][col]
    if b == 0:
        return
    if a == 0:
        rows[i], rows[k] = rows[k], rows[i]
        return
    g, s, t = _extgcd(a, b)
    aq, bq = a // g, b // g
    ri, rk = rows[i], rows[k]
    for j in range(len(ri)):
        x, y = ri[j], rk[j]
        ri[j] = s * x + t * y
        rk[j] = -bq * x + aq * y


def _extgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b), g > 0 when inputs nonzero."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hnf(a: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form with transform.

    Returns (h, u) where u is unimodular, u*a = h, pivots of h are
    positive, and every entry above a pivot is reduced into [0, pivot).
    Zero rows, if any, sit at the bottom of h.
    """
    m, n = a.rows, a.cols
    work = [list(a.row(i)) + [1 if j == i else 0 for j in range(m)] for i in range(m)]
    r = 0
    for col in range(n):
        pivot_row = None
        for i in range(r, m):
            if work[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            work[r], work[pivot_row] = work[pivot_row], work[r]
        for i in range(r + 1, m):
            _row_combine(work, r, i, col)
        if work[r][col] < 0:
            work[r] = [-x for x in work[r]]
        p = work[r][col]
        for i in range(r):
            q = work[i][col] // p
            if q:
                work[i] = [x - q * y for x, y in zip(work[i], work[r])]
        r += 1
        if r == m:
            break
    h = IntMatrix.from_rows([w[:n] for w in work], cols=n)
    u = IntMatrix.from_rows([w[n:] for w in work], cols=m)
    return h, u


def snf(a: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form with transforms.

    Returns (d, u, v) with u, v unimodular, u*a*v = d, d diagonal,
    entries nonnegative and d[i] | d[i+1].
    """
    m, n = a.rows, a.cols
    mat = a.row_list()
    u = IntMatrix.identity(m).row_list()
    v = IntMatrix.identity(n).row_list()

    def row_op(i: int, k: int, col: int) -> None:
        a_, b_ = mat[i][col], mat[k][col]
        if b_ == 0:
            return
        if a_ == 0:
            mat[i], mat[k] = mat[k], mat[i]
            u[i], u[k] = u[k], u[i]
            return
        g, s, t = _extgcd(a_, b_)
        aq, bq = a_ // g, b_ // g
        for row_pair in (mat, u):
            ri, rk = row_pair[i], row_pair[k]
            for j in range(len(ri)):
                x, y = ri[j], rk[j]
                ri[j] = s * x + t * y
                rk[j] = -bq * x + aq * y

    def col_op(j: int, k: int, row: int) -> None:
        a_, b_ = mat[row][j], mat[row][k]
        if b_ == 0:
            return
        if a_ == 0:
            for r_ in mat:
                r_[j], r_[k] = r_[k], r_[j]
            for r_ in v:
                r_[j], r_[k] = r_[k], r_[j]
            return
        g, s, t = _extgcd(a_, b_)
        aq, bq = a_ // g, b_ // g
        for r_ in mat:
            x, y = r_[j], r_[k]
            r_[j] = s * x + t * y
            r_[k] = -bq * x + aq * y
        for r_ in v:
            x, y = r_[j], r_[k]
            r_[j] = s * x + t * y
            r_[k] = -bq * x + aq * y

    size = min(m, n)
    t = 0
    while t < size:
        # Bring a nonzero entry of the trailing submatrix to (t, t).
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if mat[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            mat[t], mat[pi] = mat[pi], mat[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for r_ in mat:
                r_[t], r_[pj] = r_[pj], r_[t]
            for r_ in v:
                r_[t], r_[pj] = r_[pj], r_[t]
        # Alternate row and column clearing until both are clean.
        while True:
            for i in range(t + 1, m):
                row_op(t, i, t)
            for j in range(t + 1, n):
                col_op(t, j, t)
            if all(mat[i][t] == 0 for i in range(t + 1, m)) and all(
                mat[t][j] == 0 for j in range(t + 1, n)
            ):
                break
        # Enforce divisibility of every remaining entry by the pivot.
        p = mat[t][t]
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if mat[i][j] % p != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            mat[t] = [x + y for x, y in zip(mat[t], mat[bad])]
            u[t] = [x + y for x, y in zip(u[t], u[bad])]
            continue
        if mat[t][t] < 0:
            mat[t] = [-x for x in mat[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    d = IntMatrix.from_rows(mat, cols=n)
    return d, IntMatrix.from_rows(u, cols=m), IntMatrix.from_rows(v, cols=n)


def _pivot_columns(h: IntMatrix) -> list[int]:
    pivots = []
    for i in range(h.rows):
        row = h.row(i)
        for j, e in enumerate(row):
            if e != 0:
                pivots.append(j)
                break
    return pivots


def solve_integral(a: IntMatrix, b: RatVector) -> Optional[tuple[int, ...]]:
    """Solve x * a = b over the integers.

    Returns a coefficient vector x of length a.rows, or None when b is
    not in the integer row span of a.  b must be an integral vector of
    length a.cols.
    """
    if len(b) != a.cols:
        raise DimensionMismatch(f"vector length {len(b)} vs {a.cols} columns")
    if not b.is_integral():
        return None
    target = [int(c) for c in b.coords]
    h, u = hnf(a)
    pivots = _pivot_columns(h)
    residual = list(target)
    y = [0] * a.rows
    for rank_idx, col in enumerate(pivots):
        p = h.entry(rank_idx, col)
        if residual[col] % p != 0:
            return None
        q = residual[col] // p
        y[rank_idx] = q
        if q:
            row = h.row(rank_idx)
            residual = [x - q * e for x, e in zip(residual, row)]
    if any(residual):
        return None
    x = [sum(y[k] * u.entry(k, i) for k in range(a.rows)) for i in range(a.rows)]
    return tuple(x)


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Basis of the left kernel {x : x * m = 0}, one row per basis vector.

    The kernel of an integer matrix is saturated, and the returned rows
    (taken from the unimodular HNF transform) form a basis of it.
    """
    h, u = hnf(m)
    rows = [list(u.row(i)) for i in range(m.rows) if not any(h.row(i))]
    basis = IntMatrix.from_rows(rows, cols=m.rows)
    hb, _ = hnf(basis)
    nonzero = [list(hb.row(i)) for i in range(hb.rows) if any(hb.row(i))]
    return IntMatrix.from_rows(nonzero, cols=m.rows)


@dataclass(frozen=True)
class Lattice:
    """Integer lattice given by an HNF row basis inside Z^ambient_rank."""

    ambient_rank: int
    basis: IntMatrix

    def __post_init__(self) -> None:
        if self.basis.cols != self.ambient_rank:
            raise DimensionMismatch("basis width differs from ambient rank")

    @staticmethod
    def from_rows(ambient_rank: int, rows: Sequence[Sequence[int]]) -> "Lattice":
        mat = IntMatrix.from_rows(list(rows), cols=ambient_rank)
        h, _ = hnf(mat)
        nonzero = [list(h.row(i)) for i in range(h.rows) if any(h.row(i))]
        return Lattice(ambient_rank, IntMatrix.from_rows(nonzero, cols=ambient_rank))

    @staticmethod
    def full(ambient_rank: int) -> "Lattice":
        return Lattice(ambient_rank, IntMatrix.identity(ambient_rank))

    def rank(self) -> int:
        return self.basis.rows

    def contains(self, vec: Sequence[int]) -> bool:
        if len(vec) != self.ambient_rank:
            raise DimensionMismatch("vector length differs from ambient rank")
        return solve_integral(self.basis, RatVector.of(vec)) is not None

    def is_full(self) -> bool:
        return self.basis == IntMatrix.identity(self.ambient_rank)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.ambient_rank == other.ambient_rank and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_rank, self.basis.entries))


def saturate(lat: Lattice) -> Lattice:
    """Saturation {v : n*v in lat for some n >= 1} as a lattice.

    Computed as the double integer-orthogonal complement, which equals
    the intersection of the rational span with Z^n.
    """
    orth = kernel_basis(lat.basis.transpose())
    sat = kernel_basis(orth.transpose())
    return Lattice.from_rows(lat.ambient_rank, sat.row_list())


def content(values: Iterable[int]) -> int:
    """gcd of the values, 0 for an empty or all-zero collection."""
    g = 0
    for value in values:
        g = gcd(g, value)
    return g

"""Exact rational matrices: determinants, solving, column replacement.

Two independent determinant routines are provided on purpose.
``det_leibniz`` is the signed permutation sum straight from the definition
(guarded at n <= 8); ``det_bareiss`` is fraction-free elimination and runs
at any size.  The graph pipeline is cross-checked against both, and they
are cross-checked against each other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import IndexOutOfRange, SingularMatrix, SizeMismatch, SizeTooLarge
from .rational import as_fraction

Vector = tuple[Fraction, ...]

#: det_leibniz refuses larger inputs; n! terms get out of hand quickly.
LEIBNIZ_MAX_N = 8


def permutation_sign(images: Sequence[int]) -> int:
    """Sign of a permutation given as an image tuple: (-1)^inversions."""
    inversions = 0
    n = len(images)
    for i in range(n):
        for j in range(i + 1, n):
            if images[i] > images[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class Matrix:
    """Square matrix of exact Fractions."""

    rows: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction | int]]) -> Matrix:
        n = len(rows)
        if n == 0:
            raise SizeMismatch("matrix must have size >= 1")
        coerced = []
        for row in rows:
            if len(row) != n:
                raise SizeMismatch(f"matrix is not square: {len(row)} != {n}")
            coerced.append(tuple(as_fraction(x) for x in row))
        return cls(tuple(coerced))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def mul_vector(self, x: Sequence[Fraction]) -> Vector:
        if len(x) != self.n:
            raise SizeMismatch(f"vector length {len(x)} != matrix size {self.n}")
        return tuple(
            sum((row[k] * x[k] for k in range(self.n)), Fraction(0))
            for row in self.rows
        )


@dataclass(frozen=True)
class LinearSystem:
    """A·x = b with square A and matching right-hand side."""

    matrix: Matrix
    rhs: Vector

    @classmethod
    def of(
        cls,
        rows: Sequence[Sequence[Fraction | int]],
        rhs: Sequence[Fraction | int],
    ) -> LinearSystem:
        m = Matrix.from_rows(rows)
        if len(rhs) != m.n:
            raise SizeMismatch(f"rhs length {len(rhs)} != matrix size {m.n}")
        return cls(m, tuple(as_fraction(x) for x in rhs))

    @property
    def n(self) -> int:
        return self.matrix.n


def det_leibniz(m: Matrix) -> Fraction:
    """Determinant as the signed sum over all permutations."""
    n = m.n
    if n > LEIBNIZ_MAX_N:
        raise SizeTooLarge(f"det_leibniz guard: n = {n} > {LEIBNIZ_MAX_N}")
    total = Fraction(0)
    for images in itertools.permutations(range(n)):
        term = Fraction(permutation_sign(images))
        for i in range(n):
            term *= m.rows[i][images[i]]
        total += term
    return total


def det_bareiss(m: Matrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination.

    Pivots are the first nonzero entry below the diagonal in column order;
    each row swap flips the sign.  Exact at any size.
    """
    n = m.n
    a = [list(row) for row in m.rows]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def solve_gauss(sys: LinearSystem) -> Vector:
    """Exact Gaussian elimination with first-nonzero pivoting.

    Exact arithmetic needs no magnitude-based pivoting; taking the first
    nonzero keeps the elimination deterministic.
    """
    n = sys.n
    a = [list(row) + [sys.rhs[i]] for i, row in enumerate(sys.matrix.rows)]
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if a[r][k] != 0), None)
        if pivot_row is None:
            raise SingularMatrix()
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
        for r in range(k + 1, n):
            if a[r][k] == 0:
                continue
            f = a[r][k] / a[k][k]
            for c in range(k, n + 1):
                a[r][c] -= f * a[k][c]
    x = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        acc = a[k][n]
        for c in range(k + 1, n):
            acc -= a[k][c] * x[c]
        x[k] = acc / a[k][k]
    return tuple(x)


def replace_column(m: Matrix, i: int, col: Sequence[Fraction]) -> Matrix:
    """Copy of ``m`` with 1-based column ``i`` replaced by ``col``."""
    if not 1 <= i <= m.n:
        raise IndexOutOfRange(f"column index {i} out of range 1..{m.n}")
    if len(col) != m.n:
        raise SizeMismatch(f"column length {len(col)} != matrix size {m.n}")
    rows = tuple(
        row[: i - 1] + (as_fraction(col[r]),) + row[i:]
        for r, row in enumerate(m.rows)
    )
    return Matrix(rows)

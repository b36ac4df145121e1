"""
Small dense symmetric matrices over the rationals.

Everything here is exact: inversion is Gauss-Jordan elimination over
Fractions and the signature is read off a congruence diagonalization, so
no eigenvalues (and no square roots) are ever needed.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

import numpy as np

from algebra.rational import to_rational
from utils.errors import DimensionMismatch, SingularMatrix

Rows = Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class SymMatrix:
    """Immutable symmetric matrix with Fraction entries"""

    entries: Rows

    def __post_init__(self):
        n = len(self.entries)
        if n == 0:
            raise DimensionMismatch("a symmetric matrix needs at least one row")
        for row in self.entries:
            if len(row) != n:
                raise DimensionMismatch(f"matrix is not square: row of length {len(row)} in a {n}-row matrix")
        for i in range(n):
            for j in range(i + 1, n):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i + 1},{j + 1})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "SymMatrix":
        """Build from any nested sequence of exact values"""
        return cls(tuple(tuple(to_rational(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, dim: int) -> "SymMatrix":
        return cls.diagonal([1] * dim)

    @classmethod
    def diagonal(cls, values: Sequence) -> "SymMatrix":
        n = len(values)
        return cls.from_rows([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def as_array(self) -> np.ndarray:
        """Fresh object-dtype numpy copy of the entries"""
        array = np.empty((self.dim, self.dim), dtype=object)
        for i, row in enumerate(self.entries):
            for j, value in enumerate(row):
                array[i, j] = value
        return array


def _rows_of(m: SymMatrix):
    return [list(row) for row in m.entries]


def determinant(m: SymMatrix) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination"""
    a = _rows_of(m)
    n = m.dim
    det = Fraction(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            det = -det
        pivot = a[col][col]
        det *= pivot
        for r in range(col + 1, n):
            factor = a[r][col] / pivot
            if factor:
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det


def invert_symmetric(m: SymMatrix) -> SymMatrix:
    """Exact inverse; raises SingularMatrix when det(m) = 0"""
    n = m.dim
    a = _rows_of(m)
    b = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    for i in range(n):
        # Pivot for rational: any nonzero entry will do
        k = next((r for r in range(i, n) if a[r][i] != 0), None)
        if k is None:
            raise SingularMatrix(f"matrix of dimension {n} is singular (no pivot in column {i + 1})")
        if k != i:
            a[i], a[k] = a[k], a[i]
            b[i], b[k] = b[k], b[i]

        inv = 1 / a[i][i]
        a[i] = [e * inv for e in a[i]]
        b[i] = [e * inv for e in b[i]]

        for j in range(n):
            if j == i or a[j][i] == 0:
                continue
            d = a[j][i]
            a[j] = [t - r * d for t, r in zip(a[j], a[i])]
            b[j] = [t - r * d for t, r in zip(b[j], b[i])]

    return SymMatrix(tuple(tuple(row) for row in b))


def congruent(m: SymMatrix, a: Sequence[Sequence]) -> SymMatrix:
    """Return AᵀmA for a square rational matrix A"""
    a_array = np.array([[to_rational(v) for v in row] for row in a], dtype=object)
    if a_array.shape != (m.dim, m.dim):
        raise DimensionMismatch(f"congruence matrix has shape {a_array.shape}, expected {(m.dim, m.dim)}")
    product = np.dot(np.dot(a_array.T, m.as_array()), a_array)
    return SymMatrix.from_rows(product.tolist())


def signature(m: SymMatrix) -> Tuple[int, int]:
    """Count of positive and negative squares of a nondegenerate form.

    Symmetric Gaussian reduction: each step pivots on the diagonal entry of
    largest magnitude (lowest index on ties) and replaces the remaining
    block by its Schur complement. When the whole remaining diagonal is zero
    a hyperbolic pair [[0, b], [b, 0]] is split off instead, contributing
    one positive and one negative square.
    """
    a = _rows_of(m)
    active = list(range(m.dim))
    positive = negative = 0

    while active:
        candidates = [i for i in active if a[i][i] != 0]
        if candidates:
            largest = max(abs(a[i][i]) for i in candidates)
            p = min(i for i in candidates if abs(a[i][i]) == largest)
            pivot = a[p][p]
            if pivot > 0:
                positive += 1
            else:
                negative += 1
            active.remove(p)
            for i in active:
                if a[i][p] == 0:
                    continue
                for j in active:
                    a[i][j] -= a[i][p] * a[p][j] / pivot
            continue

        pair = next(((i, j) for i in active for j in active if i < j and a[i][j] != 0), None)
        if pair is None:
            raise SingularMatrix(f"form is degenerate: {len(active)}-dimensional radical remains")
        i, j = pair
        b = a[i][j]
        positive += 1
        negative += 1
        active.remove(i)
        active.remove(j)
        for k in active:
            for l in active:
                a[k][l] -= (a[k][i] * a[j][l] + a[k][j] * a[i][l]) / b

    return positive, negative

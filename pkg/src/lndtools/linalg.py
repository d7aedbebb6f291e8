"""Exact linear algebra over the rationals.

Dense Gaussian elimination with fraction-free-ish pivoting: the pivot in
each column is the candidate with the smallest numerator (then smallest
denominator), which keeps intermediate fractions modest.  Infeasible
systems come back with a checkable certificate: a row vector y with
y*A = 0 and y*b != 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Row = tuple[Fraction, ...]

_ZERO = Fraction(0)


class QMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        data = tuple(tuple(Fraction(v) for v in row) for row in entries)
        if data and any(len(r) != len(data[0]) for r in data):
            raise ValueError("ragged rows")
        self.entries = data
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def apply(self, vector: Sequence) -> Row:
        """Matrix-vector product."""
        vec = [Fraction(v) for v in vector]
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum((r[j] * vec[j] for j in range(self.cols)), _ZERO)
                     for r in self.entries)

    def transpose(self) -> "QMatrix":
        return QMatrix([[self.entries[i][j] for i in range(self.rows)]
                        for j in range(self.cols)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"QMatrix({self.rows}x{self.cols})"


@dataclass(frozen=True)
class Inconsistency:
    """Proof that A*x = b has no solution: multipliers combining the rows
    of A to zero while combining b to a nonzero value."""

    multipliers: Row
    value: Fraction
    rows: int
    cols: int

    def verify(self, matrix: QMatrix, rhs: Sequence) -> bool:
        ys = self.multipliers
        if len(ys) != matrix.rows:
            return False
        for j in range(matrix.cols):
            if sum((ys[i] * matrix.entry(i, j) for i in range(matrix.rows)),
                   _ZERO):
                return False
        combined = sum((ys[i] * Fraction(rhs[i]) for i in range(matrix.rows)),
                       _ZERO)
        return combined == self.value and self.value != 0


def _pivot_weight(value: Fraction):
    return (abs(value.numerator), value.denominator)


def solve_exact(matrix: QMatrix, rhs: Sequence):
    """Solve A*x = b exactly.

    Returns a tuple of Fractions (free variables pinned to zero) or an
    :class:`Inconsistency` certificate.
    """
    m, n = matrix.rows, matrix.cols
    b = [Fraction(v) for v in rhs]
    if len(b) != m:
        raise ValueError("right-hand side length does not match row count")
    a = [list(row) for row in matrix.entries]
    # Trace row operations so an inconsistent row yields its multipliers.
    trace = [[Fraction(1) if i == j else _ZERO for j in range(m)]
             for i in range(m)]

    def certificate(row: int) -> Inconsistency:
        return Inconsistency(tuple(trace[row]), b[row], m, n)

    for i in range(m):
        if not any(a[i]) and b[i]:
            return certificate(i)

    pivots: list[tuple[int, int]] = []
    pivot_row = 0
    for col in range(n):
        if pivot_row >= m:
            break
        candidates = [r for r in range(pivot_row, m) if a[r][col]]
        if not candidates:
            continue
        best = min(candidates, key=lambda r: (_pivot_weight(a[r][col]), r))
        if best != pivot_row:
            a[best], a[pivot_row] = a[pivot_row], a[best]
            b[best], b[pivot_row] = b[pivot_row], b[best]
            trace[best], trace[pivot_row] = trace[pivot_row], trace[best]
        inv = 1 / a[pivot_row][col]
        for r in range(pivot_row + 1, m):
            factor = a[r][col] * inv
            if not factor:
                continue
            for c in range(col, n):
                a[r][c] -= factor * a[pivot_row][c]
            b[r] -= factor * b[pivot_row]
            for c in range(m):
                trace[r][c] -= factor * trace[pivot_row][c]
            if not any(a[r]) and b[r]:
                return certificate(r)
        pivots.append((pivot_row, col))
        pivot_row += 1

    for r in range(pivot_row, m):
        if b[r]:
            return certificate(r)

    solution = [_ZERO] * n
    for row, col in reversed(pivots):
        acc = b[row]
        for c in range(col + 1, n):
            if a[row][c]:
                acc -= a[row][c] * solution[c]
        solution[col] = acc / a[row][col]
    return tuple(solution)


def rank(matrix: QMatrix) -> int:
    m, n = matrix.rows, matrix.cols
    a = [list(row) for row in matrix.entries]
    count = 0
    pivot_row = 0
    for col in range(n):
        if pivot_row >= m:
            break
        candidates = [r for r in range(pivot_row, m) if a[r][col]]
        if not candidates:
            continue
        best = min(candidates, key=lambda r: (_pivot_weight(a[r][col]), r))
        a[best], a[pivot_row] = a[pivot_row], a[best]
        inv = 1 / a[pivot_row][col]
        for r in range(pivot_row + 1, m):
            factor = a[r][col] * inv
            if factor:
                for c in range(col, n):
                    a[r][c] -= factor * a[pivot_row][c]
        count += 1
        pivot_row += 1
    return count

"""Exact linear algebra over the rationals.

Matrices are lists of lists of Fraction (or int, promoted on the fly).
Everything here is dense Gaussian elimination; the matrices that show up
in this package are tiny (a few dozen rows), so clarity wins over speed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence

Matrix = List[List[Fraction]]
Vector = List[Fraction]

__all__ = [
    "zeros",
    "identity",
    "mat_copy",
    "mat_add",
    "mat_sub",
    "mat_neg",
    "mat_scale",
    "mat_mul",
    "mat_vec",
    "transpose",
    "is_zero_matrix",
    "rref",
    "rank",
    "nullspace",
    "solve",
    "hstack",
    "vstack",
]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]


def mat_copy(a: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in a]


def mat_add(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) + Fraction(y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) - Fraction(y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_neg(a: Sequence[Sequence]) -> Matrix:
    return [[-Fraction(x) for x in row] for row in a]


def mat_scale(a: Sequence[Sequence], c) -> Matrix:
    c = Fraction(c)
    return [[c * Fraction(x) for x in row] for row in a]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    """Matrix product a @ b.  Raises ValueError on shape mismatch."""
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a)}x{len(a[0])} @ {len(b)}x{len(b[0])}")
    if not b:
        return [[Fraction(0)] * 0 for _ in a]
    cols = len(b[0])
    out = zeros(len(a), cols)
    for i, row in enumerate(a):
        for k, x in enumerate(row):
            if x:
                x = Fraction(x)
                bk = b[k]
                oi = out[i]
                for j in range(cols):
                    if bk[j]:
                        oi[j] += x * Fraction(bk[j])
    return out


def mat_vec(a: Sequence[Sequence], v: Sequence) -> Vector:
    return [sum((Fraction(x) * Fraction(y) for x, y in zip(row, v)), Fraction(0)) for row in a]


def transpose(a: Sequence[Sequence]) -> Matrix:
    if not a:
        return []
    return [[Fraction(a[i][j]) for i in range(len(a))] for j in range(len(a[0]))]


def is_zero_matrix(a: Sequence[Sequence]) -> bool:
    return all(not x for row in a for x in row)


def rref(a: Sequence[Sequence]):
    """Reduced row echelon form.  Returns (matrix, pivot column list)."""
    m = mat_copy(a)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, rows):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Sequence[Sequence]) -> int:
    return len(rref(a)[1])


def nullspace(a: Sequence[Sequence]) -> List[Vector]:
    """Basis of the right null space of a (one vector per free column)."""
    if not a:
        return []
    cols = len(a[0])
    m, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis: List[Vector] = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> Optional[Vector]:
    """One solution of a x = b, or None if the system is inconsistent."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    if rows == 0:
        return [Fraction(0)] * cols
    m, pivots = rref(aug)
    for r in range(len(pivots)):
        if pivots[r] == cols:
            return None
    x = [Fraction(0)] * cols
    for r, pc in enumerate(pivots):
        if pc < cols:
            x[pc] = m[r][cols]
    return x


def hstack(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    if len(a) != len(b):
        raise ValueError("row count mismatch in hstack")
    return [[Fraction(x) for x in ra] + [Fraction(y) for y in rb] for ra, rb in zip(a, b)]


def vstack(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    return mat_copy(list(a) + list(b))

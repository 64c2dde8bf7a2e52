"""Exact nullspaces by fraction-free Gauss-Jordan elimination.

Rows are scaled to integers up front; elimination then uses only integer
cross-multiplication, with each row divided by the gcd of its entries to keep
the numbers small.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Matrix = Sequence[Sequence]


def _integer_row(row) -> list[int]:
    fr = [Fraction(v) for v in row]
    den = lcm(*(f.denominator for f in fr)) if fr else 1
    return [int(f * den) for f in fr]


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return [v // g for v in row]
    return row


def reduced_echelon(matrix: Matrix) -> tuple[list[list[int]], list[int]]:
    """Integer reduced row echelon form and the pivot columns.

    Each pivot row is zero in every other pivot column; pivots are positive.
    """
    rows = [_primitive(_integer_row(r)) for r in matrix]
    rows = [r for r in rows if any(r)]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        pr = next((i for i in range(top, len(rows)) if rows[i][col]), None)
        if pr is None:
            continue
        rows[top], rows[pr] = rows[pr], rows[top]
        piv = rows[top]
        if piv[col] < 0:
            piv = rows[top] = [-v for v in piv]
        a = piv[col]
        for i in range(len(rows)):
            c = rows[i][col]
            if i != top and c:
                rows[i] = _primitive([a * u - c * v for u, v in zip(rows[i], piv)])
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return rows[:top], pivots


def rank(matrix: Matrix) -> int:
    return len(reduced_echelon(matrix)[1])


def nullspace(matrix: Matrix, ncols: int | None = None) -> list[list[int]]:
    """Basis of {v : M v = 0} as primitive integer vectors, one per free column."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    rows, pivots = reduced_echelon(matrix)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, pc in zip(rows, pivots):
            vec[pc] = Fraction(-row[free], row[pc])
        basis.append(_primitive(_integer_row(vec)))
    return basis

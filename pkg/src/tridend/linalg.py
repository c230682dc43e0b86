"""Exact row reduction over the rationals.

Forward elimination is fraction free: rows are scaled to integers, combined
by cross multiplication and divided by their content, so entries stay small
integers.  Only the final back substitution uses Fractions.
"""
from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from math import gcd, lcm


def _integer_row(row: Sequence[Fraction | int]) -> list[int]:
    den = 1
    for x in row:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = lcm(den, x.denominator)
    out = [int(x * den) for x in row]
    return _primitive_part(out)


def _primitive_part(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def echelon(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> tuple[list[list[int]], list[int], list[int]]:
    """Integer row echelon form.

    Returns (echelon rows, pivot columns, origin) where ``origin[i]`` is the
    index of the input row that supplied pivot ``i``.
    """
    M = [_integer_row(r) for r in rows]
    for r in M:
        if len(r) != ncols:
            raise ValueError("row length does not match column count")
    origin = list(range(len(M)))
    pivots: list[int] = []
    top = 0
    for c in range(ncols):
        p = next((i for i in range(top, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[top], M[p] = M[p], M[top]
        origin[top], origin[p] = origin[p], origin[top]
        prow = M[top]
        a = prow[c]
        for i in range(top + 1, len(M)):
            b = M[i][c]
            if b:
                M[i] = _primitive_part([a * x - b * y for x, y in zip(M[i], prow)])
        pivots.append(c)
        top += 1
        if top == len(M):
            break
    return M[:top], pivots, origin[:top]


def rref(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> tuple[list[list[Fraction]], list[int], list[int]]:
    """Reduced row echelon form: (nonzero rows, pivot columns, origins)."""
    E, pivots, origin = echelon(rows, ncols)
    R = [[Fraction(x, row[c]) for x in row] for row, c in zip(E, pivots)]
    for i in range(len(R) - 1, -1, -1):
        c = pivots[i]
        for j in range(i):
            f = R[j][c]
            if f:
                R[j] = [x - f * y for x, y in zip(R[j], R[i])]
    return R, pivots, origin


def rank(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> int:
    return len(echelon(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : M x = 0}, one vector per free column."""
    R, pivots, _ = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis

"""Fraction-free row reduction and exact nullspaces of integer matrices."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


def _to_integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        den = 1
        for v in row:
            if isinstance(v, Fraction):
                den = lcm(den, v.denominator)
        out.append([int(v * den) for v in row])
    return out


def bareiss_echelon(rows: Sequence[Sequence]) -> tuple[list[list[int]], list[int]]:
    """Row echelon form by Bareiss' fraction-free elimination.

    Rational rows are scaled to integers first. The pivot in each column is the
    first nonzero entry at or below the current row. Every intermediate entry
    is a minor of the input, so each division is exact.

    Returns the nonzero echelon rows and the pivot column indices.
    """
    a = _to_integer_rows(rows)
    if not a:
        return [], []
    nrows, ncols = len(a), len(a[0])
    prev = 1
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        p = pr[c]
        for i in range(r + 1, nrows):
            ri = a[i]
            f = ri[c]
            if f:
                for j in range(c + 1, ncols):
                    q, rem = divmod(p * ri[j] - f * pr[j], prev)
                    assert rem == 0
                    ri[j] = q
            else:
                for j in range(c + 1, ncols):
                    q, rem = divmod(p * ri[j], prev)
                    assert rem == 0
                    ri[j] = q
            ri[c] = 0
        prev = p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(bareiss_echelon(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[int]]:
    """Integer basis of {v : rows . v = 0}, one vector per free column.

    Each vector has a 1-equivalent in its free column (before clearing
    denominators), zeros in the other free columns, and is scaled to coprime
    integers with a positive free-column entry.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    ech, pivots = bareiss_echelon(rows) if rows else ([], [])
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        x: list[Fraction] = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for k in range(len(pivots) - 1, -1, -1):
            pc = pivots[k]
            row = ech[k]
            s = sum((row[j] * x[j] for j in range(pc + 1, ncols) if row[j] and x[j]), Fraction(0))
            x[pc] = -s / row[pc]
        den = 1
        for v in x:
            den = lcm(den, v.denominator)
        ints = [int(v * den) for v in x]
        g = 0
        for v in ints:
            g = gcd(g, v)
        basis.append([v // g for v in ints])
    return basis

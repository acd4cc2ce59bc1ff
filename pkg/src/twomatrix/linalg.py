"""Small determinants over exact, floating and generic ring scalars.

Windows in this package are tiny (N <= 8), so clarity and exactness win
over asymptotics: fraction-free elimination for rationals, partially
pivoted elimination for floats and complexes, and a division-free
Laplace expansion for anything ring-like (e.g. formal polynomials).
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["det_bareiss", "det_pivoted", "det_laplace", "det_auto"]


def det_bareiss(rows) -> Fraction:
    """Fraction-free (Bareiss) determinant for exact rational entries."""
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    if n == 0:
        return Fraction(1)
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


def det_pivoted(rows) -> complex:
    """Partially pivoted elimination for float or complex entries."""
    a = [[complex(x) for x in row] for row in rows]
    n = len(a)
    if n == 0:
        return 1.0
    det = 1.0 + 0.0j
    for k in range(n):
        piv = max(range(k, n), key=lambda r: abs(a[r][k]))
        if abs(a[piv][k]) == 0.0:
            return 0.0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k + 1, n):
                a[i][j] -= f * a[k][j]
    return det


def det_laplace(rows):
    """Division-free determinant over any commutative ring.

    Expansion by the first remaining row with memoization over column
    subsets; O(n 2^n) ring multiplications.
    """
    n = len(rows)
    if n == 0:
        return 1
    full = (1 << n) - 1
    memo: dict[int, object] = {}

    def minor(cols: int, row: int):
        if cols == 0:
            return 1
        if cols in memo:
            return memo[cols]
        acc = None
        sign = 1
        rest = cols
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            term = rows[row][j] * minor(cols & ~low, row + 1)
            if sign < 0:
                term = -term
            acc = term if acc is None else acc + term
            sign = -sign
            rest &= rest - 1
        memo[cols] = acc
        return acc

    # memo keyed on the column set alone: the row index it pairs with is
    # always n - popcount(cols), so the key is unambiguous
    return minor(full, 0)


def det_auto(rows):
    """Dispatch on the entry type: exact, floating, or generic ring."""
    n = len(rows)
    if n == 0:
        return 1
    sample = rows[0][0]
    if isinstance(sample, (int, Fraction, Rational)) and all(
        isinstance(x, (int, Fraction, Rational)) for row in rows for x in row
    ):
        return det_bareiss(rows)
    if all(isinstance(x, (int, float, complex)) for row in rows for x in row):
        return det_pivoted(rows)
    return det_laplace(rows)

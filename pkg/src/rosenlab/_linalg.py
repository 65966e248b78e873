"""Small exact linear algebra over Fraction, shared by the field machinery.

Dimensions here are the field degree (at most phi(2m)/2, so tiny);
plain Gaussian elimination with exact rationals is entirely adequate.
"""

from __future__ import annotations

from fractions import Fraction

Vec = list[Fraction]
Mat = list[list[Fraction]]


def solve(A: Mat, b: Vec) -> Vec:
    """Solve the square system A x = b exactly.  Raises on a singular A."""
    n = len(A)
    M = [[Fraction(A[i][j]) for j in range(n)] + [Fraction(b[i])]
         for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [v * inv for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b_ for a, b_ in zip(M[r], M[col])]
    return [M[i][n] for i in range(n)]


def invert(A: Mat) -> Mat:
    n = len(A)
    M = [[Fraction(A[i][j]) for j in range(n)] +
         [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [v * inv for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b_ for a, b_ in zip(M[r], M[col])]
    return [row[n:] for row in M]


def det(A: Mat) -> Fraction:
    n = len(A)
    M = [[Fraction(v) for v in row] for row in A]
    d = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            d = -d
        d *= M[col][col]
        inv = 1 / M[col][col]
        for r in range(col + 1, n):
            if M[r][col] != 0:
                f = M[r][col] * inv
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return d


def first_dependency(vectors) -> Vec:
    """Consume vectors v0, v1, ... until one is a combination of the earlier
    ones; return c with v_k = sum(c_i v_i, i < k).

    Raises ValueError if the iterable is exhausted while still independent.
    """
    basis: list[tuple[int, Vec, Vec]] = []  # (pivot index, reduced vector, combo)
    count = 0
    for v in vectors:
        w = [Fraction(x) for x in v]
        combo = [Fraction(0)] * count
        for piv, bvec, bcombo in basis:
            f = w[piv]
            if f != 0:
                w = [a - f * b for a, b in zip(w, bvec)]
                for i, c in enumerate(bcombo):
                    combo[i] += f * c
        piv = next((i for i, x in enumerate(w) if x != 0), None)
        if piv is None:
            return combo
        inv = 1 / w[piv]
        w = [x * inv for x in w]
        combo = [-x * inv for x in combo]
        basis.append((piv, w, combo + [inv]))
        count += 1
    raise ValueError("no linear dependency found")

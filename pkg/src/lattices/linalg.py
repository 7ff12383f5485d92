"""
Exact integer and rational linear algebra for small lattices

Everything here works with int and Fraction entries; nothing is ever rounded
except where an integer is explicitly wanted (LLL size reduction).
"""

from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

from config.settings import get_setting

Matrix = List[List[int]]
RatMatrix = List[List[Fraction]]


def transpose(m: Sequence[Sequence]) -> list:
    return [list(col) for col in zip(*m)]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def congruent(u: Sequence[Sequence[int]], gram: Sequence[Sequence[int]]) -> Matrix:
    """U * gram * U^T."""
    return mat_mul(mat_mul(u, gram), transpose(u))


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def determinant(m: Sequence[Sequence]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            factor = a[r][col] / a[col][col]
            if factor:
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> Matrix:
    """Row-style Hermite normal form of the Z-span of the given integer rows.

    Args:
        rows: Any number of generator rows of equal length

    Returns:
        The nonzero rows of the HNF: echelon form, positive pivots, and
        entries above each pivot reduced into [0, pivot)
    """
    m = [list(r) for r in rows if any(r)]
    if not m:
        return []
    ncols = len(m[0])
    top = 0
    for col in range(ncols):
        if top == len(m):
            break
        while True:
            live = [r for r in range(top, len(m)) if m[r][col] != 0]
            if not live:
                break
            best = min(live, key=lambda r: abs(m[r][col]))
            m[top], m[best] = m[best], m[top]
            cleared = True
            for r in range(top + 1, len(m)):
                if m[r][col]:
                    q = m[r][col] // m[top][col]
                    m[r] = [x - q * y for x, y in zip(m[r], m[top])]
                    if m[r][col]:
                        cleared = False
            if cleared:
                break
        if m[top][col] == 0:
            continue
        if m[top][col] < 0:
            m[top] = [-x for x in m[top]]
        for r in range(top):
            q = m[r][col] // m[top][col]
            if q:
                m[r] = [x - q * y for x, y in zip(m[r], m[top])]
        top += 1
    return m[:top]


def rational_hnf(rows: Sequence[Sequence[Fraction]]) -> Tuple[int, Tuple[Tuple[int, ...], ...]]:
    """Canonical form (d, H) of the lattice spanned by rational rows.

    d is the least common denominator, H the HNF of d times the rows, so
    the lattice is exactly H / d and (d, H) determines it.
    """
    d = 1
    for row in rows:
        for x in row:
            d = lcm(d, Fraction(x).denominator)
    scaled = [[int(Fraction(x) * d) for x in row] for row in rows]
    return d, tuple(tuple(row) for row in hermite_normal_form(scaled))


def echelon_coordinates(
    hnf: Sequence[Sequence[int]], denominator: int, vector: Sequence[Fraction]
) -> Optional[List[Fraction]]:
    """Rational coordinates of vector on the basis hnf / denominator.

    Returns None when the vector is outside the rational span.
    """
    target = [Fraction(x) * denominator for x in vector]
    coords: List[Fraction] = []
    for i, row in enumerate(hnf):
        pivot = next(c for c, x in enumerate(row) if x)
        partial = sum((coords[k] * hnf[k][pivot] for k in range(i)), Fraction(0))
        coords.append((target[pivot] - partial) / row[pivot])
    for col in range(len(target)):
        if sum((c * row[col] for c, row in zip(coords, hnf)), Fraction(0)) != target[col]:
            return None
    return coords


def gram_schmidt(gram: Sequence[Sequence[int]]) -> Tuple[RatMatrix, List[Fraction]]:
    """Gram-Schmidt coefficients mu and squared lengths from a Gram matrix."""
    n = len(gram)
    mu = [[Fraction(0)] * n for _ in range(n)]
    lengths = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            s = Fraction(gram[i][j]) - sum((mu[j][k] * mu[i][k] * lengths[k] for k in range(j)), Fraction(0))
            mu[i][j] = s / lengths[j]
        lengths[i] = gram[i][i] - sum((mu[i][k] ** 2 * lengths[k] for k in range(i)), Fraction(0))
    return mu, lengths


def lll_reduce(gram: Sequence[Sequence[int]], delta: Optional[Fraction] = None) -> Tuple[Matrix, Matrix]:
    """LLL-reduce a positive definite integer Gram matrix.

    Args:
        gram: Gram matrix of some basis b
        delta: Lovasz constant, defaults to the lll_delta setting

    Returns:
        (U, U * gram * U^T) with U unimodular, so the rows of U b are reduced
    """
    delta = Fraction(delta if delta is not None else get_setting("lll_delta"))
    n = len(gram)
    u = identity(n)
    current = [list(row) for row in gram]
    k = 1
    while k < n:
        for j in reversed(range(k)):
            mu, _ = gram_schmidt(current)
            q = round(mu[k][j])
            if q:
                u[k] = [x - q * y for x, y in zip(u[k], u[j])]
                current = congruent(u, gram)
        mu, lengths = gram_schmidt(current)
        if lengths[k] >= (delta - mu[k][k - 1] ** 2) * lengths[k - 1]:
            k += 1
        else:
            u[k], u[k - 1] = u[k - 1], u[k]
            current = congruent(u, gram)
            k = max(k - 1, 1)
    return u, current

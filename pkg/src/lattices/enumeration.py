"""
Exact Fincke-Pohst enumeration of short vectors

A lattice is given by an integer Gram matrix G of some basis; the norm of
the integer coordinate vector c is c^T G c / 2, which is the reduced norm
when G is the trace form Tr(x * conj(y)).
"""

import logging
from fractions import Fraction
from math import ceil, floor, isqrt
from typing import Iterator, List, Sequence, Tuple

from src.lattices.linalg import lll_reduce

logger = logging.getLogger(__name__)

Coords = Tuple[int, ...]


def quadratic_norm(gram: Sequence[Sequence[int]], coords: Sequence[int]) -> Fraction:
    n = len(coords)
    total = sum(coords[s] * coords[t] * gram[s][t] for s in range(n) for t in range(n))
    return Fraction(total, 2)


def _cholesky(gram: Sequence[Sequence[int]]) -> List[List[Fraction]]:
    """Coefficients q with x^T (G/2) x = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2."""
    n = len(gram)
    q = [[Fraction(gram[i][j], 2) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def _search(q: List[List[Fraction]], i: int, x: List[int], remaining: Fraction) -> Iterator[Coords]:
    n = len(q)
    center = -sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
    reach = isqrt(floor(remaining / q[i][i])) + 1
    for v in range(floor(center) - reach, ceil(center) + reach + 1):
        spent = q[i][i] * (v - center) ** 2
        if spent > remaining:
            continue
        x[i] = v
        if i == 0:
            yield tuple(x)
        else:
            yield from _search(q, i - 1, x, remaining - spent)
    x[i] = 0


def short_vectors(gram: Sequence[Sequence[int]], bound) -> Iterator[Tuple[Coords, Fraction]]:
    """All nonzero vectors with norm <= bound, one per +/- pair.

    The representative is the one whose first nonzero coordinate is
    positive. Order of the output is unspecified; see sorted_short_vectors.
    """
    if bound < 1:
        return
    n = len(gram)
    u, reduced = lll_reduce(gram)
    q = _cholesky(reduced)
    for xs in _search(q, n - 1, [0] * n, Fraction(bound)):
        coords = tuple(sum(xs[i] * u[i][col] for i in range(n)) for col in range(n))
        lead = next((c for c in coords if c), 0)
        if lead > 0:
            yield coords, quadratic_norm(gram, coords)


def sorted_short_vectors(gram: Sequence[Sequence[int]], bound) -> List[Tuple[Coords, Fraction]]:
    """short_vectors sorted by norm, ties broken lexicographically on coordinates."""
    found = sorted(short_vectors(gram, bound), key=lambda item: (item[1], item[0]))
    logger.debug("enumerated %d vectors up to norm %s", len(found), bound)
    return found


def norm_stream(gram: Sequence[Sequence[int]], start, cap) -> Iterator[Tuple[Coords, Fraction]]:
    """Lazily stream sorted_short_vectors up to cap, doubling the window."""
    done = Fraction(0)
    bound = max(Fraction(1), Fraction(min(start, cap)))
    while True:
        for coords, norm in sorted_short_vectors(gram, bound):
            if norm > done:
                yield coords, norm
        if bound >= cap:
            return
        done = bound
        bound = min(2 * bound, Fraction(cap))

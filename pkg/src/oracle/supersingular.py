"""
Brute-force supersingular j-invariants over F_{p^2}

A curve y^2 = x^3 + A x + B is supersingular iff the coefficient of x^(p-1)
in (x^3 + A x + B)^((p-1)/2) vanishes. With m = (p-1)/2 that coefficient is
the trinomial sum over x^(3i) (Ax)^(2m-3i) B^(2i-m), so no polynomial power is
ever expanded.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil
from typing import List, Sequence, Tuple, Union

from src.classpoly.forms import hurwitz_class_number
from src.errors import InputError, InvariantError
from src.finitepoly.fppoly import FpPoly
from src.oracle.fp2 import Fp2Elem, least_nonresidue

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SupersingularSet:
    p: int
    roots_in_Fp: Tuple[int, ...]
    conjugate_pairs: Tuple[FpPoly, ...]
    polynomial: FpPoly

    @property
    def count(self) -> int:
        return len(self.roots_in_Fp) + 2 * len(self.conjugate_pairs)


@lru_cache(maxsize=None)
def _trinomial_weights(p: int) -> Tuple[Tuple[int, int, int], ...]:
    """(weight, power of A, power of B) for the x^(p-1) coefficient."""
    m = (p - 1) // 2
    fact = [1] * (m + 1)
    for i in range(1, m + 1):
        fact[i] = fact[i - 1] * i % p
    out = []
    for i in range(ceil(m / 2), (2 * m) // 3 + 1):
        j, k = 2 * m - 3 * i, 2 * i - m
        weight = fact[m] * pow(fact[i] * fact[j] * fact[k], -1, p) % p
        out.append((weight, j, k))
    return tuple(out)


def hasse_coefficient(A: Fp2Elem, B: Fp2Elem) -> Fp2Elem:
    """Coefficient of x^(p-1) in (x^3 + A x + B)^((p-1)/2)."""
    total = Fp2Elem(0, 0, A.p)
    for weight, j, k in _trinomial_weights(A.p):
        total = total + (A ** j) * (B ** k) * weight
    return total


@lru_cache(maxsize=None)
def family_hasse_polynomial(p: int) -> FpPoly:
    """Hasse coefficient of y^2 = x^3 + 3c x + 2c as a polynomial in c."""
    by_degree = {}
    for weight, j, k in _trinomial_weights(p):
        by_degree[j + k] = (by_degree.get(j + k, 0) + weight * pow(3, j, p) * pow(2, k, p)) % p
    top = max(by_degree)
    return FpPoly.from_ints([by_degree.get(e, 0) for e in range(top, -1, -1)], p)


def curve_from_j(j: Fp2Elem) -> Tuple[Fp2Elem, Fp2Elem]:
    """(A, B) of a short Weierstrass curve with invariant j (p >= 5)."""
    p = j.p
    if j.is_zero():
        return Fp2Elem(0, 0, p), Fp2Elem(1, 0, p)
    if j == Fp2Elem.of(1728, 0, p):
        return Fp2Elem(1, 0, p), Fp2Elem(0, 0, p)
    c = j / (1728 - j)
    return c * 3, c * 2


def is_supersingular_j(j: Union[Fp2Elem, int], p: int) -> bool:
    if not isinstance(j, Fp2Elem):
        j = Fp2Elem.of(j, 0, p)
    if p in (2, 3):
        return j.is_zero()
    A, B = curve_from_j(j)
    return hasse_coefficient(A, B).is_zero()


def _scan_rows(p: int, rows: Sequence[int]) -> List[Tuple[int, int]]:
    """Supersingular a + b s for a in rows, via Horner on the family polynomial."""
    n = least_nonresidue(p)
    coeffs = family_hasse_polynomial(p).coeffs
    special_zero = p % 3 == 2
    special_1728 = p % 4 == 3
    hits = []
    for a in rows:
        for b in range(p):
            if b == 0 and a == 0:
                if special_zero:
                    hits.append((0, 0))
                continue
            if b == 0 and a == 1728 % p:
                if special_1728:
                    hits.append((a, 0))
                continue
            # c = j / (1728 - j)
            da, db = (1728 - a) % p, (-b) % p
            inv = pow((da * da - n * db * db) % p, -1, p)
            ia, ib = da * inv % p, -db * inv % p
            ca, cb = (a * ia + n * b * ib) % p, (a * ib + b * ia) % p
            va, vb = 0, 0
            for coeff in coeffs:
                va, vb = (va * ca + n * vb * cb + coeff) % p, (va * cb + vb * ca) % p
            if va == 0 and vb == 0:
                hits.append((a, b))
    return hits


def expected_supersingular_counts(p: int) -> Tuple[int, Fraction]:
    """(number of supersingular j, number of them in F_p) from the class number formulas."""
    if p < 5:
        return 1, Fraction(1)
    total = p // 12 + {1: 0, 5: 1, 7: 1, 11: 2}[p % 12]
    return total, hurwitz_class_number(4 * p) / 2


def supersingular_set(p: int, jobs: int = 1) -> SupersingularSet:
    """Scan all of F_{p^2} and group the hits into F_p roots and conjugate pairs."""
    if p < 2:
        raise InputError(f"{p} is not prime")
    if p in (2, 3):
        poly = FpPoly.x_minus(0, p)
        return SupersingularSet(p, (0,), (), poly)

    rows = list(range(p))
    if jobs > 1:
        chunks = [rows[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            hits = sorted(h for part in pool.map(_scan_rows, [p] * jobs, chunks) for h in part)
    else:
        hits = sorted(_scan_rows(p, rows))

    found = set(hits)
    for a, b in hits:
        if (a, (-b) % p) not in found:
            raise InvariantError(f"supersingular set at p = {p} is not Galois stable at {a} + {b}s")

    n = least_nonresidue(p)
    roots = tuple(a for a, b in hits if b == 0)
    pairs = sorted({
        FpPoly.from_ints([1, -2 * a, a * a - n * b * b], p)
        for a, b in hits
        if b != 0
    }, key=lambda f: f.coeffs)

    polynomial = FpPoly.from_ints([1], p)
    for r in roots:
        polynomial = polynomial * FpPoly.x_minus(r, p)
    for f in pairs:
        polynomial = polynomial * f

    total, in_fp = expected_supersingular_counts(p)
    logger.info(
        "p = %d: %d supersingular j (expected %d), %d in F_p (expected %s)",
        p, len(hits), total, len(roots), in_fp,
    )
    return SupersingularSet(p, roots, tuple(pairs), polynomial)

"""
Ibukiyama's explicit maximal orders of B_p

For a prime q = 3 (mod 8) with (-q/p) = -1 the algebra (-p, -q) is B_p, and
  p = 1 (mod 4): O(q, r)  = Z + Z(1+j)/2 + Z i(1+j)/2 + Z (r+i)j/q,  q | r^2 + p
  p = 3 (mod 4): O'(q, r) = Z + Z(1+i)/2 + Z j + Z (r+i)j/(2q),     4q | r^2 + p
are maximal orders containing i with i^2 = -p.
"""

import logging
from itertools import islice

from sympy import nextprime
from sympy.functions.combinatorial.numbers import legendre_symbol
from sympy.ntheory import isprime, sqrt_mod

from src.algebra.quaternion import QuatAlgebra
from src.errors import InputError, InvariantError, NotPrimeError
from src.lattices.gross import has_sqrt_minus_p
from src.lattices.lattice import Order, is_maximal, make_order

logger = logging.getLogger(__name__)

MAX_CANDIDATES = 64


def _candidate_q(p: int):
    q = 2
    while True:
        q = nextprime(q)
        if q % 8 == 3 and q != p and legendre_symbol((-q) % p, p) == -1:
            yield q


def _basis(A: QuatAlgebra, q: int, r: int):
    i, j = A.i, A.j
    if A.p % 4 == 1:
        return [A.one, (1 + j) / 2, i * (1 + j) / 2, (r + i) * j / q]
    if r % 2 == 0:
        r += q
    return [A.one, (1 + i) / 2, j, (r + i) * j / (2 * q)]


def ibukiyama_order(p: int) -> Order:
    """A maximal order of B_p containing a square root of -p."""
    if not isprime(p) or p < 3:
        raise NotPrimeError(f"{p} is not an odd prime")

    for q in islice(_candidate_q(p), MAX_CANDIDATES):
        r = sqrt_mod((-p) % q, q)
        if r is None:
            continue
        try:
            A = QuatAlgebra(p, p, q)
            order = make_order(A, _basis(A, q, int(r)))
        except InputError as exc:
            logger.warning("p = %d: q = %d rejected: %s", p, q, exc)
            continue
        if is_maximal(order) and has_sqrt_minus_p(order):
            logger.debug("p = %d: base order from q = %d, r = %d", p, q, r)
            return order
        logger.warning("p = %d: q = %d gave a non-maximal order, trying the next q", p, q)
    raise InvariantError(f"no Ibukiyama order found for p = {p}")

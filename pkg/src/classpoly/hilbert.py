"""
Hilbert class polynomials H_{-D}(X) by high-precision evaluation of j(tau)

j = E4^3 / Delta with Delta = q * prod(1 - q^n)^24, the product summed as
Euler's pentagonal series. Coefficients are rounded to integers and accepted
only once a run at doubled precision rounds to the same integers.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import mpmath

from config.settings import get_setting
from src.classpoly.forms import ReducedForm, check_discriminant, reduced_forms
from src.errors import PrecisionExhaustedError
from src.finitepoly.fppoly import FpPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassPoly:
    """Monic H_{-D} in Z[X], coefficients highest degree first."""

    D: int
    coeffs: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self):
        return str(_signed_terms(self.coeffs))


def _signed_terms(coeffs: Sequence[int]) -> str:
    n = len(coeffs) - 1
    out = ""
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        e = n - i
        power = "" if e == 0 else ("X" if e == 1 else f"X^{e}")
        magnitude = abs(c)
        body = power if (magnitude == 1 and power) else f"{magnitude}{power}"
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out or "0"


def precision_bits(D: int, forms: Sequence[ReducedForm]) -> int:
    """Size bound for the coefficients of H_{-D} in bits."""
    size = math.pi * math.sqrt(D) * sum(1.0 / f.a for f in forms) / math.log(2)
    return math.ceil(size)


def _sigma3_table(n: int) -> List[int]:
    sigma = [0] * (n + 1)
    for d in range(1, n + 1):
        cube = d ** 3
        for m in range(d, n + 1, d):
            sigma[m] += cube
    return sigma


def _pentagonal_exponents(n: int) -> List[Tuple[int, int]]:
    """(sign, k(3k-1)/2) for all generalized pentagonal numbers up to n."""
    out = [(1, 0)]
    k = 1
    while True:
        sign = -1 if k % 2 else 1
        lo, hi = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
        if lo > n:
            return out
        out.append((sign, lo))
        if hi <= n:
            out.append((sign, hi))
        k += 1


def j_invariant(form: ReducedForm, D: int) -> mpmath.mpc:
    """j((-b + sqrt(-D)) / 2a) at the current mpmath precision."""
    tau = mpmath.mpc(-form.b, mpmath.sqrt(D)) / (2 * form.a)
    q = mpmath.exp(2 * mpmath.pi * mpmath.mpc(0, 1) * tau)
    decay = math.pi * math.sqrt(D) / form.a
    terms = int((mpmath.mp.prec + 32) * math.log(2) / decay) + 8

    powers = [mpmath.mpc(1)]
    for _ in range(terms):
        powers.append(powers[-1] * q)

    sigma = _sigma3_table(terms)
    e4 = 1 + 240 * mpmath.fsum(sigma[n] * powers[n] for n in range(1, terms + 1))
    eta = mpmath.fsum(sign * powers[e] for sign, e in _pentagonal_exponents(terms))
    delta = q * eta ** 24
    return e4 ** 3 / delta


def cm_j_invariants(D: int, bits: int) -> List[mpmath.mpc]:
    """Numerical roots of H_{-D} at the given working precision."""
    forms = reduced_forms(D)
    with mpmath.workprec(bits):
        return [j_invariant(f, D) for f in forms]


def _expand(D: int, bits: int) -> Tuple[int, ...]:
    with mpmath.workprec(bits):
        poly = [mpmath.mpc(1)]
        for j in cm_j_invariants(D, bits):
            shifted = poly + [mpmath.mpc(0)]
            for i in range(1, len(shifted)):
                shifted[i] -= j * poly[i - 1]
            poly = shifted
        return tuple(int(mpmath.nint(c.real)) for c in poly)


def hilbert_class_poly(D: int) -> ClassPoly:
    """Compute H_{-D} exactly.

    Raises:
        PrecisionExhaustedError: if the doubled-precision check keeps failing
    """
    check_discriminant(D)
    forms = reduced_forms(D)
    bits = precision_bits(D, forms) + get_setting("precision_margin_bits")
    logger.debug("H_{-%d}: h = %d, starting at %d bits", D, len(forms), bits)

    previous = _expand(D, bits)
    for _ in range(get_setting("precision_retries")):
        bits *= 2
        current = _expand(D, bits)
        if current == previous:
            return ClassPoly(D, current)
        logger.info("H_{-%d}: coefficients moved at %d bits, retrying", D, bits)
        previous = current
    raise PrecisionExhaustedError(f"H_{{-{D}}} did not stabilise up to {bits} bits")


def reduce_mod_p(H: ClassPoly, p: int) -> FpPoly:
    return FpPoly.from_ints(H.coeffs, p).monic()

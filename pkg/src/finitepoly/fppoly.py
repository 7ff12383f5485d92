"""
Dense polynomials over F_p

Thin value type over sympy's galoistools; coefficients are stored highest
degree first, like the gf_* routines expect.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_diff,
    gf_div,
    gf_eval,
    gf_from_int_poly,
    gf_gcd,
    gf_monic,
    gf_mul,
    gf_pow_mod,
    gf_sqf_p,
    gf_strip,
    gf_sub,
)

from src.errors import ModulusMismatchError


def _ints(coeffs: Iterable) -> Tuple[int, ...]:
    return tuple(int(c) for c in coeffs)


@dataclass(frozen=True)
class FpPoly:
    """A polynomial over F_p; the zero polynomial has no coefficients."""

    p: int
    coeffs: Tuple[int, ...]

    @classmethod
    def from_ints(cls, coeffs: Sequence[int], p: int) -> "FpPoly":
        """Reduce integer coefficients (highest degree first) mod p."""
        return cls(p, _ints(gf_from_int_poly(list(coeffs), p)))

    @classmethod
    def zero(cls, p: int) -> "FpPoly":
        return cls(p, ())

    @classmethod
    def x_minus(cls, root: int, p: int) -> "FpPoly":
        return cls.from_ints([1, -root], p)

    def _check(self, other: "FpPoly"):
        if other.p != self.p:
            raise ModulusMismatchError(f"polynomials over F_{self.p} and F_{other.p}")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def monic(self) -> "FpPoly":
        return FpPoly(self.p, _ints(gf_monic(list(self.coeffs), self.p, ZZ)[1]))

    def __add__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        return FpPoly(self.p, _ints(gf_add(list(self.coeffs), list(other.coeffs), self.p, ZZ)))

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        return FpPoly(self.p, _ints(gf_sub(list(self.coeffs), list(other.coeffs), self.p, ZZ)))

    def __mul__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        return FpPoly(self.p, _ints(gf_mul(list(self.coeffs), list(other.coeffs), self.p, ZZ)))

    def __divmod__(self, other: "FpPoly") -> Tuple["FpPoly", "FpPoly"]:
        self._check(other)
        q, r = gf_div(list(self.coeffs), list(other.coeffs), self.p, ZZ)
        return FpPoly(self.p, _ints(q)), FpPoly(self.p, _ints(r))

    def __floordiv__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[1]

    def divides(self, other: "FpPoly") -> bool:
        return (other % self).is_zero()

    def evaluate(self, a: int) -> int:
        return int(gf_eval(list(self.coeffs), a % self.p, self.p, ZZ))

    def is_squarefree(self) -> bool:
        return bool(gf_sqf_p(list(self.coeffs), self.p, ZZ))

    def pow_mod(self, n: int, modulus: "FpPoly") -> "FpPoly":
        self._check(modulus)
        return FpPoly(self.p, _ints(gf_pow_mod(list(self.coeffs), n, list(modulus.coeffs), self.p, ZZ)))

    def multiplicity(self, factor: "FpPoly") -> int:
        """Largest m with factor^m dividing self (self must be nonzero)."""
        self._check(factor)
        m, rest = 0, self
        while True:
            q, r = divmod(rest, factor)
            if not r.is_zero():
                return m
            m, rest = m + 1, q

    def roots(self) -> List[int]:
        """Distinct roots in F_p, sorted; intended for small p."""
        return [a for a in range(self.p) if self.evaluate(a) == 0]

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        degree = self.degree
        for i, c in enumerate(self.coeffs):
            e = degree - i
            if c == 0:
                continue
            if e == 0:
                body = str(c)
            else:
                power = "X" if e == 1 else f"X^{e}"
                body = power if c == 1 else f"{c}{power}"
            terms.append(body)
        return " + ".join(terms)


@dataclass(frozen=True)
class JOutcome:
    """Either a root j in F_p or the minimal polynomial of a conjugate pair."""

    minpoly: FpPoly
    root: Optional[int] = None

    @property
    def is_pair(self) -> bool:
        return self.root is None

    @property
    def p(self) -> int:
        return self.minpoly.p

    def describe(self) -> str:
        if self.root is not None:
            return f"X - {self.root} (mod {self.p})"
        return f"{self.minpoly} (mod {self.p})"


def poly_gcd(*polys: FpPoly) -> FpPoly:
    """Monic gcd of any number of polynomials; gcd(0, f) = monic(f)."""
    result = polys[0]
    for f in polys[1:]:
        result._check(f)
        result = FpPoly(result.p, _ints(gf_gcd(list(result.coeffs), list(f.coeffs), result.p, ZZ)))
    return result.monic()


def derivative(f: FpPoly, k: int = 1) -> FpPoly:
    """The k-th formal derivative; k = 0 returns f."""
    coeffs = list(f.coeffs)
    for _ in range(k):
        coeffs = gf_diff(coeffs, f.p, ZZ)
    return FpPoly(f.p, _ints(gf_strip(coeffs)))


def is_square_mod_p(a: int, p: int) -> bool:
    """Euler's criterion; 0 counts as a square."""
    a %= p
    return a == 0 or pow(a, (p - 1) // 2, p) == 1


def classify_output(g: FpPoly) -> Optional[JOutcome]:
    """Linear -> root, irreducible quadratic -> pair, anything else -> None."""
    if g.degree == 1:
        g = g.monic()
        return JOutcome(g, root=(-g.coeffs[1]) % g.p)
    if g.degree == 2:
        g = g.monic()
        _, b, c = g.coeffs
        if not is_square_mod_p(b * b - 4 * c, g.p):
            return JOutcome(g)
    return None


def frobenius_part(g: FpPoly) -> FpPoly:
    """gcd(g, X^p - X): the part of g that splits into distinct F_p roots."""
    p = g.p
    if g.degree < 1:
        return g.monic()
    x = FpPoly(p, (1, 0))
    xp = x.pow_mod(p, g)
    return poly_gcd(g, xp - x)

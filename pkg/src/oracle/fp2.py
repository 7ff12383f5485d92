"""
The field F_{p^2} = F_p(s) with s^2 equal to the least quadratic non-residue
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from src.errors import InputError, ModulusMismatchError
from src.finitepoly.fppoly import is_square_mod_p


@lru_cache(maxsize=None)
def least_nonresidue(p: int) -> int:
    n = 2
    while is_square_mod_p(n, p):
        n += 1
    return n


@dataclass(frozen=True)
class Fp2Elem:
    """a + b s with s^2 = least_nonresidue(p)."""

    a: int
    b: int
    p: int

    @classmethod
    def of(cls, a: int, b: int, p: int) -> "Fp2Elem":
        return cls(a % p, b % p, p)

    @property
    def n(self) -> int:
        return least_nonresidue(self.p)

    def _lift(self, other: Union["Fp2Elem", int]) -> "Fp2Elem":
        if isinstance(other, Fp2Elem):
            if other.p != self.p:
                raise ModulusMismatchError(f"F_{self.p}^2 and F_{other.p}^2 elements mixed")
            return other
        return Fp2Elem.of(other, 0, self.p)

    def in_base_field(self) -> bool:
        return self.b == 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __add__(self, other):
        o = self._lift(other)
        return Fp2Elem.of(self.a + o.a, self.b + o.b, self.p)

    __radd__ = __add__

    def __neg__(self):
        return Fp2Elem.of(-self.a, -self.b, self.p)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        p = self.p
        return Fp2Elem.of(self.a * o.a + self.n * self.b * o.b, self.a * o.b + self.b * o.a, p)

    __rmul__ = __mul__

    def norm(self) -> int:
        return (self.a * self.a - self.n * self.b * self.b) % self.p

    def inverse(self) -> "Fp2Elem":
        if self.is_zero():
            raise InputError("zero has no inverse")
        inv = pow(self.norm(), -1, self.p)
        return Fp2Elem.of(self.a * inv, -self.b * inv, self.p)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __pow__(self, e: int):
        result = Fp2Elem(1, 0, self.p)
        base = self
        if e < 0:
            base, e = base.inverse(), -e
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self) -> "Fp2Elem":
        """x -> x^p, which sends s to -s."""
        return Fp2Elem.of(self.a, -self.b, self.p)

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*s"

"""
Exact arithmetic in the definite quaternion algebra B_p = Q<i, j>
with i^2 = -a, j^2 = -b and k = ij = -ji
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, Tuple, Union

from sympy import oo, primefactors
from sympy.functions.combinatorial.numbers import legendre_symbol
from sympy.ntheory import isprime

from src.errors import AlgebraMismatchError, InputError, NotPrimeError

Rat = Fraction
Scalar = Union[int, Fraction]
Place = Union[int, type(oo)]


def _p_split(n: int, ell: int) -> Tuple[int, int]:
    """Write n = ell^v * u with u prime to ell and return (v, u)."""
    v = 0
    while n % ell == 0:
        n //= ell
        v += 1
    return v, n


def _eps(u: int) -> int:
    return ((u - 1) // 2) % 2


def _omega(u: int) -> int:
    return ((u * u - 1) // 8) % 2


def hilbert_symbol(a: int, b: int, ell: Place) -> int:
    """Hilbert symbol (a, b) over Q_ell.

    Args:
        a: Nonzero integer
        b: Nonzero integer
        ell: A prime number or sympy's ``oo`` for the real place

    Returns:
        +1 if z^2 = a x^2 + b y^2 has a nontrivial solution over Q_ell, else -1
    """
    if a == 0 or b == 0:
        raise InputError("Hilbert symbol needs nonzero arguments")

    if ell == oo:
        return -1 if a < 0 and b < 0 else 1

    if not isprime(ell):
        raise NotPrimeError(f"{ell} is not prime")

    alpha, u = _p_split(a, ell)
    beta, v = _p_split(b, ell)

    if ell == 2:
        exponent = _eps(u) * _eps(v) + alpha * _omega(v) + beta * _omega(u)
        return -1 if exponent % 2 else 1

    sign = -1 if (alpha * beta * (ell - 1) // 2) % 2 else 1
    if beta % 2:
        sign *= int(legendre_symbol(u % ell, ell))
    if alpha % 2:
        sign *= int(legendre_symbol(v % ell, ell))
    return sign


def ramified_places(a: int, b: int) -> FrozenSet[Place]:
    """Places where the algebra (-a, -b) does not split."""
    candidates = {2, oo} | set(primefactors(a * b))
    return frozenset(ell for ell in candidates if hilbert_symbol(-a, -b, ell) == -1)


@dataclass(frozen=True)
class QuatAlgebra:
    """The algebra (-a, -b)_Q, declared as B_p.

    Args:
        p: The finite ramified prime
        a: i^2 = -a
        b: j^2 = -b
    """

    p: int
    a: int
    b: int

    def __post_init__(self):
        if not isprime(self.p):
            raise NotPrimeError(f"{self.p} is not prime")
        if self.a <= 0 or self.b <= 0:
            raise InputError(f"algebra ({-self.a}, {-self.b}) is not definite")
        ramified = ramified_places(self.a, self.b)
        if ramified != frozenset({self.p, oo}):
            found = ", ".join(sorted(str(ell) for ell in ramified))
            raise InputError(
                f"algebra ({-self.a}, {-self.b}) ramifies at {{{found}}}, not at {{{self.p}, oo}}"
            )

    def element(self, t: Scalar = 0, x: Scalar = 0, y: Scalar = 0, z: Scalar = 0) -> "Quat":
        return Quat(self, (Fraction(t), Fraction(x), Fraction(y), Fraction(z)))

    def from_coeffs(self, coeffs: Iterable[Scalar]) -> "Quat":
        t, x, y, z = coeffs
        return self.element(t, x, y, z)

    @property
    def one(self) -> "Quat":
        return self.element(1)

    @property
    def i(self) -> "Quat":
        return self.element(0, 1)

    @property
    def j(self) -> "Quat":
        return self.element(0, 0, 1)

    @property
    def k(self) -> "Quat":
        return self.element(0, 0, 0, 1)

    def norm_weights(self) -> Tuple[int, int, int, int]:
        """Diagonal of the norm form on (1, i, j, k)."""
        return (1, self.a, self.b, self.a * self.b)


@dataclass(frozen=True)
class Quat:
    """An element t + x i + y j + z k of a QuatAlgebra."""

    algebra: QuatAlgebra
    coeffs: Tuple[Fraction, Fraction, Fraction, Fraction]

    def _check(self, other: "Quat"):
        if other.algebra != self.algebra:
            raise AlgebraMismatchError("quaternions belong to different algebras")

    def __add__(self, other):
        if not isinstance(other, Quat):
            return self + self.algebra.element(other)
        self._check(other)
        return Quat(self.algebra, tuple(u + v for u, v in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Quat(self.algebra, tuple(-u for u in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Quat):
            return mul(self, other)
        c = Fraction(other)
        return Quat(self.algebra, tuple(u * c for u in self.coeffs))

    def __rmul__(self, other):
        c = Fraction(other)
        return Quat(self.algebra, tuple(c * u for u in self.coeffs))

    def __truediv__(self, other):
        c = Fraction(other)
        return Quat(self.algebra, tuple(u / c for u in self.coeffs))

    def trace(self) -> Fraction:
        return 2 * self.coeffs[0]

    def norm(self) -> Fraction:
        return sum(w * u * u for w, u in zip(self.algebra.norm_weights(), self.coeffs))

    def conj(self) -> "Quat":
        t, x, y, z = self.coeffs
        return Quat(self.algebra, (t, -x, -y, -z))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        terms = []
        for coeff, unit in zip(self.coeffs, ("", "i", "j", "k")):
            if coeff == 0:
                continue
            if unit and abs(coeff) == 1:
                body = unit
            else:
                body = f"{abs(coeff)}{'*' + unit if unit else ''}"
            terms.append(("-" if coeff < 0 else "+", body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def mul(u: Quat, v: Quat) -> Quat:
    """Product in B_p using i^2 = -a, j^2 = -b, ij = -ji = k."""
    u._check(v)
    a, b = u.algebra.a, u.algebra.b
    t1, x1, y1, z1 = u.coeffs
    t2, x2, y2, z2 = v.coeffs
    return Quat(
        u.algebra,
        (
            t1 * t2 - a * x1 * x2 - b * y1 * y2 - a * b * z1 * z2,
            t1 * x2 + x1 * t2 + b * (y1 * z2 - z1 * y2),
            t1 * y2 + y1 * t2 - a * (x1 * z2 - z1 * x2),
            t1 * z2 + z1 * t2 + x1 * y2 - y1 * x2,
        ),
    )


def trace_pairing(u: Quat, v: Quat) -> Fraction:
    """Tr(u * conj(v)), computed from the diagonal norm form."""
    u._check(v)
    return 2 * sum(w * s * t for w, s, t in zip(u.algebra.norm_weights(), u.coeffs, v.coeffs))


def ramified_primes(algebra: QuatAlgebra) -> FrozenSet[Place]:
    """Set of places (primes and oo) where the algebra is ramified."""
    return ramified_places(algebra.a, algebra.b)

"""
Rank-4 lattices and orders in B_p
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import isqrt
from typing import Iterable, List, Optional, Sequence, Tuple

from src.algebra.quaternion import Quat, QuatAlgebra, trace_pairing
from src.errors import InputError, MissingOneError, NonIntegralError, NotARingError
from src.lattices.linalg import determinant, echelon_coordinates, rational_hnf


@dataclass(frozen=True)
class QuatLattice:
    """A full-rank Z-lattice in B_p, stored as its canonical form (d, H).

    Two QuatLattice values are equal iff they describe the same lattice.
    """

    algebra: QuatAlgebra
    denominator: int
    hnf: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_generators(cls, algebra: QuatAlgebra, gens: Iterable[Quat]) -> "QuatLattice":
        gens = list(gens)
        for g in gens:
            if g.algebra != algebra:
                raise InputError("generator outside the algebra")
        d, hnf = rational_hnf([g.coeffs for g in gens])
        if len(hnf) != 4:
            raise InputError(f"generators span a rank-{len(hnf)} lattice, expected rank 4")
        return cls(algebra, d, hnf)

    @property
    def basis(self) -> Tuple[Quat, ...]:
        return tuple(self.algebra.from_coeffs(Fraction(x, self.denominator) for x in row) for row in self.hnf)

    def coordinates(self, q: Quat) -> List[Fraction]:
        coords = echelon_coordinates(self.hnf, self.denominator, q.coeffs)
        if coords is None:
            raise InputError("element outside the rational span")
        return coords

    def contains(self, q: Quat) -> bool:
        return all(c.denominator == 1 for c in self.coordinates(q))

    def element(self, coords: Sequence[int]) -> Quat:
        total = self.algebra.element()
        for c, b in zip(coords, self.basis):
            if c:
                total = total + b * c
        return total

    def trace_gram(self) -> List[List[Fraction]]:
        """Tr(e_s * conj(e_t)) on the canonical basis."""
        basis = self.basis
        return [[trace_pairing(u, v) for v in basis] for u in basis]

    def discriminant(self) -> int:
        """D(L) = |det(Tr(e_s e_t))| for an integral lattice."""
        basis = self.basis
        det = determinant([[(u * v).trace() for v in basis] for u in basis])
        if det.denominator != 1:
            raise NonIntegralError("trace form is not integral")
        return abs(det.numerator)

    def __str__(self):
        return "<" + ", ".join(str(b) for b in self.basis) + ">"


@dataclass(frozen=True)
class Order:
    """A verified order: contains 1, closed under products, integral."""

    lattice: QuatLattice
    disc: int

    @property
    def algebra(self) -> QuatAlgebra:
        return self.lattice.algebra

    @property
    def p(self) -> int:
        return self.lattice.algebra.p

    @property
    def basis(self) -> Tuple[Quat, ...]:
        return self.lattice.basis

    def contains(self, q: Quat) -> bool:
        return self.lattice.contains(q)

    def element(self, coords: Sequence[int]) -> Quat:
        return self.lattice.element(coords)

    def reduced_discriminant(self) -> Optional[int]:
        root = isqrt(self.disc)
        return root if root * root == self.disc else None


def make_order(algebra: QuatAlgebra, basis: Iterable[Quat]) -> Order:
    """Check the ring axioms on a rank-4 lattice and wrap it as an Order.

    Args:
        algebra: The ambient B_p
        basis: Generators of the lattice (at least 4)

    Returns:
        The verified Order with its discriminant D = |det(Tr(e_s e_t))|
    """
    lattice = QuatLattice.from_generators(algebra, basis)

    if not lattice.contains(algebra.one):
        raise MissingOneError("1 is not in the lattice")

    elements = lattice.basis
    for u, v in combinations_with_replacement(elements, 2):
        for product in (u * v, v * u):
            if not lattice.contains(product):
                raise NotARingError(f"product {product} of basis elements leaves the lattice")

    for u in elements:
        if u.trace().denominator != 1 or u.norm().denominator != 1:
            raise NonIntegralError(f"basis element {u} has non-integral trace or norm")
    for u, v in combinations_with_replacement(elements, 2):
        if trace_pairing(u, v).denominator != 1:
            raise NonIntegralError(f"Tr({u} * conj({v})) is not integral")

    return Order(lattice, lattice.discriminant())


def is_maximal(order: Order) -> bool:
    """A maximal order of B_p is exactly one with D(O) = p^2."""
    return order.disc == order.p ** 2

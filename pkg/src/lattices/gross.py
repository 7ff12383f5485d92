"""
The Gross lattice O^T = {2x - Tr(x) : x in O} and other ternary lattices

Covers successive minima, theta and optimal theta counts, reconstruction of
O from O^T, and the trace-zero sublattice O ∩ B_p^0.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import gcd, isqrt
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from src.algebra.quaternion import Quat, trace_pairing
from src.errors import InputError, InvariantError, NotAnOrderError
from src.lattices.enumeration import (
    Coords,
    norm_stream,
    quadratic_norm,
    short_vectors,
    sorted_short_vectors,
)
from src.lattices.lattice import Order, is_maximal, make_order
from src.lattices.linalg import determinant, echelon_coordinates, hermite_normal_form, lll_reduce, rational_hnf

logger = logging.getLogger(__name__)

Gram = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class TernaryLattice:
    """A rank-3 lattice given by its Gram matrix Tr(v_s * conj(v_t)).

    gens is None for abstract lattices that are only known through their
    Gram matrix; otherwise gens is in Hermite normal form (see from_generators).
    """

    gram: Gram
    gens: Optional[Tuple[Quat, ...]] = None

    @classmethod
    def from_gram(cls, gram: Sequence[Sequence[int]]) -> "TernaryLattice":
        return cls(tuple(tuple(int(x) for x in row) for row in gram))

    @classmethod
    def from_generators(cls, gens: Iterable[Quat]) -> "TernaryLattice":
        gens = list(gens)
        algebra = gens[0].algebra
        d, hnf = rational_hnf([g.coeffs for g in gens])
        if len(hnf) != 3:
            raise InputError(f"generators span a rank-{len(hnf)} lattice, expected rank 3")
        basis = tuple(algebra.from_coeffs(Fraction(x, d) for x in row) for row in hnf)
        gram = [[trace_pairing(u, v) for v in basis] for u in basis]
        if any(x.denominator != 1 for row in gram for x in row):
            raise InputError("trace pairing is not integral on these generators")
        return cls(tuple(tuple(int(x) for x in row) for row in gram), basis)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def determinant(self) -> int:
        return int(determinant(self.gram))

    def norm(self, coords: Sequence[int]) -> Fraction:
        return quadratic_norm(self.gram, coords)

    def pairing(self, c1: Sequence[int], c2: Sequence[int]) -> int:
        """Tr(x * conj(y)) for coordinate vectors of x and y."""
        n = self.rank
        return sum(c1[s] * c2[t] * self.gram[s][t] for s in range(n) for t in range(n))

    def element(self, coords: Sequence[int]) -> Quat:
        if self.gens is None:
            raise InputError("abstract lattice has no quaternion generators")
        total = self.gens[0].algebra.element()
        for c, g in zip(coords, self.gens):
            if c:
                total = total + g * c
        return total

    @cached_property
    def _frame(self):
        return rational_hnf([g.coeffs for g in self.gens])

    def coordinates(self, q: Quat) -> Optional[List[Fraction]]:
        """Coordinates of q on gens, or None if q is not in the Q-span."""
        d, hnf = self._frame
        return echelon_coordinates(hnf, d, q.coeffs)

    def contains(self, q: Quat) -> bool:
        coords = self.coordinates(q)
        return coords is not None and all(c.denominator == 1 for c in coords)


@dataclass(frozen=True)
class GrossLattice(TernaryLattice):
    """O^T together with the order it came from."""

    parent: Optional[Order] = field(default=None, compare=False)


@dataclass(frozen=True)
class MinimaTriple:
    """Successive minima D1 <= D2 <= D3 with witnesses, mu normalised to (-1, 0]."""

    D1: int
    D2: int
    D3: int
    x: Coords
    y: Coords
    z: Coords
    mu: Fraction
    witnesses: Optional[Tuple[Quat, Quat, Quat]] = None

    @property
    def product(self) -> int:
        return self.D1 * self.D2 * self.D3

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.D1, self.D2, self.D3)


@dataclass(frozen=True)
class ThetaTable:
    """theta[k] and theta_opt[k] for 0 <= k <= bound (index 0 unused)."""

    bound: int
    theta: Tuple[int, ...]
    theta_opt: Tuple[int, ...]

    def count(self, k: int) -> int:
        return self.theta[k] if 0 < k <= self.bound else 0

    def optimal(self, k: int) -> int:
        return self.theta_opt[k] if 0 < k <= self.bound else 0

    def represents_optimally(self, k: int) -> bool:
        return self.optimal(k) > 0

    def fingerprint(self) -> Tuple[int, ...]:
        return self.theta[1:]

    def is_consistent(self) -> bool:
        """theta(k) = sum over c^2 | k of theta_opt(k / c^2)."""
        for k in range(1, self.bound + 1):
            total = 0
            c = 1
            while c * c <= k:
                if k % (c * c) == 0:
                    total += self.theta_opt[k // (c * c)]
                c += 1
            if total != self.theta[k]:
                return False
        return True

    def dominated_by(self, other: "ThetaTable", bound: Optional[int] = None) -> bool:
        """True if theta_opt(m) <= other.theta_opt(m) for all m <= bound."""
        bound = min(bound or self.bound, self.bound, other.bound)
        return all(self.theta_opt[m] <= other.theta_opt[m] for m in range(1, bound + 1))


def _content(coords: Sequence[int]) -> int:
    g = 0
    for c in coords:
        g = gcd(g, c)
    return g


def is_primitive(coords: Sequence[int]) -> bool:
    return _content(coords) == 1


def gross_lattice(order: Order) -> GrossLattice:
    """O^T, spanned by v = 2u - Tr(u) over the basis u of O.

    Any basis works: x -> 2x - Tr(x) is Z-linear and kills 1, so the images
    of a basis {1, u1, u2, u3} (or of any other basis) span the same lattice.
    """
    images = [2 * u - u.trace() for u in order.basis]
    lattice = TernaryLattice.from_generators(images)
    return GrossLattice(lattice.gram, lattice.gens, parent=order)


def enumerate_by_norm(lattice: TernaryLattice, bound) -> List[Tuple[Coords, Fraction]]:
    """Vectors with 0 < Nr <= bound, one per +/- pair, sorted by (norm, coords)."""
    return sorted_short_vectors(lattice.gram, bound)


def primitive_stream(lattice: TernaryLattice, cap, start=None) -> Iterator[Tuple[Coords, int]]:
    """Primitive vectors in (norm, coords) order, lazily, up to norm cap."""
    if start is None:
        _, reduced = lll_reduce(lattice.gram)
        start = max(reduced[i][i] for i in range(lattice.rank)) // 2
    for coords, norm in norm_stream(lattice.gram, start, cap):
        if is_primitive(coords):
            yield coords, int(norm)


def _rank(rows: Sequence[Sequence[int]]) -> int:
    return len(hermite_normal_form(rows))


def successive_minima(lattice: TernaryLattice) -> MinimaTriple:
    """D1 <= D2 <= D3 with independent witnesses x, y, z.

    The search radius is the largest norm of an LLL-reduced basis vector,
    which already holds three independent vectors.
    """
    _, reduced = lll_reduce(lattice.gram)
    bound = Fraction(max(reduced[i][i] for i in range(lattice.rank)), 2)
    chosen: List[Tuple[Coords, Fraction]] = []
    for coords, norm in enumerate_by_norm(lattice, bound):
        if _rank([c for c, _ in chosen] + [coords]) == len(chosen) + 1:
            chosen.append((coords, norm))
            if len(chosen) == lattice.rank:
                break

    (x, d1), (y, d2), (z, d3) = chosen
    mu = Fraction(lattice.pairing(x, y), int(d1))
    if mu > 0:
        y = tuple(-c for c in y)
        mu = -mu

    witnesses = None
    if lattice.gens is not None:
        witnesses = (lattice.element(x), lattice.element(y), lattice.element(z))
    return MinimaTriple(int(d1), int(d2), int(d3), x, y, z, mu, witnesses)


def theta_table(lattice: TernaryLattice, bound: int) -> ThetaTable:
    """Counts of +/- classes (and primitive ones) of each norm up to bound."""
    theta = [0] * (bound + 1)
    theta_opt = [0] * (bound + 1)
    for coords, norm in short_vectors(lattice.gram, bound):
        k = int(norm)
        theta[k] += 1
        if is_primitive(coords):
            theta_opt[k] += 1
    return ThetaTable(bound, tuple(theta), tuple(theta_opt))


def reconstruct_order(lattice: Union[TernaryLattice, Sequence[Quat]]) -> Order:
    """Recover the maximal order O from O^T.

    O is the set of x in 1/2<1, O^T> with integral norm. Integrality of the
    norm only depends on the class of x modulo <1, O^T>, so O is spanned by
    <1, O^T> and the good representatives (c0 + sum c_i v_i)/2, c in {0,1}^4.
    """
    if not isinstance(lattice, TernaryLattice):
        lattice = TernaryLattice.from_generators(lattice)
    if lattice.gens is None:
        raise NotAnOrderError("cannot reconstruct an order from an abstract Gram matrix")

    algebra = lattice.gens[0].algebra
    p = algebra.p
    if lattice.determinant() != 32 * p * p:
        raise NotAnOrderError(f"det of the Gram matrix is {lattice.determinant()}, expected 32p^2 = {32 * p * p}")

    generators = [algebra.one, *lattice.gens]
    for c in product((0, 1), repeat=4):
        if not any(c):
            continue
        x = algebra.element(c[0])
        for ci, v in zip(c[1:], lattice.gens):
            if ci:
                x = x + v
        x = x / 2
        if x.norm().denominator == 1:
            generators.append(x)

    try:
        order = make_order(algebra, generators)
    except InputError as exc:
        raise NotAnOrderError(f"candidate set is not an order: {exc}") from exc
    if not is_maximal(order):
        raise NotAnOrderError(f"candidate order has discriminant {order.disc}, expected {p * p}")
    if gross_lattice(order)._frame != lattice._frame:
        raise NotAnOrderError("reconstructed order has a different Gross lattice")
    return order


def trace_zero_sublattice(order: Order) -> TernaryLattice:
    """O ∩ B_p^0, spanned by O^T and the halves of O^T that lie in O."""
    gross = gross_lattice(order)
    generators = list(gross.gens)
    for c in product((0, 1), repeat=3):
        if not any(c):
            continue
        w = gross.element(c) / 2
        if order.contains(w):
            generators.append(w)
    return TernaryLattice.from_generators(generators)


def trace_zero_index(order: Order) -> int:
    """[O ∩ B_p^0 : O^T]."""
    outer = trace_zero_sublattice(order).determinant()
    inner = gross_lattice(order).determinant()
    if inner % outer:
        raise InvariantError("O^T is not a sublattice of O ∩ B_p^0")
    root = isqrt(inner // outer)
    if root * root != inner // outer:
        raise InvariantError("determinant ratio is not a square")
    return root


def has_sqrt_minus_p(order: Order) -> bool:
    """True iff O holds a trace-zero element of norm p, i.e. some w with w^2 = -p."""
    p = order.p
    lattice = trace_zero_sublattice(order)
    return any(norm == p for _, norm in short_vectors(lattice.gram, p))


def schiemann_bound(minima: MinimaTriple) -> int:
    """Equal theta series up to 3 * D3 force equal type."""
    return 3 * minima.D3


def hermite_bounds_hold(minima: MinimaTriple, p: int) -> bool:
    """det(O^T) <= D1 D2 D3 < 2 det(O^T) with det(O^T) = 4p^2."""
    return 4 * p * p <= minima.product < 8 * p * p

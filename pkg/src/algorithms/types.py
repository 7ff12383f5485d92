"""
Enumeration of the maximal order types of B_p

Breadth-first search over ell-neighbours starting at the Ibukiyama order.
Two orders are taken to be of the same type when the theta series of their
Gross lattices agree up to fingerprint_factor * p. The search stops once the
Eichler mass over ideal classes is reached:

    sum_i w_i / |O_i^x| = (p - 1) / 24,

where w_i = 1 if O_i contains a square root of -p and w_i = 2 otherwise.
"""

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from config import get_setting
from src.algorithms.ibukiyama import ibukiyama_order
from src.algorithms.neighbors import neighbors
from src.algorithms.units import UnitGroup, unit_group
from src.errors import MassMismatchError
from src.lattices.gross import ThetaTable, gross_lattice, has_sqrt_minus_p, theta_table
from src.lattices.lattice import Order

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TypeSet:
    """Representatives of the types, sorted by theta fingerprint."""

    p: int
    orders: Tuple[Order, ...]
    theta_keys: Tuple[ThetaTable, ...]
    units: Tuple[UnitGroup, ...]
    in_fp: Tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.orders)

    @property
    def weights(self) -> Tuple[int, ...]:
        return tuple(1 if flag else 2 for flag in self.in_fp)

    @property
    def mass(self) -> Fraction:
        return sum((Fraction(w, u.size) for w, u in zip(self.weights, self.units)), Fraction(0))

    @property
    def class_number(self) -> int:
        return sum(self.weights)


def expected_mass(p: int) -> Fraction:
    return Fraction(p - 1, 24)


def class_number(types: TypeSet) -> int:
    """Number of left ideal classes of a maximal order of B_p."""
    return types.class_number


def enumerate_types(p: int, ell: Optional[int] = None, bound: Optional[int] = None) -> TypeSet:
    ell = ell or get_setting("neighbor_prime")
    bound = bound or get_setting("fingerprint_factor") * p
    target = expected_mass(p)

    found: Dict[Tuple[int, ...], Tuple[Order, ThetaTable, UnitGroup, bool]] = {}
    mass = Fraction(0)

    def visit(order: Order) -> bool:
        nonlocal mass
        table = theta_table(gross_lattice(order), bound)
        key = table.fingerprint()
        if key in found:
            return False
        units = unit_group(order)
        flag = has_sqrt_minus_p(order)
        found[key] = (order, table, units, flag)
        mass += Fraction(1 if flag else 2, units.size)
        logger.debug("p = %d: type %d, |O^x| = %d, in F_p: %s, mass %s", p, len(found), units.size, flag, mass)
        return True

    base = ibukiyama_order(p)
    visit(base)
    queue = deque([base])
    while queue and mass < target:
        order = queue.popleft()
        for neighbour in neighbors(order, ell):
            if visit(neighbour):
                queue.append(neighbour)
            if mass >= target:
                break

    if mass != target:
        raise MassMismatchError(f"p = {p}: mass of {len(found)} types is {mass}, expected {target}")

    keys = sorted(found)
    types = TypeSet(
        p,
        tuple(found[k][0] for k in keys),
        tuple(found[k][1] for k in keys),
        tuple(found[k][2] for k in keys),
        tuple(found[k][3] for k in keys),
    )
    logger.info(
        "p = %d: %d types (p/24 = %.1f), class number %d, mass %s",
        p, len(types), p / 24, types.class_number, types.mass,
    )
    return types


def type_index(types: TypeSet, order: Order) -> Optional[int]:
    """Position of the type of order in types, or None."""
    key = theta_table(gross_lattice(order), types.theta_keys[0].bound).fingerprint()
    for i, table in enumerate(types.theta_keys):
        if table.fingerprint() == key:
            return i
    return None


"""
Unit groups of definite orders
"""

from dataclasses import dataclass

from src.lattices.enumeration import short_vectors
from src.lattices.lattice import Order

# multiplicative order of a unit, keyed by its trace
_ORDER_BY_TRACE = {2: 1, -2: 2, 0: 4, 1: 6, -1: 3}


@dataclass(frozen=True)
class UnitGroup:
    """size = |O^x|; max_order = 4 points to j = 1728, 3 or 6 to j = 0."""

    size: int
    max_order: int

    @property
    def is_trivial(self) -> bool:
        return self.size == 2


def unit_group(order: Order) -> UnitGroup:
    gram = [[int(x) for x in row] for row in order.lattice.trace_gram()]
    size = 0
    max_order = 2
    for coords, norm in short_vectors(gram, 1):
        if norm != 1:
            continue
        size += 2
        trace = int(order.element(coords).trace())
        max_order = max(max_order, _ORDER_BY_TRACE[trace], _ORDER_BY_TRACE[-trace])
    return UnitGroup(size, max_order)


def unit_group_order(order: Order) -> int:
    """Number of norm-1 elements of O."""
    return unit_group(order).size

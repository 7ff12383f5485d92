"""Lattices, orders and the Gross lattice."""

from .lattice import Order, QuatLattice, is_maximal, make_order
from .enumeration import short_vectors, sorted_short_vectors
from .gross import (
    GrossLattice,
    MinimaTriple,
    TernaryLattice,
    ThetaTable,
    enumerate_by_norm,
    gross_lattice,
    has_sqrt_minus_p,
    hermite_bounds_hold,
    is_primitive,
    primitive_stream,
    reconstruct_order,
    schiemann_bound,
    successive_minima,
    theta_table,
    trace_zero_index,
    trace_zero_sublattice,
)

__all__ = [
    'Order', 'QuatLattice', 'is_maximal', 'make_order',
    'short_vectors', 'sorted_short_vectors',
    'GrossLattice', 'MinimaTriple', 'TernaryLattice', 'ThetaTable',
    'enumerate_by_norm', 'gross_lattice', 'has_sqrt_minus_p', 'hermite_bounds_hold',
    'is_primitive', 'primitive_stream', 'reconstruct_order', 'schiemann_bound',
    'successive_minima', 'theta_table', 'trace_zero_index', 'trace_zero_sublattice',
]

"""
ell-neighbours of a maximal order

The left O-ideals of norm ell are I = O alpha + O ell for the ell + 1 lines of
O / ell O = M_2(F_ell); their right orders are (1/ell) conj(I) I.
"""

from itertools import product
from typing import List

from src.errors import InputError, NotMaximalError, SplitFailureError
from src.lattices.lattice import Order, QuatLattice, is_maximal, make_order


def left_ideals(order: Order, ell: int) -> List[QuatLattice]:
    """The ell + 1 left ideals of O of reduced norm ell."""
    if order.p % ell == 0:
        raise InputError(f"ell = {ell} must be prime to p = {order.p}")
    algebra = order.algebra
    basis = order.basis
    seen = {}
    for coords in product(range(ell), repeat=4):
        if not any(coords):
            continue
        alpha = order.element(coords)
        if alpha.norm() % ell:
            continue
        gens = [e * alpha for e in basis] + [e * ell for e in basis]
        ideal = QuatLattice.from_generators(algebra, gens)
        seen.setdefault((ideal.denominator, ideal.hnf), ideal)

    if len(seen) != ell + 1:
        raise SplitFailureError(f"found {len(seen)} ideals of norm {ell}, expected {ell + 1}")
    return [seen[key] for key in sorted(seen)]


def right_order(ideal: QuatLattice, ell: int) -> Order:
    basis = ideal.basis
    gens = [a.conj() * b / ell for a in basis for b in basis]
    return make_order(ideal.algebra, gens)


def neighbors(order: Order, ell: int = 2) -> List[Order]:
    """Right orders of the left O-ideals of norm ell; all maximal."""
    if not is_maximal(order):
        raise NotMaximalError(f"order has discriminant {order.disc}, expected {order.p ** 2}")
    out = []
    for ideal in left_ideals(order, ell):
        neighbour = right_order(ideal, ell)
        if not is_maximal(neighbour):
            raise SplitFailureError(f"right order of a norm-{ell} ideal has discriminant {neighbour.disc}")
        out.append(neighbour)
    return out

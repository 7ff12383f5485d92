from fractions import Fraction

import pytest

from src.algorithms import class_number, enumerate_types
from src.algorithms.types import expected_mass, type_index
from src.lattices import gross_lattice, hermite_bounds_hold, is_maximal, successive_minima


def test_single_type_at_7(types7):
    assert len(types7) == 1
    assert types7.units[0].size == 4
    assert types7.in_fp == (True,)
    assert types7.mass == Fraction(1, 4) == expected_mass(7)
    assert class_number(types7) == 1


def test_types_at_61(types61):
    assert len(types61) == 4
    assert types61.mass == Fraction(5, 2)
    assert class_number(types61) == 5
    assert sum(types61.in_fp) == 3
    assert all(u.size == 2 for u in types61.units)
    assert all(is_maximal(order) for order in types61.orders)


def test_fingerprints_are_distinct_and_sorted(types61):
    keys = [t.fingerprint() for t in types61.theta_keys]
    assert keys == sorted(set(keys))
    assert all(t.bound == 6 * 61 for t in types61.theta_keys)


def test_example1_has_a_type(types61, example1_order):
    i = type_index(types61, example1_order)
    assert i is not None
    assert types61.in_fp[i]


@pytest.mark.parametrize("p", [3, 5, 13, 101])
def test_mass_certificate(p):
    types = enumerate_types(p)
    assert types.mass == Fraction(p - 1, 24)


@pytest.mark.slow
@pytest.mark.parametrize("p", [61, 101, 151, 199, 311])
def test_gross_lattice_invariants(p):
    for order in enumerate_types(p).orders:
        lattice = gross_lattice(order)
        assert lattice.determinant() == 32 * p * p
        assert hermite_bounds_hold(successive_minima(lattice), p)

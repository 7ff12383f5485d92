import pytest

from src.algorithms import ibukiyama_order, neighbors, unit_group, unit_group_order
from src.algorithms.neighbors import left_ideals
from src.errors import InputError, NotMaximalError, NotPrimeError
from src.lattices import gross_lattice, has_sqrt_minus_p, is_maximal, make_order, theta_table


def test_units_of_example1(example1_order):
    units = unit_group(example1_order)
    assert units.size == 2
    assert units.is_trivial
    assert unit_group_order(example1_order) == 2


def test_units_of_the_hurwitz_order(hurwitz_order):
    units = unit_group(hurwitz_order)
    assert units.size == 24
    assert units.max_order == 6


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 61, 101])
def test_ibukiyama_orders_are_maximal(p):
    order = ibukiyama_order(p)
    assert order.disc == p * p
    assert is_maximal(order)
    assert has_sqrt_minus_p(order)
    assert order.algebra.a == p


def test_ibukiyama_order_at_7_has_units_of_order_4():
    order = ibukiyama_order(7)
    assert order.disc == 49
    units = unit_group(order)
    assert units.size == 4
    assert units.max_order == 4


def test_ibukiyama_rejects_non_primes():
    with pytest.raises(NotPrimeError):
        ibukiyama_order(15)


def test_neighbors_are_maximal(example1_order):
    found = neighbors(example1_order, 2)
    assert len(found) == 3
    assert all(is_maximal(n) for n in found)
    assert len(left_ideals(example1_order, 3)) == 4


def test_neighbors_need_a_maximal_order(b61):
    A = b61
    with pytest.raises(NotMaximalError):
        neighbors(make_order(A, [A.one, A.i, A.j, A.k]), 2)


def test_neighbors_reject_ell_equal_to_p():
    with pytest.raises(InputError):
        neighbors(ibukiyama_order(7), 7)


def test_neighbors_at_7_are_all_one_type():
    base = ibukiyama_order(7)
    key = theta_table(gross_lattice(base), 42).fingerprint()
    for n in neighbors(base, 2):
        assert theta_table(gross_lattice(n), 42).fingerprint() == key

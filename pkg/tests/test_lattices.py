import pytest

from src.errors import InputError, MissingOneError, NotAnOrderError, NotARingError
from src.lattices import (
    QuatLattice,
    TernaryLattice,
    enumerate_by_norm,
    gross_lattice,
    has_sqrt_minus_p,
    hermite_bounds_hold,
    is_maximal,
    is_primitive,
    make_order,
    primitive_stream,
    reconstruct_order,
    schiemann_bound,
    short_vectors,
    successive_minima,
    theta_table,
    trace_zero_index,
)
from src.lattices.linalg import determinant

CUBIC = [[2, 0, 0], [0, 2, 0], [0, 0, 2]]


def test_example1_is_a_maximal_order(example1_order):
    assert example1_order.disc == 61 ** 2
    assert example1_order.reduced_discriminant() == 61
    assert is_maximal(example1_order)


def test_example2_is_a_maximal_order(example2_order):
    assert is_maximal(example2_order)


def test_make_order_failures(b61):
    A = b61
    with pytest.raises(MissingOneError):
        make_order(A, [A.element(2), A.i, A.j, A.k])
    with pytest.raises(NotARingError):
        make_order(A, [A.one, A.i, A.j, A.k / 2])
    with pytest.raises(InputError, match="rank"):
        make_order(A, [A.one, A.i, A.j])


def test_non_maximal_order(b61):
    A = b61
    order = make_order(A, [A.one, A.i, A.j, A.k])
    assert not is_maximal(order)
    assert order.disc == (4 * 61 * 7) ** 2


def test_lattice_equality_ignores_generators(b61):
    A = b61
    first = QuatLattice.from_generators(A, [A.one, A.i, A.j, A.k])
    second = QuatLattice.from_generators(A, [A.one + A.i, A.i, A.j - A.k, A.k, A.i * 3])
    assert first == second


def test_short_vectors_on_the_cubic_lattice():
    assert len(list(short_vectors(CUBIC, 1))) == 3
    assert len(list(short_vectors(CUBIC, 2))) == 9
    norms = [norm for _, norm in enumerate_by_norm(TernaryLattice.from_gram(CUBIC), 3)]
    assert norms == sorted(norms)
    assert norms.count(3) == 4


def test_every_vector_comes_once(example1_order):
    lattice = gross_lattice(example1_order)
    found = [coords for coords, _ in short_vectors(lattice.gram, 200)]
    assert len(found) == len(set(found))
    assert not set(found) & {tuple(-c for c in v) for v in found}


def test_gross_lattice_of_example1(example1_order):
    lattice = gross_lattice(example1_order)
    assert lattice.determinant() == 32 * 61 ** 2
    minima = successive_minima(lattice)
    assert minima.as_tuple() == (7, 35, 71)
    assert hermite_bounds_hold(minima, 61)
    assert -1 < minima.mu <= 0
    t = lattice.pairing(minima.x, minima.y)
    assert 4 * minima.D1 * minima.D2 - t * t == 16 * 61
    assert schiemann_bound(minima) == 3 * 71


def test_shortest_vector_of_example1_is_j(example1_order):
    lattice = gross_lattice(example1_order)
    minima = successive_minima(lattice)
    x = minima.witnesses[0]
    A = example1_order.algebra
    assert x in (A.j, -A.j)


def test_primitive_stream_is_sorted_and_primitive(example1_order):
    lattice = gross_lattice(example1_order)
    items = list(primitive_stream(lattice, 150))
    assert items[0][1] == 7
    assert [d for _, d in items] == sorted(d for _, d in items)
    assert all(is_primitive(c) for c, _ in items)
    assert all(d % 4 in (0, 3) for _, d in items)


def test_theta_table_consistency(example1_order):
    table = theta_table(gross_lattice(example1_order), 6 * 61)
    assert table.is_consistent()
    assert table.count(7) == table.optimal(7) == 1
    assert table.count(28) >= 1
    assert table.dominated_by(table)


def test_reconstruct_order(example1_order, example2_order):
    assert reconstruct_order(gross_lattice(example1_order)) == example1_order
    assert reconstruct_order(gross_lattice(example2_order)) == example2_order


def test_reconstruct_rejects_wrong_determinant(example1_order):
    lattice = gross_lattice(example1_order)
    with pytest.raises(NotAnOrderError):
        reconstruct_order([g * 2 for g in lattice.gens])


def test_sqrt_minus_p(example1_order, example2_order):
    assert has_sqrt_minus_p(example1_order)
    assert not has_sqrt_minus_p(example2_order)


def test_trace_zero_part_is_strictly_larger(example1_order):
    assert trace_zero_index(example1_order) > 1


def test_hand_checked_gram_determinant():
    assert determinant([[7, -1, -3], [-1, 35, -17], [-3, -17, 71]]) == 4 * 61 ** 2


def test_successive_minima_of_a_diagonal_form():
    minima = successive_minima(TernaryLattice.from_gram([[2, 0, 0], [0, 4, 0], [0, 0, 6]]))
    assert minima.as_tuple() == (1, 2, 3)
    assert minima.mu == 0

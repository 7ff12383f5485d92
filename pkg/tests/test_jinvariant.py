from fractions import Fraction

import pytest

from src.algorithms import algorithm1, ibukiyama_order, run_algorithm1
from src.algorithms.jinvariant import epsilon
from src.errors import NotMaximalError, UndecidedError
from src.finitepoly import FpPoly, classify_output, poly_gcd
from src.lattices import gross_lattice, hermite_bounds_hold, make_order, successive_minima


def test_example1(example1_order, memory_cache):
    result = algorithm1(example1_order, polys=memory_cache)
    assert result.outcome.root == 41
    assert result.outcome.minpoly == FpPoly.x_minus(41, 61)
    assert result.outcome.describe() == "X - 41 (mod 61)"
    assert [step.d for step in result.state.trace] == [7]
    first = result.state.trace[0]
    assert (first.n, first.eps, first.k, first.degree) == (1, 1, 0, 1)


def test_unit_shortcut_at_7():
    result = algorithm1(ibukiyama_order(7))
    assert result.outcome.root == 6
    assert result.state.trace == []
    assert result.reason == "units"


def test_unit_shortcut_for_j_zero():
    result = algorithm1(ibukiyama_order(5))
    assert result.outcome.root == 0


def test_budget_exhaustion_is_reported(example1_order, memory_cache):
    result = run_algorithm1(example1_order, norm_cap=5, polys=memory_cache)
    assert not result.decided
    assert result.state.n == 0
    with pytest.raises(UndecidedError) as info:
        algorithm1(example1_order, norm_cap=5, polys=memory_cache)
    assert info.value.state is not None


def test_non_maximal_order_is_rejected(b61):
    A = b61
    with pytest.raises(NotMaximalError, match="is_maximal"):
        algorithm1(make_order(A, [A.one, A.i, A.j, A.k]))


def test_epsilon():
    assert epsilon(7, 61) == 1
    assert epsilon(4 * 61, 61) == 2
    assert epsilon(61 * 3, 61) == 2
    assert epsilon(9, 61) == 1


def test_running_gcd_divides_first_class_polynomial(types61, memory_cache):
    for order in types61.orders:
        result = run_algorithm1(order, polys=memory_cache)
        first = memory_cache.mod_p(result.state.trace[0].d, 61)
        G = result.state.G
        assert G.divides(first)
        assert G.is_squarefree()


@pytest.mark.slow
def test_example2(example2_order, memory_cache):
    result = algorithm1(example2_order, polys=memory_cache)
    assert [step.d for step in result.state.trace] == [935, 1056, 1679, 2056]
    assert result.outcome.is_pair
    assert result.outcome.root is None
    assert result.state.G.coeffs == (1, 2748, 6627)
    assert str(result.outcome.minpoly) == "X^2 + 2748X + 6627"


def test_example2_minima(example2_order):
    minima = successive_minima(gross_lattice(example2_order))
    assert minima.as_tuple() == (935, 1056, 2056)
    assert hermite_bounds_hold(minima, 20063)
    # 1056 * 2056 * 2300 is past 8p^2, so those norms cannot all be minima
    assert 1056 * 2056 * 2300 >= 8 * 20063 ** 2

    A = example2_order.algebra
    w = A.element(0, Fraction(1, 64), Fraction(-11945, 512), Fraction(-71, 512))
    assert w.norm() == 935
    assert gross_lattice(example2_order).contains(w)


@pytest.mark.slow
def test_gcds_along_the_published_norm_path(memory_cache):
    p = 20063
    H1056, H2056, H2300 = (memory_cache.mod_p(d, p) for d in (1056, 2056, 2300))
    G2 = poly_gcd(H1056, H2056)
    assert G2.coeffs == (1, 8728, 8070, 5035)
    G3 = poly_gcd(G2, H2300)
    assert G3.coeffs == (1, 2748, 6627)
    assert classify_output(G3).is_pair


@pytest.mark.slow
def test_example2_class_polynomial_degrees(memory_cache):
    assert [memory_cache.get(D).degree for D in (1056, 2056, 2300)] == [16, 16, 18]

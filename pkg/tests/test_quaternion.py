import random
from fractions import Fraction

import pytest
from sympy import oo, primefactors

from src.algebra import QuatAlgebra, hilbert_symbol, ramified_places, ramified_primes, trace_pairing
from src.errors import AlgebraMismatchError, InputError, NotPrimeError


def test_ramification_of_the_worked_examples():
    assert ramified_places(61, 7) == {61, oo}
    assert ramified_places(20063, 1) == {20063, oo}
    assert ramified_places(1, 1) == {2, oo}


def test_hilbert_symbol_values():
    assert hilbert_symbol(-1, -1, oo) == -1
    assert hilbert_symbol(-1, -1, 2) == -1
    assert hilbert_symbol(-1, -1, 3) == 1
    assert hilbert_symbol(2, 3, oo) == 1
    # (-61, -7)_7 = (-61 / 7) = (2 / 7) = 1
    assert hilbert_symbol(-61, -7, 7) == 1


def test_hilbert_symbol_product_formula():
    for a, b in [(-61, -7), (-3, -5), (6, -35), (-1, -1)]:
        places = {2, oo} | set(primefactors(a * b))
        product = 1
        for ell in places:
            product *= hilbert_symbol(a, b, ell)
        assert product == 1


def test_algebra_validation():
    with pytest.raises(NotPrimeError):
        QuatAlgebra(4, 1, 1)
    with pytest.raises(InputError, match="definite"):
        QuatAlgebra(61, -61, 7)
    with pytest.raises(InputError, match="ramifies"):
        QuatAlgebra(61, 1, 1)


def test_multiplication_table(b61):
    A = b61
    i, j, k = A.i, A.j, A.k
    assert i * i == A.element(-61)
    assert j * j == A.element(-7)
    assert k * k == A.element(-61 * 7)
    assert i * j == k
    assert j * i == -k


def test_norm_trace_and_conjugate(b61):
    A = b61
    x = A.element(Fraction(1, 2), 0, Fraction(1, 2), 0)
    assert x.trace() == 1
    assert x.norm() == Fraction(1 + 7, 4)
    assert x * x.conj() == A.element(x.norm())
    assert trace_pairing(x, x) == 2 * x.norm()


def test_norm_is_multiplicative(b61):
    A = b61
    u = A.element(1, 2, -1, Fraction(1, 3))
    v = A.element(Fraction(-1, 2), 0, 3, 1)
    assert (u * v).norm() == u.norm() * v.norm()


def test_mixing_algebras_is_rejected(b61):
    other = QuatAlgebra(20063, 20063, 1)
    with pytest.raises(AlgebraMismatchError):
        b61.i * other.i


def test_ramified_primes(b61):
    assert ramified_primes(b61) == {61, oo}


def _random_quat(A, rng):
    return A.element(*(Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(4)))


def test_characteristic_equation(b61):
    rng = random.Random(5)
    for _ in range(50):
        q = _random_quat(b61, rng)
        assert q * q - q.trace() * q + q.norm() == b61.element(0)


def test_trace_pairing_is_a_positive_symmetric_bilinear_form(b61):
    rng = random.Random(11)
    for _ in range(30):
        u, v, w = (_random_quat(b61, rng) for _ in range(3))
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        assert trace_pairing(u, v) == trace_pairing(v, u)
        assert trace_pairing(c * u + w, v) == c * trace_pairing(u, v) + trace_pairing(w, v)
        if u != b61.element(0):
            assert trace_pairing(u, u) > 0


def test_ramified_places_come_in_even_number():
    rng = random.Random(3)
    for _ in range(60):
        a = rng.choice([-1, 1]) * rng.randint(1, 60)
        b = rng.choice([-1, 1]) * rng.randint(1, 60)
        assert len(ramified_places(a, b)) % 2 == 0


def test_no_deprecation_warnings_from_symbol_computations(recwarn):
    hilbert_symbol(-61, -7, 7)
    ramified_places(20063, 1)
    assert not [w for w in recwarn if issubclass(w.category, DeprecationWarning)]

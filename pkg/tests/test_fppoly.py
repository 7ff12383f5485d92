import random

import pytest

from src.errors import ModulusMismatchError
from src.finitepoly import FpPoly, JOutcome, classify_output, derivative, frobenius_part, is_square_mod_p, poly_gcd

P = 20063


def poly(coeffs, p=61):
    return FpPoly.from_ints(coeffs, p)


def test_reduction_and_degree():
    f = poly([62, -1, 122])
    assert f.coeffs == (1, 60, 0)
    assert f.degree == 2
    assert FpPoly.zero(61).degree == -1
    assert poly([0, 0, 5]).degree == 0


def test_printing():
    assert str(poly([1, 2748, 6627], P)) == "X^2 + 2748X + 6627"
    assert str(FpPoly.x_minus(41, 61)) == "X + 20"
    assert str(FpPoly.zero(61)) == "0"


def test_arithmetic():
    f = FpPoly.x_minus(1, 61) * FpPoly.x_minus(2, 61)
    assert f == poly([1, -3, 2])
    q, r = divmod(f, FpPoly.x_minus(1, 61))
    assert q == FpPoly.x_minus(2, 61)
    assert r.is_zero()
    assert FpPoly.x_minus(2, 61).divides(f)
    assert f.evaluate(2) == 0
    assert f.roots() == [1, 2]


def test_gcd_is_monic():
    f = poly([3, -3]) * poly([1, 5])
    g = poly([2, -2]) * poly([1, 7])
    assert poly_gcd(f, g) == poly([1, -1])
    assert poly_gcd(FpPoly.zero(61), poly([2, 4])) == poly([1, 2])
    assert poly_gcd(f, g, poly([1, 3])) == poly([1])


def test_derivative():
    f = poly([1, 0, 0, 5])
    assert derivative(f) == poly([3, 0, 0])
    assert derivative(f, 2) == poly([6, 0])
    assert derivative(f, 0) == f
    assert derivative(f, 4).is_zero()


def test_squarefree_and_multiplicity():
    line = FpPoly.x_minus(41, 61)
    f = line * line * FpPoly.x_minus(3, 61)
    assert not f.is_squarefree()
    assert f.multiplicity(line) == 2
    assert f.multiplicity(FpPoly.x_minus(3, 61)) == 1
    assert f.multiplicity(FpPoly.x_minus(4, 61)) == 0


def test_classify_output():
    root = classify_output(poly([2, 40]))
    assert root == JOutcome(FpPoly.x_minus(41, 61), root=41)
    assert root.describe() == "X - 41 (mod 61)"

    pair = classify_output(poly([1, 2748, 6627], P))
    assert pair.is_pair
    assert pair.describe() == "X^2 + 2748X + 6627 (mod 20063)"

    split = FpPoly.x_minus(1, 61) * FpPoly.x_minus(2, 61)
    assert classify_output(split) is None
    assert classify_output(split * FpPoly.x_minus(3, 61)) is None


def test_frobenius_part_keeps_the_rational_roots():
    pair = poly([1, 2748, 6627], P)
    f = pair * FpPoly.x_minus(5, P) * FpPoly.x_minus(7, P)
    assert frobenius_part(f) == FpPoly.x_minus(5, P) * FpPoly.x_minus(7, P)
    assert frobenius_part(pair) == poly([1], P)


def test_squares():
    assert is_square_mod_p(0, 7)
    assert is_square_mod_p(2, 7)
    assert not is_square_mod_p(3, 7)


def test_moduli_do_not_mix():
    with pytest.raises(ModulusMismatchError):
        poly([1, 1], 61) + poly([1, 1], 7)


def _random_poly(rng, p=61, degree=6):
    return poly([rng.randrange(p) for _ in range(rng.randint(1, degree + 1))], p)


def test_gcd_is_symmetric_and_divides_both():
    rng = random.Random(7)
    for _ in range(40):
        common = _random_poly(rng, degree=3)
        f = common * _random_poly(rng)
        g = common * _random_poly(rng)
        if f.is_zero() or g.is_zero():
            continue
        h = poly_gcd(f, g)
        assert h == poly_gcd(g, f)
        assert h.divides(f) and h.divides(g)
        assert common.divides(h)


def test_derivative_is_linear_and_obeys_the_product_rule():
    rng = random.Random(13)
    for _ in range(40):
        f, g = _random_poly(rng), _random_poly(rng)
        c = poly([rng.randrange(61)])
        assert derivative(f + g) == derivative(f) + derivative(g)
        assert derivative(c * f) == c * derivative(f)
        assert derivative(f * g) == derivative(f) * g + f * derivative(g)

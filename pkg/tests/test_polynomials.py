from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bochner import (
    DomainError,
    GaussianRational,
    Poly,
    X,
    apply_operator,
    derivative,
    hermite_operator,
    is_eigenpair,
    laguerre_operator,
)
from bochner.scalars import ZERO


def test_zero_poly_sentinel():
    zero = Poly()
    assert zero.degree is None
    assert not zero
    assert zero == Poly([0, 0, 0])
    assert str(zero) == "0"


def test_trailing_zeros_stripped():
    p = Poly([1, 2, 0, 0])
    assert p.degree == 1
    assert p.coeffs == (GaussianRational(1), GaussianRational(2))


def test_coeff_out_of_range_is_zero():
    p = Poly([3, 0, 1])
    assert p.coeff(5) == ZERO
    assert p.coeff(-1) == ZERO
    assert p.coeff(2) == 1


def test_monomial_and_times_x():
    assert Poly.monomial(3, Fraction(1, 2)) == Poly([0, 0, 0, Fraction(1, 2)])
    assert Poly([1, 2]).times_x() == Poly([0, 1, 2])
    with pytest.raises(DomainError):
        Poly.monomial(-1)


def test_arithmetic():
    p = Poly([1, 0, 1])
    q = Poly([0, 2])
    assert p + q == Poly([1, 2, 1])
    assert p - p == Poly()
    assert p * q == Poly([0, 2, 0, 2])
    assert 3 * q == Poly([0, 6])
    assert Fraction(1, 2) * p == Poly([Fraction(1, 2), 0, Fraction(1, 2)])
    assert (p + (-p)) == Poly()


def test_evaluate():
    p = Poly([1, -3, 2])  # 2x^2 - 3x + 1
    assert p.evaluate(2) == 3
    assert p.evaluate(Fraction(1, 2)) == 0
    assert Poly().evaluate(7) == ZERO


def test_is_monic():
    assert X.is_monic()
    assert not Poly([2, 2]).is_monic()
    assert not Poly().is_monic()


def test_derivative_examples():
    cube = Poly.monomial(3)
    assert derivative(cube, 1) == Poly([0, 0, 3])
    assert derivative(cube, 0) == cube
    assert derivative(Poly([Fraction(-1, 2), 0, 1]), 2) == Poly([2])
    assert derivative(cube, 4) == Poly()
    with pytest.raises(DomainError):
        derivative(cube, -1)


def test_apply_operator_hermite():
    hermite = hermite_operator()
    p = Poly([Fraction(-1, 2), 0, 1])
    assert apply_operator(hermite, p) == Poly([2, 0, -4])
    assert apply_operator(hermite, p) == -4 * p


def test_apply_operator_constant_annihilated():
    assert apply_operator(hermite_operator(), Poly([1])) == Poly()


def test_apply_operator_laguerre():
    laguerre = laguerre_operator(0)
    p = Poly([-1, 1])
    assert apply_operator(laguerre, p) == Poly([1, -1])
    assert apply_operator(laguerre, p) == -1 * p


def test_is_eigenpair_examples():
    hermite = hermite_operator()
    p = Poly([Fraction(-1, 2), 0, 1])
    assert is_eigenpair(hermite, p, -4)
    assert not is_eigenpair(hermite, p, -2)
    assert is_eigenpair(hermite, Poly(), GaussianRational(5, 7))


small_rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
small_scalars = st.builds(GaussianRational, small_rationals, small_rationals)
polys = st.builds(Poly, st.lists(small_scalars, max_size=21))


@given(polys, st.integers(0, 5), st.integers(0, 5))
@settings(max_examples=60)
def test_derivative_composes(p, a, b):
    assert derivative(derivative(p, a), b) == derivative(p, a + b)


@given(polys, polys, small_scalars, small_scalars)
@settings(max_examples=40)
def test_apply_operator_is_linear(p, q, a, b):
    op = laguerre_operator(Fraction(1, 3))
    left = apply_operator(op, a * p + b * q)
    right = a * apply_operator(op, p) + b * apply_operator(op, q)
    assert left == right


@given(polys)
@settings(max_examples=40)
def test_degree_never_increases(p):
    op = hermite_operator()
    image = apply_operator(op, p)
    if p.degree is None:
        assert image.degree is None
    else:
        assert image.degree is None or image.degree <= p.degree

from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings, strategies as st

from bochner import (
    BochnerOperator,
    DeltaTable,
    DomainError,
    GaussianRational,
    InsufficientData,
    InvalidOperator,
    Poly,
    deltas_from_operator,
    hermite_operator,
    jacobi_operator,
    laguerre_operator,
    normalize,
    operator_from_deltas,
)
from bochner.scalars import ZERO, comb, factorial
from conftest import random_bochner


def test_constructor_rejects_degree_violation():
    with pytest.raises(InvalidOperator):
        BochnerOperator([Poly(), Poly([0, 0, 1])])  # a_1 = x^2


def test_constructor_rejects_zero_leading():
    with pytest.raises(InvalidOperator):
        BochnerOperator([Poly(), Poly([0, 1]), Poly()])


def test_constructor_rejects_order_zero():
    with pytest.raises(InvalidOperator):
        BochnerOperator([Poly([1])])


def test_normalize_strips_constant():
    op = BochnerOperator([Poly([3]), Poly([0, -2]), Poly([1])])
    normalized, shift = normalize(op)
    assert shift == GaussianRational(3)
    assert normalized == hermite_operator()


def test_normalize_identity_case():
    op = hermite_operator()
    normalized, shift = normalize(op)
    assert shift == ZERO
    assert normalized == op


def test_hermite_delta_table():
    table = deltas_from_operator(hermite_operator(), 4)
    assert table.order == 2
    for n in range(5):
        assert table.value(n, 0) == GaussianRational(-2 * n)
        assert table.value(n, 1) == ZERO
        assert table.value(n, 2) == GaussianRational(n * (n - 1))


def test_laguerre_delta_table():
    alpha = Fraction(1, 3)
    table = deltas_from_operator(laguerre_operator(alpha), 3)
    for n in range(4):
        assert table.value(n, 0) == GaussianRational(-n)
        assert table.value(n, 1) == GaussianRational(n * (alpha + n))
        assert table.value(n, 2) == ZERO


def test_euler_term_delta_table():
    op = BochnerOperator([Poly(), Poly([0, 1])])  # a_1 = x
    table = deltas_from_operator(op, 3)
    for n in range(4):
        assert table.value(n, 0) == GaussianRational(n)
        assert table.value(n, 1) == ZERO


def test_deltas_require_normalized_operator():
    op = BochnerOperator([Poly([3]), Poly([0, -2]), Poly([1])])
    with pytest.raises(InvalidOperator):
        deltas_from_operator(op, 3)


def test_delta_table_conventions():
    table = deltas_from_operator(hermite_operator(), 4)
    assert table.value(3, 5) == ZERO  # k > n
    assert table.value(4, 3) == ZERO  # beyond the order tag
    with pytest.raises(InsufficientData):
        table.value(5, 0)
    with pytest.raises(DomainError):
        table.value(-1, 0)


def test_delta_table_shape_validation():
    with pytest.raises(DomainError):
        DeltaTable([[0, 1]])  # row 0 must have one entry
    with pytest.raises(DomainError):
        DeltaTable([[0], [0]], order=1)  # row 1 must have two entries


def test_operator_from_deltas_hermite_round_trip():
    table = deltas_from_operator(hermite_operator(), 4)
    assert operator_from_deltas(table, 2) == hermite_operator()


def test_operator_from_deltas_euler_term():
    rows = [[GaussianRational(n)] if n == 0 else [GaussianRational(n), ZERO] for n in range(3)]
    table = DeltaTable(rows, order=1)
    assert operator_from_deltas(table, 1) == BochnerOperator([Poly(), Poly([0, 1])])


def test_operator_from_deltas_insufficient():
    with pytest.raises(InsufficientData):
        operator_from_deltas(DeltaTable([]), 2)


def test_two_path_lambda_check(corpus):
    # the k = 0 column recomputed independently from the leading coefficients
    for name, op in corpus[:6]:
        table = deltas_from_operator(op, 8)
        for n in range(9):
            expected = ZERO
            for i in range(1, op.order + 1):
                lead = op.coeffs[i].coeff(i)
                if lead:
                    expected = expected + (comb(n, i) * factorial(i)) * lead
            assert table.value(n, 0) == expected, (name, n)


small_rationals = st.fractions(min_value=-30, max_value=30, max_denominator=12)
small_scalars = st.builds(GaussianRational, small_rationals, small_rationals)


@st.composite
def bochner_operators(draw, max_order=6):
    order = draw(st.integers(1, max_order))
    polys = [Poly()]
    for i in range(1, order + 1):
        coeffs = draw(st.lists(small_scalars, max_size=i + 1))
        polys.append(Poly(coeffs))
    leading = draw(small_scalars.filter(bool))
    last = polys[order]
    if not last:
        polys[order] = Poly.monomial(draw(st.integers(0, order)), leading)
    return BochnerOperator(polys)


@given(bochner_operators())
@settings(max_examples=60, deadline=None)
def test_delta_round_trip(op):
    table = deltas_from_operator(op, op.order)
    rebuilt = operator_from_deltas(table, op.order)
    assert rebuilt == op


def test_reverse_round_trip_on_tables():
    rng = Random(7)
    for _ in range(6):
        op = random_bochner(rng, rng.randint(1, 5), distinct_to=12)
        table = deltas_from_operator(op, 12)
        rebuilt = operator_from_deltas(table, op.order)
        assert deltas_from_operator(rebuilt, 12) == table


def test_operator_from_deltas_trims_padding():
    # a table produced by an order-2 operator, inverted while asking order 4
    table = deltas_from_operator(hermite_operator(), 6)
    padded = DeltaTable(
        [
            [table.value(n, k) for k in range(min(n, 4) + 1)]
            for n in range(7)
        ],
        order=4,
    )
    assert operator_from_deltas(padded, 4) == hermite_operator()


def test_jacobi_preset_eigenvalues():
    alpha, beta = Fraction(1, 2), Fraction(1, 3)
    table = deltas_from_operator(jacobi_operator(alpha, beta), 6)
    for n in range(7):
        assert table.value(n, 0) == GaussianRational(-Fraction(n) * (n + 1 + alpha + beta))


def test_preset_parameters_must_be_real():
    with pytest.raises(DomainError):
        laguerre_operator(GaussianRational(0, 1))
    with pytest.raises(DomainError):
        jacobi_operator(GaussianRational(0, 1), 0)

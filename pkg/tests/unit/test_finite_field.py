"""Tests for GF(p^d) arithmetic"""

import pytest

from core.algebra.finite_field import (
    FieldParams,
    enumerate_field,
    field_arith,
    field_from_order,
    field_new,
    frobenius_field,
    is_irreducible,
    trace_to_prime_field,
)


def test_smallest_modulus_is_deterministic(f9):
    assert f9.modulus == (1, 0, 1)
    assert field_new(3, 2) is f9


def test_generator_squares_to_minus_one(f9):
    x = f9.element([0, 1])
    assert (x * x).coeffs == (2, 0)


def test_trace_of_one_in_gf9(f9):
    assert f9.trace(f9.one) == 2


def test_inverse_of_every_unit(f9):
    for coeffs in f9.elements():
        if any(coeffs):
            assert f9.mul(coeffs, f9.inv(coeffs)) == f9.one


def test_inverse_of_zero_raises(f9):
    with pytest.raises(ZeroDivisionError):
        f9.inv(f9.zero)


def test_frobenius_is_a_field_automorphism_of_order_d(f27):
    elements = list(f27.elements())
    for x in elements[:10]:
        assert f27.frobenius(x, 3) == x
        for y in elements[-5:]:
            assert f27.frobenius(f27.mul(x, y)) == f27.mul(f27.frobenius(x), f27.frobenius(y))
            assert f27.frobenius(f27.add(x, y)) == f27.add(f27.frobenius(x), f27.frobenius(y))


def test_frobenius_table_matches_powering(f9):
    table = f9.frobenius_table(1)
    for i in range(f9.q):
        assert table[i] == f9.encode(f9.pow(f9.decode(i), 3))


def test_tables_agree_with_arithmetic(f9):
    for i in range(f9.q):
        for j in range(f9.q):
            x, y = f9.decode(i), f9.decode(j)
            assert f9.mul_table[i][j] == f9.encode(f9.mul(x, y))
            assert f9.add_table[i][j] == f9.encode(f9.add(x, y))
        assert f9.neg_table[i] == f9.encode(f9.neg(f9.decode(i)))


def test_irreducibility():
    assert is_irreducible((1, 0, 1), 3)
    # X^2 + X + 1 = (X - 1)^2 over F_3
    assert not is_irreducible((1, 1, 1), 3)


def test_field_from_order():
    assert field_from_order(9) == field_new(3, 2)
    with pytest.raises(ValueError):
        field_from_order(12)


@pytest.mark.parametrize("p,d", [(2, 1), (4, 1), (3, 0), (3, 13)])
def test_bad_parameters(p, d):
    with pytest.raises(ValueError):
        FieldParams(p, d)


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        FieldParams(3, 2, (1, 1, 1))


def test_field_element_operators(f9):
    x = f9.element([1, 1])
    assert (x / x).coeffs == f9.one
    assert (x - x).is_zero()
    assert (x ** 8).coeffs == f9.one
    assert (x + 2).coeffs == (0, 1)


def test_field_arith_dispatch(f9):
    x = f9.element([0, 1])
    assert field_arith("add", x, x).coeffs == (0, 2)
    assert field_arith("sub", x, x).is_zero()
    assert field_arith("mul", x, x).coeffs == (2, 0)
    assert field_arith("pow", x, 4).coeffs == f9.one
    assert (field_arith("inv", x) * x).coeffs == f9.one
    with pytest.raises(ValueError):
        field_arith("sqrt", x)


def test_frobenius_and_trace_wrappers(f9):
    x = f9.element([0, 1])
    # X^3 = -X when X^2 = -1
    assert frobenius_field(x).coeffs == (0, 2)
    assert trace_to_prime_field(x) == 0
    assert trace_to_prime_field(f9.element([1, 0])) == 2


def test_enumerate_field_yields_each_element_once(f9):
    elements = [x.coeffs for x in enumerate_field(f9)]
    assert len(elements) == 9
    assert len(set(elements)) == 9
    assert elements[0] == f9.zero

"""Tests for the J(v) equation systems"""

from fractions import Fraction

import pytest

from core.algebra import base_change
from core.ramification.datum import LocalDatum
from core.ramification.equations import (
    complete_datum,
    constraint_system,
    constraints_hold,
    j_system,
    l_plus_conditions,
    satisfies_J,
    slightly_ramified_condition,
    slightly_ramified_level,
)

D1 = [[1, 0], [0, 1], [0, 0]]


@pytest.fixture
def h1_datum(h1_f9):
    return LocalDatum.from_values(h1_f9, {1: D1})


@pytest.mark.parametrize("v, level", [
    (Fraction(2), 0),
    (Fraction(3, 2), 0),
    (Fraction(4, 3), 1),
    (Fraction(10, 9), 2),
])
def test_slightly_ramified_level(v, level):
    assert slightly_ramified_level(v, 3) == level


def test_slightly_ramified_level_range():
    with pytest.raises(ValueError):
        slightly_ramified_level(1, 3)
    with pytest.raises(ValueError):
        slightly_ramified_level(Fraction(5, 2), 3)


def test_slightly_ramified_condition(h1_datum):
    assert slightly_ramified_condition(h1_datum, 0)
    assert not slightly_ramified_condition(h1_datum, 1)
    with pytest.raises(ValueError):
        slightly_ramified_condition(h1_datum, -1)


def test_condition_needs_single_key(h1_f9):
    datum = LocalDatum.from_values(h1_f9, {1: D1, 2: D1})
    assert not slightly_ramified_condition(datum, 0)


@pytest.mark.parametrize("method", ["general", "exp-p", "auto"])
def test_h1_datum_property_J(h1_datum, method):
    assert not satisfies_J(h1_datum, 1, method)
    assert not satisfies_J(h1_datum, Fraction(4, 3), method)
    assert satisfies_J(h1_datum, Fraction(3, 2), method)
    assert satisfies_J(h1_datum, 2, method)


def test_J_matches_slightly_ramified_condition(h1_datum):
    for v in (Fraction(10, 9), Fraction(4, 3), Fraction(13, 9), Fraction(2)):
        level = slightly_ramified_level(v, 3)
        assert satisfies_J(h1_datum, v, "general") == slightly_ramified_condition(h1_datum, level)


def test_zero_datum_satisfies_everything(h1_f9):
    assert satisfies_J(LocalDatum(h1_f9), Fraction(1, 3))


def test_satisfies_J_rejects_bad_input(h1_datum, z9, f3):
    with pytest.raises(ValueError):
        satisfies_J(h1_datum, 0)
    with pytest.raises(ValueError, match="Unknown method"):
        satisfies_J(h1_datum, 2, "fast")
    cyclic = LocalDatum.from_values(base_change(z9, f3), {1: [[1]]})
    with pytest.raises(ValueError, match="exponent p"):
        satisfies_J(cyclic, 2, "exp-p")


def test_cyclic_unit_datum(z9, f3):
    datum = LocalDatum.from_values(base_change(z9, f3), {1: [[1]]})
    assert not satisfies_J(datum, 3)
    assert satisfies_J(datum, Fraction(10, 3))


def test_j_system_has_noninteger_family(h1_f9):
    system = j_system(h1_f9, Fraction(4, 3), (1,))
    families = {equation.family for equation in system.equations}
    assert families == {"integer", "noninteger"}
    assert len(system) == len(system.equations)


def test_constraint_system_slots(h1_f9):
    system = constraint_system(h1_f9, 3)
    assert system.keys == (1, 2)
    a = h1_f9.coerce([[1, 0], [0, 0], [0, 0]])
    b = h1_f9.coerce([[0, 0], [1, 0], [0, 0]])
    assert constraints_hold(h1_f9, 3, {1: h1_f9.coerce(D1), 2: h1_f9.zero})
    assert not constraints_hold(h1_f9, 3, {1: a, 2: b})


def test_complete_datum_forces_nothing_for_single_slot(h1_f9):
    d1 = h1_f9.coerce(D1)
    completed = complete_datum(h1_f9, {1: d1}, 2)
    assert completed == LocalDatum(h1_f9, {1: d1})
    assert satisfies_J(completed, 2)


def test_complete_datum_rejects_large_keys(h1_f9):
    with pytest.raises(ValueError, match="below v"):
        complete_datum(h1_f9, {2: h1_f9.coerce(D1)}, 2)


def test_l_plus_conditions(h1_datum, h1, f3):
    assert not l_plus_conditions(h1_datum, 1, 1)
    assert not l_plus_conditions(h1_datum, 1, 1, "l")
    prime_field = LocalDatum.from_values(base_change(h1, f3), {1: [[1], [1], [0]]})
    assert l_plus_conditions(prime_field, 1, 2)


def test_l_plus_conditions_validation(h1_datum):
    with pytest.raises(ValueError):
        l_plus_conditions(h1_datum, 0, 1)
    with pytest.raises(ValueError):
        l_plus_conditions(h1_datum, 3, 1)
    with pytest.raises(ValueError):
        l_plus_conditions(h1_datum, 1, 0)
    with pytest.raises(ValueError, match="variant"):
        l_plus_conditions(h1_datum, 1, 1, "two")

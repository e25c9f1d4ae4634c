"""Tests for lattice power series and place counts"""

from fractions import Fraction

import pytest

from tools.asymptotics.series import RationalSeries, places_of_degree, zeta_check


def test_places_of_degree():
    assert places_of_degree(3, 1) == 4
    assert places_of_degree(3, 2) == 3
    assert places_of_degree(3, 3) == 8
    assert places_of_degree(5, 2) == 10
    with pytest.raises(ValueError):
        places_of_degree(3, 0)


def test_zeta_check():
    assert zeta_check(3, 4) == [1, 4, 13, 40, 121]
    assert zeta_check(5, 3) == [1, 6, 31, 156]


def test_coefficient_lookup():
    series = RationalSeries(3, [1, 0, 0, 2])
    assert series.coefficient(1) == 2
    assert series.coefficient(Fraction(1, 3)) == 0
    assert series.coefficient(Fraction(1, 2)) == 0
    assert series.bound == 1
    with pytest.raises(IndexError):
        series.coefficient(2)


def test_items_and_nonzero():
    series = RationalSeries(2, [1, 0, 5])
    assert list(series.items()) == [(0, 1), (Fraction(1, 2), 0), (1, 5)]
    assert series.nonzero() == [(0, 1), (2, 5)]


def test_stretch():
    series = RationalSeries(1, [1, 2, 3])
    assert series.stretch(2, 5).coefficients == [1, 0, 2, 0, 3]
    assert series.stretch(3, 4).coefficients == [1, 0, 0, 2]


def test_truncated_product():
    a = RationalSeries(1, [1, 1, 0, 0])
    b = RationalSeries(1, [1, 2, 1, 0])
    assert (a * b).coefficients == [1, 3, 3, 1]
    assert a.mul(b, 2).coefficients == [1, 3]


def test_pow_by_squaring():
    base = RationalSeries(1, [1, 2])
    assert base.pow(4, 3).coefficients == [1, 8, 24]
    assert base.pow(0, 3).coefficients == [1, 0, 0]
    with pytest.raises(ValueError):
        base.pow(-1)


def test_series_validation():
    with pytest.raises(ValueError):
        RationalSeries(0, [1])
    with pytest.raises(ValueError):
        RationalSeries(1, [])
    with pytest.raises(ValueError, match="lattices"):
        RationalSeries(1, [1]).mul(RationalSeries(3, [1]))

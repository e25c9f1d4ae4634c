"""Tests for local data and the rational helpers"""

import math
from fractions import Fraction

import pytest

from core.algebra import base_change
from core.errors import DatumError
from core.ramification.datum import (
    LocalDatum,
    ceil_log,
    check_jump_value,
    datum_from_json,
    eta,
    format_jump,
    load_datum,
    mu,
    parse_rational,
    prime_to_p,
)


def test_mu_smallest_exponent():
    assert mu(5, 1, 3) == 2
    assert mu(5, 2, 3) == 1
    assert mu(1, 1, 3) == 0
    assert mu(Fraction(4, 3), 1, 3) == 1


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("k", range(1, 61))
def test_mu_sum_counts_integers_below_v(p, k):
    v = Fraction(k, 6)
    # mu vanishes for b >= v
    total = sum(mu(v, b, p) for b in prime_to_p(p, v))
    assert total == math.ceil(v) - 1


def test_mu_rejects_bad_input():
    with pytest.raises(ValueError):
        mu(0, 1, 3)
    with pytest.raises(ValueError):
        mu(2, 3, 3)


def test_eta():
    assert eta(2, 0) == 1
    assert eta(1, 1) == Fraction(1, 2)
    with pytest.raises(ValueError):
        eta(0, 1)


def test_ceil_log():
    assert ceil_log(1, 3) == 0
    assert ceil_log(3, 3) == 1
    assert ceil_log(4, 3) == 2
    assert ceil_log(Fraction(1, 2), 3) == 0


def test_format_jump_is_lowest_terms():
    assert format_jump(Fraction(8, 6)) == "4/3"
    assert format_jump(3) == "3/1"
    assert format_jump(0) == "0/1"


def test_parse_rational():
    assert parse_rational(" 4/3 ") == Fraction(4, 3)
    assert parse_rational(2) == 2
    with pytest.raises(DatumError):
        parse_rational("two")
    with pytest.raises(DatumError):
        parse_rational("1/0")


def test_check_jump_value():
    assert check_jump_value(Fraction(4, 3), 3, 27) == Fraction(4, 3)
    assert check_jump_value(2, 3, 3) == 2
    with pytest.raises(ValueError):
        check_jump_value(Fraction(1, 9), 3, 3)
    with pytest.raises(ValueError):
        check_jump_value(Fraction(1, 2), 3, 27)
    with pytest.raises(ValueError):
        check_jump_value(-1, 3, 3)


def test_datum_drops_zero_values(h1_f9):
    zero = h1_f9.zero
    datum = LocalDatum.from_values(h1_f9, {1: [[1, 0], [0, 0], [0, 0]], 2: [[0, 0]] * 3})
    assert datum.keys == (1,)
    assert datum.get(2) == zero
    assert datum.max_key == 1
    assert not datum.is_zero()


def test_datum_rejects_keys_divisible_by_p(h1_f9):
    with pytest.raises(DatumError, match="prime to 3"):
        LocalDatum.from_values(h1_f9, {3: [[1, 0], [0, 0], [0, 0]]})


def test_datum_rejects_wrong_coordinate_count(h1_f9):
    with pytest.raises(DatumError):
        LocalDatum.from_values(h1_f9, {1: [[1, 0]]})


def test_load_datum(data_dir, h1_f9):
    datum = load_datum(data_dir / "h1_f9_datum.json")
    assert datum.algebra == h1_f9
    assert datum.keys == (1,)
    assert datum.get(1) == h1_f9.coerce([[1, 0], [0, 1], [0, 0]])


def test_load_zero_datum(data_dir):
    assert load_datum(data_dir / "zero_datum.json").is_zero()


def test_malformed_datum_reports_line(data_dir):
    with pytest.raises(DatumError) as info:
        load_datum(data_dir / "malformed_datum.json")
    assert info.value.line == 3


def test_missing_datum_file(tmp_path):
    with pytest.raises(DatumError, match="Cannot read"):
        load_datum(tmp_path / "absent.json")


def test_json_form_reloads(h1_f9):
    datum = LocalDatum.from_values(h1_f9, {1: [[1, 0], [0, 1], [0, 0]], 2: [[0, 0], [0, 0], [2, 1]]})
    assert datum_from_json(datum.to_json()) == datum


def test_duplicate_support_key(h1_f9):
    entry = {"b": 1, "value": [[1, 0], [0, 0], [0, 0]]}
    with pytest.raises(DatumError, match="twice"):
        datum_from_json({"support": [entry, entry]}, h1_f9)


def test_support_entry_needs_b(h1, f3):
    with pytest.raises(DatumError):
        datum_from_json({"support": [{"value": [[1], [0], [0]]}]}, base_change(h1, f3))

"""Tests for class-2 Lie algebras and their base change"""

import json
from fractions import Fraction

import pytest

from core.algebra.finite_field import field_new
from core.algebra.lie import (
    LieAlgebraSpec,
    abelian,
    act,
    artin_schreier_map,
    base_change,
    bch_mul,
    bracket,
    heisenberg,
    parse_algebra,
    subobjects,
    validate_spec,
)
from core.errors import DatumError, SpecValidationError


def test_heisenberg_shape(h1):
    assert h1.rank == 3
    assert h1.order == 27
    assert h1.exponent_p
    assert not h1.is_abelian
    assert h1.structure(1, 0) == (0, 0, 2)


def test_brackets_are_normalized():
    spec = LieAlgebraSpec(3, (1, 1, 1), ((1, 0, (0, 0, 1)),))
    assert spec.brackets == ((0, 1, (0, 0, 2)),)
    assert spec.structure(0, 1) == (0, 0, 2)


def test_validation_accepts_builtins(h1, z9):
    validate_spec(h1)
    validate_spec(heisenberg(2, 3))
    validate_spec(z9)


def test_class_three_rejected(data_dir):
    with pytest.raises(SpecValidationError) as info:
        parse_algebra(str(data_dir / "class3_algebra.json"), 3)
    assert info.value.witness


def test_torsion_incompatible_bracket_rejected():
    spec = LieAlgebraSpec(3, (1, 1, 2), ((0, 1, (0, 0, 1)),))
    with pytest.raises(SpecValidationError, match="Torsion"):
        validate_spec(spec)


def test_nonzero_self_bracket_rejected():
    with pytest.raises(SpecValidationError):
        LieAlgebraSpec(3, (1,), ((0, 0, (1,)),))


def test_even_characteristic_rejected():
    with pytest.raises(SpecValidationError):
        abelian([1], 2)


def test_subobjects_of_heisenberg(h1):
    info = subobjects(h1)
    assert info.r == 3
    assert info.M == Fraction(4, 3)
    assert not info.p_torsion_abelian
    assert info.center_size == 3
    assert info.derived_size == 3


def test_subobjects_of_cyclic(z9):
    info = subobjects(z9)
    assert info.r == 1
    assert info.M == 1
    assert info.p_torsion_abelian
    assert info.center_size == 9


def test_parse_builtin_names():
    assert parse_algebra("heisenberg:2", 5).rank == 5
    assert parse_algebra("abelian:1,2", 3).orders == (1, 2)
    with pytest.raises(DatumError):
        parse_algebra("heisenberg:x", 3)
    with pytest.raises(DatumError):
        parse_algebra("no-such-algebra", 3)


def test_parse_json_file(data_dir, h1):
    spec = parse_algebra(str(data_dir / "h1_algebra.json"), 3)
    assert spec == h1
    assert spec.name == "h1_algebra"


def test_parse_malformed_json_reports_line(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{\n  "p": 3,\n  "orders": [1,\n}\n')
    with pytest.raises(DatumError) as info:
        parse_algebra(str(path), 3)
    assert info.value.line is not None


def test_spec_json_form(h1):
    data = json.loads(json.dumps(h1.to_json()))
    assert LieAlgebraSpec.from_json(data) == h1


class TestBaseChange:
    def test_size(self, h1_f9):
        assert h1_f9.size == 9 ** 3

    def test_bracket_is_alternating(self, h1_f9):
        x = h1_f9.element([[1, 0], [0, 1], [2, 2]])
        y = h1_f9.element([[0, 1], [1, 1], [0, 0]])
        assert x.bracket(x).is_zero()
        assert (bracket(x, y) + bracket(y, x)).is_zero()
        assert not bracket(x, y).is_zero()

    def test_bch_group_laws(self, h1_f9):
        x = h1_f9.element([[1, 0], [0, 1], [2, 2]])
        y = h1_f9.element([[0, 1], [1, 1], [0, 0]])
        assert bch_mul(x, -x).is_zero()
        assert (bch_mul(x, y) - bch_mul(y, x) - bracket(x, y)).is_zero()

    def test_action_and_artin_schreier(self, h1_f9):
        zero = h1_f9.wrap(h1_f9.zero)
        m = h1_f9.element([[1, 2], [0, 1], [1, 0]])
        assert act(zero, m) == m
        assert artin_schreier_map(zero).is_zero()
        g = h1_f9.element([[0, 1], [0, 0], [0, 0]])
        # act(g, 0) = sigma(g) o (-g)
        assert act(g, zero) == artin_schreier_map(g)

    def test_prime_field_elements_are_frobenius_fixed(self, h1, f3):
        algebra = base_change(h1, f3)
        for x in algebra.elements():
            assert algebra.is_zero(algebra.artin_schreier(x))

    def test_p_torsion_of_cyclic(self, z9, f3):
        algebra = base_change(z9, f3)
        torsion = list(algebra.p_torsion_elements())
        assert len(torsion) == 3
        assert all(algebra.is_zero(algebra.scale(x, 3)) for x in torsion)

    def test_coerce_rejects_wrong_shape(self, h1_f9):
        with pytest.raises(DatumError):
            h1_f9.coerce([[1, 0], [0, 1]])
        with pytest.raises(DatumError):
            h1_f9.coerce([[1], [0], [0]])

    def test_characteristic_mismatch(self, h1):
        with pytest.raises(ValueError):
            base_change(h1, field_new(5, 1))

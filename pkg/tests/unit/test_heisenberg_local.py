"""Tests for the slightly ramified Heisenberg counts"""

from fractions import Fraction

import pytest

from core.algebra import heisenberg
from core.ramification.counting import count_lastjump_lt
from tools.heisenberg.akm import a_km_bruteforce
from tools.heisenberg.local import ProfileRow, heisenberg_local_profile, heisenberg_local_small_v


def test_small_v_matches_local_pipeline(f9):
    assert heisenberg_local_small_v(1, f9, 1) == 297
    assert heisenberg_local_small_v(1, f9, 0) == 729


def test_unverified_small_v(f27):
    assert heisenberg_local_small_v(1, f27, 1, verify=False) == 27 * 105


def test_profile_over_f9(f9):
    rows = heisenberg_local_profile(1, f9, verify=True)
    assert rows == [
        ProfileRow(0, Fraction(2), 729, 729),
        ProfileRow(1, Fraction(4, 3), 297, 324),
    ]


def test_profile_over_f27(f27):
    rows = heisenberg_local_profile(1, f27)
    assert rows[-1].count == 27 * 105
    assert rows[-1].leading == 4 * 27 ** 2


@pytest.mark.parametrize("k,field_name,expected", [
    (1, "f3", [27, 27, 27]),
    (1, "f9", [729, 297, 297]),
    (2, "f3", [243, 243, 243]),
])
def test_enumeration_matches_q_times_a_km(k, field_name, expected, request):
    field = request.getfixturevalue(field_name)
    spec = heisenberg(k, field.p)
    for m in range(3):
        v = 1 + Fraction(1, field.p ** m)
        enumerated = count_lastjump_lt(spec, field, v, method="enumerate")
        assert enumerated == field.q * a_km_bruteforce(k, m, field) == expected[m]
        assert heisenberg_local_small_v(k, field, m) == enumerated

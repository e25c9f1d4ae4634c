"""Shared fixtures for the wildcount test suite"""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from core.algebra import abelian, base_change, field_new, heisenberg  # noqa: E402

DATA_DIR = Path(__file__).resolve().parent / "data"


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def f3():
    return field_new(3, 1)


@pytest.fixture
def f9():
    return field_new(3, 2)


@pytest.fixture
def f27():
    return field_new(3, 3)


@pytest.fixture
def z3():
    return abelian([1], 3)


@pytest.fixture
def z9():
    return abelian([2], 3)


@pytest.fixture
def h1():
    return heisenberg(1, 3)


@pytest.fixture
def h1_f9(h1, f9):
    return base_change(h1, f9)


@pytest.fixture(autouse=True)
def clear_scale_guard(monkeypatch):
    """Tests run with the default guards unless they set the override themselves"""
    monkeypatch.delenv("WILDCOUNT_SCALE_GUARD", raising=False)
    monkeypatch.delenv("WILDCOUNT_JOBS", raising=False)

from fractions import Fraction
from pathlib import Path

import pytest

from src.algebra import QuatAlgebra
from src.algorithms import enumerate_types
from src.classpoly import ClassPolyCache
from src.formats import parse_order_file
from src.lattices import make_order

ORDERS_DIR = Path(__file__).resolve().parents[1] / "data" / "orders"


@pytest.fixture(autouse=True)
def _no_disk_cache(monkeypatch):
    monkeypatch.delenv("QUATORDER_CACHE_DIR", raising=False)


@pytest.fixture
def orders_dir() -> Path:
    return ORDERS_DIR


@pytest.fixture
def b61() -> QuatAlgebra:
    return QuatAlgebra(61, 61, 7)


@pytest.fixture
def example1_order():
    return parse_order_file(ORDERS_DIR / "example_p61.json")


@pytest.fixture
def example2_order():
    return parse_order_file(ORDERS_DIR / "example_p20063.json")


@pytest.fixture
def hurwitz_order():
    A = QuatAlgebra(2, 1, 1)
    half = Fraction(1, 2)
    return make_order(A, [A.one, A.i, A.j, A.element(half, half, half, half)])


@pytest.fixture
def memory_cache() -> ClassPolyCache:
    return ClassPolyCache()


@pytest.fixture(scope="session")
def types61():
    return enumerate_types(61)


@pytest.fixture(scope="session")
def types7():
    return enumerate_types(7)

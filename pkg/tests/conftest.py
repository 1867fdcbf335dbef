"""
pytest configuration for quasiplus
"""
from os.path import abspath, dirname, join
from pathlib import Path

import numpy as np
import pytest

import quasiplus
from quasiplus.search.enumerate import latin_square_stack
from quasiplus.search.sample import random_stack

# ------------------------- define constants

# path to the test directory
TEST_PATH = abspath(dirname(__file__))
# path to the test data directory
TEST_DATA_PATH = join(TEST_PATH, "test_data")

# the subtraction table x*y = x - y mod 3
SUBTRACTION = [[0, 2, 1], [1, 0, 2], [2, 1, 0]]

# the symmetric group S3; elements 0..2 are rotations (0 the identity),
# 3..5 reflections
S3 = [
    [0, 1, 2, 3, 4, 5],
    [1, 2, 0, 5, 3, 4],
    [2, 0, 1, 4, 5, 3],
    [3, 4, 5, 0, 1, 2],
    [4, 5, 3, 2, 0, 1],
    [5, 3, 4, 1, 2, 0],
]


# ------------------------------ table fixtures


@pytest.fixture(scope="session")
def data_path():
    """For scenarios when you really just need a path to test data"""
    return Path(TEST_DATA_PATH)


@pytest.fixture(scope="session")
def z3():
    """The cyclic group of order 3."""
    return quasiplus.from_mul_table([[0, 1, 2], [1, 2, 0], [2, 0, 1]], name="Z3")


@pytest.fixture(scope="session")
def subtraction():
    """Subtraction mod 3, a non-commutative, non-associative quasigroup."""
    return quasiplus.from_mul_table(SUBTRACTION, name="sub3")


@pytest.fixture(scope="session")
def s3():
    """The symmetric group on three letters."""
    return quasiplus.from_mul_table(S3, name="S3")


@pytest.fixture(scope="session")
def order_3_tables():
    """All 12 Latin squares of order 3."""
    return latin_square_stack(3)


@pytest.fixture(scope="session")
def order_4_tables():
    """All 576 Latin squares of order 4."""
    return latin_square_stack(4)


@pytest.fixture(scope="session")
def small_tables(order_4_tables):
    """Every Latin square of orders 1 to 4, as a list of stacks."""
    return [latin_square_stack(order) for order in range(1, 4)] + [order_4_tables]


@pytest.fixture(scope="session")
def small_quasigroups(small_tables):
    """Every quasigroup of order 1 to 4 (591 models)."""
    return [quasiplus.FiniteQuasigroup(x) for tables in small_tables for x in tables]


@pytest.fixture(scope="session")
def random_order_6():
    """100 seeded random quasigroups of order 6."""
    return random_stack(6, 100, seed=1)


@pytest.fixture(scope="session")
def order_4_quasigroups(order_4_tables):
    """All quasigroups of order 4."""
    return [quasiplus.FiniteQuasigroup(x) for x in order_4_tables]


@pytest.fixture(scope="session")
def rng():
    """A seeded random generator."""
    return np.random.default_rng(42)


@pytest.fixture()
def table_path(tmp_path, z3):
    """A text table file holding Z3."""
    path = tmp_path / "z3.tbl"
    quasiplus.write_table(z3, path)
    return path


# -------------- configure test runner


def pytest_addoption(parser):
    """Add quasiplus' pytest command options."""
    parser.addoption(
        "--slow",
        action="store_true",
        dest="slow",
        default=False,
        help="run exhaustive order 5 tests",
    )


def pytest_collection_modifyitems(config, items):
    """Configure quasiplus' pytest command line options."""
    marks = {}
    if not config.getoption("--slow"):
        msg = "needs --slow option to run"
        marks["slow"] = pytest.mark.skip(reason=msg)

    for item in items:
        marks_to_apply = set(marks)
        item_marks = set(item.keywords)
        for mark_name in marks_to_apply & item_marks:
            item.add_marker(marks[mark_name])

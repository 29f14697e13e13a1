import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from binpart import (
    DiagonalTable,
    build_partition_table,
    build_triangle,
)

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def table_2001():
    return build_partition_table(2001)


@pytest.fixture(scope="session")
def table_120(table_2001):
    return table_2001


@pytest.fixture(scope="session")
def triangle_120(table_2001):
    return build_triangle(120, table_2001)


@pytest.fixture(scope="session")
def triangle_1000(table_2001):
    return build_triangle(1000, table_2001)


@pytest.fixture(scope="session")
def diagonal_2001(table_2001):
    return DiagonalTable(2001, table_2001)

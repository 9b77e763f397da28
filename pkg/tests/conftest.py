"""Shared fixtures. Debug self-checks are switched on for the whole suite."""

import os

os.environ.setdefault("PERMUTOPE_DEBUG", "1")

import pytest  # noqa: E402

from permutope.groups import (  # noqa: E402
    alternating_group,
    cyclic_group,
    dihedral_group,
    symmetric_group,
)
from permutope.perm import closure, parse_permutation  # noqa: E402


@pytest.fixture
def s3():
    return symmetric_group(3)


@pytest.fixture
def s4():
    return symmetric_group(4)


@pytest.fixture
def a4():
    return alternating_group(4)


@pytest.fixture
def c3():
    return cyclic_group(3)


@pytest.fixture
def c4():
    return cyclic_group(4)


@pytest.fixture
def d4():
    return dihedral_group(4)


@pytest.fixture
def group_of():
    """Build the group generated by cycle-notation strings on n points."""

    def _build(n, *gens):
        return closure([parse_permutation(g, n) for g in gens], n)

    return _build

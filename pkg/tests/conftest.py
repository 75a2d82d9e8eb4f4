"""Shared fixtures: the standard small groups used across the suite."""

import pytest

from twochar.groups import FiniteGroup, from_cayley_table, from_permutation_generators


def cyclic(n: int) -> FiniteGroup:
    return from_cayley_table([[(i + j) % n for j in range(n)] for i in range(n)], name=f"Z{n}")


def klein_four() -> FiniteGroup:
    return from_cayley_table([[i ^ j for j in range(4)] for i in range(4)], name="V4")


def symmetric_3() -> FiniteGroup:
    return from_permutation_generators(3, [(1, 0, 2), (1, 2, 0)], name="S3")


def dihedral_4() -> FiniteGroup:
    return from_permutation_generators(4, [(1, 2, 3, 0), (3, 2, 1, 0)], name="D4")


_QUAT_ROT = {(1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2), (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2)}


def quaternion_8() -> FiniteGroup:
    els = [(1, 0), (-1, 0), (1, 1), (-1, 1), (1, 2), (-1, 2), (1, 3), (-1, 3)]

    def qmul(x, y):
        (s1, a1), (s2, a2) = x, y
        s = s1 * s2
        if a1 == 0:
            return (s, a2)
        if a2 == 0:
            return (s, a1)
        if a1 == a2:
            return (-s, 0)
        r, a = _QUAT_ROT[(a1, a2)]
        return (s * r, a)

    table = [[els.index(qmul(x, y)) for y in els] for x in els]
    return from_cayley_table(table, name="Q8")


@pytest.fixture(scope="session")
def z4():
    return cyclic(4)


@pytest.fixture(scope="session")
def v4():
    return klein_four()


@pytest.fixture(scope="session")
def s3():
    return symmetric_3()


@pytest.fixture(scope="session")
def d4():
    return dihedral_4()


@pytest.fixture(scope="session")
def q8():
    return quaternion_8()

import json

import pytest

from qdu_typeb_hecke.Posets.bn_poset import BnPoset
from qdu_typeb_hecke.Posets.finite_poset import FinitePoset


@pytest.fixture
def chain_1():
    """-1 < 0 < 1, the poset of the identity of B_1."""
    return BnPoset.from_covers(1, [(-1, 0), (0, 1)])


@pytest.fixture
def loop_1():
    """-1 < 1 with 0 incomparable to both; not distinguished."""
    return BnPoset.from_covers(1, [(-1, 1)])


@pytest.fixture
def vee_2():
    """1, -2 < 0 < -1, 2; its extensions are [-1,2] and [2,-1]."""
    return BnPoset.from_covers(2, [(1, 0), (-2, 0), (0, -1), (0, 2)])


@pytest.fixture
def cross_2():
    """-1, 2 < 0 < 1, -2."""
    return BnPoset.from_covers(2, [(-1, 0), (2, 0), (0, 1), (0, -2)])


@pytest.fixture
def tall_3():
    """2, -1 < -3 < 0 < 3 < -2, 1."""
    return BnPoset.from_covers(3, [(2, -3), (-1, -3), (-3, 0), (0, 3), (3, -2), (3, 1)])


@pytest.fixture
def split_3():
    """-2 < 0 < 2 together with 3 < 1 and -1 < -3."""
    return BnPoset.from_covers(3, [(-2, 0), (0, 2), (3, 1), (-1, -3)])


@pytest.fixture
def wedge_3():
    """A distinguished poset whose lower subposet {0,±2,±3} at m=2 leaves nothing above it."""
    return BnPoset.from_covers(3, [(-3, -1), (-3, 0), (-2, 0), (-2, 1),
                                   (-1, 2), (0, 2), (0, 3), (1, 3)])


@pytest.fixture
def regular_6():
    return BnPoset.from_covers(6, [
        (-4, -1), (-4, 3), (-1, -2), (-1, 0), (3, 0), (3, 2), (-2, -3),
        (0, -3), (0, 1), (2, 1), (-3, 4), (1, 4), (6, 5), (-5, -6),
    ])


@pytest.fixture
def point():
    return FinitePoset.chain([1])


@pytest.fixture
def down_pair():
    """2 < 1 on [2]."""
    return FinitePoset.chain([2, 1])


@pytest.fixture
def poset_file(tmp_path):
    """Write a poset as the command line reads it and return the path."""
    def write(n, covers, name="poset.json", **extra):
        path = tmp_path / name
        path.write_text(json.dumps({"n": n, "covers": [list(c) for c in covers], **extra}))
        return path
    return write

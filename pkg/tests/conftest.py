import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from greedyext import build_poset, parse_poset

DATA = pathlib.Path(__file__).parent.parent / "data"


@pytest.fixture
def n_poset():
    # covers 0<1, 2<1, 2<3: the N
    return build_poset(4, [(0, 1), (2, 1), (2, 3)])


@pytest.fixture
def fig3():
    return parse_poset((DATA / "fig3.poset").read_text())


@pytest.fixture
def v_poset():
    # two minimals under a shared top
    return build_poset(3, [(0, 2), (1, 2)])


@pytest.fixture
def chain3():
    return build_poset(3, [(0, 1), (1, 2)])

from __future__ import annotations

import pytest

from beattymatch import Family, GFib, make_unit

PLUS_MS = (1, 2, 3)
MINUS_MS = (3, 4, 5)


def unit_grid():
    units = [make_unit(Family.PLUS, m) for m in PLUS_MS]
    units += [make_unit(Family.MINUS, m) for m in MINUS_MS]
    return units


@pytest.fixture(scope="session")
def units():
    return unit_grid()


@pytest.fixture(scope="session")
def tables(units):
    return {u: GFib.build(u) for u in units}


@pytest.fixture(scope="session")
def golden():
    return make_unit(Family.PLUS, 1)


@pytest.fixture(scope="session")
def minus3():
    return make_unit(Family.MINUS, 3)

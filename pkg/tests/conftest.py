import random

import pytest

from goppa_orbits.action import mat_canonical, mat_det
from goppa_orbits.gf2field import make_field, make_tower
from goppa_orbits.polyq import is_irreducible


@pytest.fixture(scope="session")
def gf2():
    return make_field(1)


@pytest.fixture(scope="session")
def gf8():
    return make_field(3)


@pytest.fixture(scope="session")
def gf32():
    return make_field(5)


@pytest.fixture(scope="session")
def tower_3_2():
    return make_tower(3, 2)


@pytest.fixture(scope="session")
def tower_3_5():
    return make_tower(3, 5)


@pytest.fixture(scope="session")
def tower_5_7():
    return make_tower(5, 7)


@pytest.fixture
def rng():
    return random.Random(0xC0DE)


def random_irreducible(gf, r, rnd):
    """Uniform monic irreducible of degree r, by rejection sampling."""
    while True:
        f = tuple(rnd.randrange(gf.order) for _ in range(r)) + (1,)
        if is_irreducible(gf, f):
            return f


def random_matrix(gf, rnd):
    """Uniform canonical element of PGL2(F_q)."""
    while True:
        mat = tuple(rnd.randrange(gf.order) for _ in range(4))
        if mat_det(gf, mat):
            return mat_canonical(gf, mat)


def random_semilinear(gf, frob_order, rnd):
    return random_matrix(gf, rnd), rnd.randrange(frob_order)

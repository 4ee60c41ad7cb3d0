import random

import pytest
from hypothesis import strategies as st

from knotforge.catalog import load_catalog
from knotforge.grid import Arc, ArcPresentation, validate

TREFOIL = [(1, 1, 3), (2, 2, 4), (3, 3, 5), (4, 1, 4), (5, 2, 5)]
FIGURE8 = [(1, 1, 3), (2, 2, 4), (3, 3, 6), (4, 1, 5), (5, 4, 6), (6, 2, 5)]
UNKNOT2 = [(1, 1, 2), (2, 1, 2)]


def presentation_from(order, pages) -> ArcPresentation:
    """Arcs join consecutive bindings of the cyclic ``order``; arc i gets ``pages[i]``."""
    n = len(order)
    arcs = []
    for i in range(n):
        a, b = order[i], order[(i + 1) % n]
        arcs.append(Arc(pages[i], min(a, b), max(a, b)))
    return ArcPresentation(tuple(arcs))


def random_presentation(rng: random.Random, n: int) -> ArcPresentation:
    order = list(range(1, n + 1))
    pages = list(range(1, n + 1))
    rng.shuffle(order)
    rng.shuffle(pages)
    return presentation_from(order, pages)


def random_presentations(count: int, lo: int = 4, hi: int = 8, seed: int = 2010):
    rng = random.Random(seed)
    return [random_presentation(rng, rng.randint(lo, hi)) for _ in range(count)]


@st.composite
def presentations(draw, min_n=2, max_n=8):
    n = draw(st.integers(min_n, max_n))
    order = draw(st.permutations(range(1, n + 1)))
    pages = draw(st.permutations(range(1, n + 1)))
    return presentation_from(order, pages)


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture
def trefoil():
    return validate(TREFOIL)


@pytest.fixture
def figure8():
    return validate(FIGURE8)


@pytest.fixture
def unknot2():
    return validate(UNKNOT2)

import random

import pytest

from braid_bounds.braid_core import BraidWord, free_reduce


@pytest.fixture
def trefoil():
    return BraidWord(2, (1, 1, 1))


@pytest.fixture
def left_trefoil():
    return BraidWord(2, (-1, -1, -1))


@pytest.fixture
def figure_eight():
    return BraidWord(3, (1, -2, 1, -2))


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_word(rng, strands, max_length, reduced=True, every_generator=False):
    """Random word in B_strands; optionally freely reduced and using every generator."""
    while True:
        length = rng.randint(0, max_length)
        letters = tuple(
            rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)
        ) if strands > 1 else ()
        w = BraidWord(strands, letters)
        if reduced:
            w = free_reduce(w)
        if every_generator and {abs(x) for x in w.letters} != set(range(1, strands)):
            continue
        return w


@pytest.fixture
def make_word(rng):
    def make(strands, max_length, **kwargs):
        return random_word(rng, strands, max_length, **kwargs)

    return make

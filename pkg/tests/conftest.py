import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from loopforge.groups import Presentation, Word


@pytest.fixture(scope="session")
def F3():
    return Presentation.free(3)


@pytest.fixture(scope="session")
def S2():
    return Presentation.surface(2)


@pytest.fixture
def rng():
    return random.Random(0xC0B1A)


def random_reduced_word(pres, rng, maxlen):
    n = rng.randrange(maxlen + 1)
    out = bytearray()
    alphabet = 2 * pres.rank
    while len(out) < n:
        x = rng.randrange(alphabet)
        if out and (out[-1] ^ 1) == x:
            continue
        out.append(x)
    return Word(pres, bytes(out), _reduced=True)

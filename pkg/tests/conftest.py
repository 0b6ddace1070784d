import numpy as np
import pytest

from kadjust import BitWord, PairCounts

# 35-bit running example word: 9 ones among 35 symbols.
WORD35_STR = "01010001001000001010000100000100001"

# Joint cell counts (c_ab = #{i: x_i=a, y_i=b}) of the paired fixture.
TABLE1 = dict(c00=19, c01=7, c10=6, c11=3)


@pytest.fixture
def word35() -> BitWord:
    return BitWord.from01(WORD35_STR)


@pytest.fixture
def table1_counts() -> PairCounts:
    return PairCounts(**TABLE1)


@pytest.fixture
def table1_pair() -> tuple[BitWord, BitWord]:
    """A concrete (x, y) pair realizing the fixture counts."""
    xbits, ybits = [], []
    for (a, b), c in (((0, 0), TABLE1["c00"]), ((0, 1), TABLE1["c01"]),
                      ((1, 0), TABLE1["c10"]), ((1, 1), TABLE1["c11"])):
        xbits += [a] * c
        ybits += [b] * c
    return BitWord(xbits), BitWord(ybits)


def all_words(n: int):
    """Every word of length n, in integer order."""
    for v in range(1 << n):
        yield BitWord.from_uint(v, n)


def random_word(rng: np.random.Generator, n: int) -> BitWord:
    return BitWord(rng.integers(0, 2, size=n, dtype=np.uint8))

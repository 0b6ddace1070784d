import pytest
from hypothesis import given, strategies as st

from kadjust import BitWord, BlockCounts, PairCounts, SymbolCounts, block_counts, weight

from conftest import WORD35_STR

bit_lists = st.lists(st.integers(0, 1), min_size=1, max_size=200)


class TestBitWord:
    def test_basic_construction(self):
        w = BitWord([0, 1, 1])
        assert w.n == 3 and w.weight == 2
        assert w.to01() == "011"
        assert list(w) == [0, 1, 1]

    def test_from01_round_trip(self):
        assert BitWord.from01("0101").to01() == "0101"

    def test_rejects_empty_and_nonbinary(self):
        with pytest.raises(ValueError):
            BitWord([])
        with pytest.raises(ValueError):
            BitWord([0, 2])
        with pytest.raises(ValueError):
            BitWord.from01("01a")
        with pytest.raises(ValueError):
            BitWord.from01("")

    def test_immutable(self):
        w = BitWord([1, 0])
        with pytest.raises(ValueError):
            w.bits[0] = 0

    def test_from_uint(self):
        assert BitWord.from_uint(5, 4).to01() == "0101"
        assert BitWord.from_uint(0, 3).to01() == "000"
        with pytest.raises(ValueError):
            BitWord.from_uint(8, 3)

    def test_prefix_and_equality(self):
        w = BitWord.from01("110010")
        assert w.prefix(3) == BitWord.from01("110")
        assert hash(w.prefix(3)) == hash(BitWord.from01("110"))
        with pytest.raises(ValueError):
            w.prefix(0)
        with pytest.raises(ValueError):
            w.prefix(7)


class TestWeight:
    def test_all_zeros(self):
        assert weight(BitWord.from01("0000")) == 0

    def test_all_ones(self):
        assert weight(BitWord.from01("1111")) == 4

    def test_running_example_word(self):
        assert weight(BitWord.from01(WORD35_STR)) == 9

    @given(bit_lists)
    def test_matches_sum(self, bits):
        assert weight(BitWord(bits)) == sum(bits)


class TestCounts:
    def test_symbol_counts(self):
        sc = SymbolCounts.from_word(BitWord.from01("0110"))
        assert (sc.n0, sc.n1, sc.p) == (2, 2, 0.5)

    def test_symbol_counts_validation(self):
        with pytest.raises(ValueError):
            SymbolCounts(0, 0)
        with pytest.raises(ValueError):
            SymbolCounts(-1, 2)

    def test_pair_counts_from_words(self):
        x = BitWord.from01("0011")
        y = BitWord.from01("0101")
        pc = PairCounts.from_words(x, y)
        assert (pc.c00, pc.c01, pc.c10, pc.c11) == (1, 1, 1, 1)
        assert pc.n == 4
        assert pc.x_counts == SymbolCounts(2, 2)
        assert pc.y_counts == SymbolCounts(2, 2)

    def test_pair_counts_length_mismatch(self):
        with pytest.raises(ValueError):
            PairCounts.from_words(BitWord.from01("01"), BitWord.from01("011"))

    @given(bit_lists, st.randoms())
    def test_pair_counts_total(self, bits, rnd):
        y = [rnd.randint(0, 1) for _ in bits]
        pc = PairCounts.from_words(BitWord(bits), BitWord(y))
        assert pc.n == len(bits)


class TestBlockCounts:
    def test_direct_reading(self):
        bc = block_counts(BitWord.from01("000111"))
        assert bc == BlockCounts(b00=1, b01=1, b10=0, b11=1, tail=0)

    def test_single_bit(self):
        bc = block_counts(BitWord.from01("0"))
        assert bc == BlockCounts(0, 0, 0, 0, tail=1)

    def test_block_order_is_first_then_second(self):
        assert block_counts(BitWord.from01("10")).b10 == 1
        assert block_counts(BitWord.from01("01")).b01 == 1

    @given(bit_lists)
    def test_block_identity(self, bits):
        bc = block_counts(BitWord(bits))
        assert 2 * bc.num_blocks + bc.tail == len(bits)
        assert bc.tail == len(bits) % 2
        assert bc.n == len(bits)

import pytest
from hypothesis import given, strategies as st

from kadjust import BitWord
from kadjust.inputs import InputSource, format_word, parse_word


class TestParseWord:
    def test_ascii01_with_line_breaks(self):
        assert parse_word(b"0101\n0011\r\n", "ascii01") == BitWord.from01("01010011")

    def test_ascii01_rejects_other_characters(self):
        for payload in (b"01 01", b"0a1", b"2"):
            with pytest.raises(ValueError):
                parse_word(payload, "ascii01")

    def test_raw_is_msb_first(self):
        assert parse_word(b"\x80", "raw") == BitWord.from01("10000000")
        assert parse_word(b"\x01\xff", "raw") == BitWord.from01("0000000111111111")

    def test_hex(self):
        assert parse_word(b"80", "hex") == BitWord.from01("10000000")
        assert parse_word(b"0 1\nff", "hex") == BitWord.from01("0000000111111111")

    def test_cap_applies_after_expansion(self):
        assert parse_word(b"\xf0", "raw", max_bits=4) == BitWord.from01("1111")
        assert parse_word(b"0101", "ascii01", max_bits=2) == BitWord.from01("01")

    def test_empty_inputs(self):
        for fmt in ("ascii01", "raw", "hex"):
            with pytest.raises(ValueError):
                parse_word(b"", fmt)
        with pytest.raises(ValueError):
            parse_word(b"\n", "ascii01")

    def test_source_validation(self):
        with pytest.raises(ValueError):
            InputSource(format="base64")
        with pytest.raises(ValueError):
            InputSource(max_bits=0)


class TestFormatWord:
    def test_ascii01(self):
        assert format_word(BitWord.from01("0101"), "ascii01") == b"0101"

    def test_raw_pads_to_byte(self):
        assert format_word(BitWord.from01("1"), "raw") == b"\x80"

    def test_hex(self):
        assert format_word(BitWord.from01("10000000"), "hex") == b"80"

    @given(st.lists(st.integers(0, 1), min_size=8, max_size=128).filter(lambda b: len(b) % 8 == 0))
    def test_ascii_raw_ascii_round_trip(self, bits):
        word = BitWord(bits)
        raw = format_word(word, "raw")
        back = parse_word(format_word(parse_word(raw, "raw"), "ascii01"), "ascii01")
        assert back == word

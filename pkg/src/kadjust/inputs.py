"""Reading and writing words in the supported exchange formats.

ascii01   the characters 0 and 1, line breaks allowed and ignored
raw       every byte expands to 8 bits, most-significant-bit first
hex       hexadecimal text for the same byte expansion

An optional bit cap truncates after expansion.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

import numpy as np

from .words import BitWord

INPUT_FORMATS = ("ascii01", "raw", "hex")


@dataclass(frozen=True)
class InputSource:
    """Where and how to read one word; path None means standard input."""

    format: str = "ascii01"
    path: str | None = None
    max_bits: int | None = None

    def __post_init__(self):
        if self.format not in INPUT_FORMATS:
            raise ValueError(f"unknown input format {self.format!r}")
        if self.max_bits is not None and self.max_bits < 1:
            raise ValueError("max_bits must be >= 1")


def _read_payload(source: InputSource) -> bytes:
    if source.path is None or source.path == "-":
        return sys.stdin.buffer.read()
    with open(source.path, "rb") as fh:
        return fh.read()


def parse_word(payload: bytes, fmt: str, max_bits: int | None = None) -> BitWord:
    """Decode a word from raw file content in the given format."""
    if fmt == "ascii01":
        cleaned = payload.translate(None, b"\r\n")
        if cleaned.translate(None, b"01"):
            bad = cleaned.translate(None, b"01")[:1]
            raise ValueError(f"ascii01 input admits only 0, 1 and line breaks, got {bad!r}")
        if not cleaned:
            raise ValueError("empty input")
        bits = np.frombuffer(cleaned, dtype=np.uint8) - ord("0")
    elif fmt == "raw":
        if not payload:
            raise ValueError("empty input")
        bits = np.unpackbits(np.frombuffer(payload, dtype=np.uint8))
    elif fmt == "hex":
        text = "".join(payload.decode("ascii", errors="strict").split())
        if not text:
            raise ValueError("empty input")
        bits = np.unpackbits(np.frombuffer(bytes.fromhex(text), dtype=np.uint8))
    else:
        raise ValueError(f"unknown input format {fmt!r}")
    if max_bits is not None:
        bits = bits[:max_bits]
    return BitWord(bits)


def read_word(source: InputSource) -> BitWord:
    return parse_word(_read_payload(source), source.format, source.max_bits)


def format_word(word: BitWord, fmt: str) -> bytes:
    """Serialize a word: MSB-first byte packing for raw/hex, digits for ascii01."""
    if fmt == "ascii01":
        return word.to01().encode("ascii")
    packed = np.packbits(word.bits).tobytes()
    if fmt == "raw":
        return packed
    if fmt == "hex":
        return packed.hex().encode("ascii")
    raise ValueError(f"unknown input format {fmt!r}")

"""Computable description-length coders.

Each coder maps a word to a CodeResult holding an idealized real-valued
length and, for the concrete coders, an integer codeword length realized by
an actual encoder/decoder pair that is prefix-free once the word length n
is known as side information.

Built-in coders:

  literal     n bits, the word verbatim.
  shell       weight header plus in-shell lexicographic rank.
  run_length  leading bit plus Elias gamma code of every maximal run.
  periodic    best period P <= p_max: pattern plus coded mismatch positions.
  pair_shell  multinomial index over disjoint 2-bit block counts (ideal only).
  model_class 3-bit model tag plus the best of the above.

Tie-breaks are deterministic: smallest period for periodic, listed order
for model_class.
"""

from __future__ import annotations

import math
import subprocess
from dataclasses import dataclass

import numpy as np

from .bitio import BitReader, BitWriter, DecodeError, elias_gamma_len
from .entropy import block_shell_log_size, ceil_log2
from .shellcode import (
    code_len_shell_ideal,
    concrete_len_shell,
    decode_shell,
    encode_shell,
)
from .words import BitWord, block_counts

CODER_NAMES = ("literal", "shell", "run_length", "periodic", "pair_shell", "model_class")

DEFAULT_P_MAX = 32
MODEL_TAG_BITS = 3
# Order fixes both the model tag values and the model_class tie-break.
MODEL_MEMBERS = ("literal", "shell", "run_length", "periodic", "pair_shell")


@dataclass(frozen=True)
class CoderId:
    """Identifies a coder; p_max applies to the periodic coder only."""

    name: str
    p_max: int | None = None

    def __post_init__(self):
        if self.name not in CODER_NAMES and self.name != "external":
            raise ValueError(f"unknown coder {self.name!r}")
        if self.name == "periodic":
            if self.p_max is None:
                object.__setattr__(self, "p_max", DEFAULT_P_MAX)
            elif self.p_max < 1:
                raise ValueError("p_max must be >= 1")
        elif self.p_max is not None:
            raise ValueError(f"coder {self.name!r} takes no p_max parameter")

    @property
    def label(self) -> str:
        if self.name == "periodic" and self.p_max != DEFAULT_P_MAX:
            return f"periodic(p_max={self.p_max})"
        return self.name


@dataclass(frozen=True)
class CodeResult:
    """Description length of one word under one coder.

    concrete_len is None for purely ideal coders (pair_shell); model_tag
    names the winning sub-model for model_class.
    """

    coder: CoderId
    ideal_len: float
    concrete_len: int | None
    model_tag: str | None = None

    def length(self, kind: str = "ideal") -> float:
        if kind == "ideal":
            return self.ideal_len
        if kind == "concrete":
            if self.concrete_len is None:
                raise ValueError(f"coder {self.coder.label} has no concrete code")
            return float(self.concrete_len)
        raise ValueError(f"unknown length kind {kind!r}")


def coder_from_name(name: str, p_max: int | None = None) -> CoderId:
    """Resolve a CLI-style coder name to a CoderId."""
    if name == "periodic":
        return CoderId("periodic", p_max if p_max is not None else DEFAULT_P_MAX)
    if p_max is not None:
        raise ValueError(f"coder {name!r} takes no p_max parameter")
    return CoderId(name)


def is_concrete(coder: CoderId) -> bool:
    return coder.name in ("literal", "shell", "run_length", "periodic", "model_class")


def concrete_coder_ids() -> tuple[CoderId, ...]:
    """All built-in coders with a concrete prefix-free code."""
    return (
        CoderId("literal"),
        CoderId("shell"),
        CoderId("run_length"),
        CoderId("periodic"),
        CoderId("model_class"),
    )


# ---------------------------------------------------------------------------
# lengths


def k_len(word: BitWord) -> CodeResult:
    """Literal code: the word costs exactly its own length."""
    return CodeResult(CoderId("literal"), float(word.n), word.n)


def k_comb(word: BitWord) -> CodeResult:
    """Combinatorial shell code: weight header plus in-shell rank."""
    return CodeResult(
        CoderId("shell"),
        code_len_shell_ideal(word),
        concrete_len_shell(word.n, word.weight),
    )


def run_lengths(word: BitWord) -> list[int]:
    """Lengths of the maximal constant runs, left to right."""
    bits = word.bits
    breaks = np.flatnonzero(np.diff(bits)) + 1
    edges = np.concatenate([[0], breaks, [bits.size]])
    return np.diff(edges).tolist()


def k_run_length(word: BitWord) -> CodeResult:
    """First bit plus an Elias gamma code for every run length."""
    total = 1 + sum(elias_gamma_len(r) for r in run_lengths(word))
    return CodeResult(CoderId("run_length"), float(total), total)


def _periodic_cost(n: int, p: int, mismatches: int) -> int:
    return (
        elias_gamma_len(p)
        + p
        + elias_gamma_len(mismatches + 1)
        + mismatches * ceil_log2(n + 1)
    )


def _best_period(word: BitWord, p_max: int) -> tuple[int, int]:
    """(period, mismatch count) minimizing the periodic cost; smallest period wins ties."""
    bits = word.bits
    n = bits.size
    best_p, best_cost, best_r = 1, None, 0
    for p in range(1, min(p_max, n) + 1):
        tiled = np.resize(bits[:p], n)
        r = int(np.count_nonzero(bits[p:] != tiled[p:]))
        cost = _periodic_cost(n, p, r)
        if best_cost is None or cost < best_cost:
            best_p, best_cost, best_r = p, cost, r
    return best_p, best_r


def k_periodic(word: BitWord, p_max: int = DEFAULT_P_MAX) -> CodeResult:
    """Best-period pattern code with explicitly indexed mismatch positions."""
    if p_max < 1:
        raise ValueError("p_max must be >= 1")
    p, r = _best_period(word, p_max)
    total = _periodic_cost(word.n, p, r)
    return CodeResult(CoderId("periodic", p_max), float(total), total)


def k_pair_shell(word: BitWord) -> CodeResult:
    """Multinomial index over the disjoint 2-bit block counts (ideal lengths only)."""
    bc = block_counts(word)
    ideal = (
        block_shell_log_size(bc)
        + 4 * math.log2(bc.num_blocks + 1)
        + (1.0 if bc.tail else 0.0)
    )
    return CodeResult(CoderId("pair_shell"), ideal, None)


def _member_results(word: BitWord) -> list[CodeResult]:
    return [
        k_len(word),
        k_comb(word),
        k_run_length(word),
        k_periodic(word, DEFAULT_P_MAX),
        k_pair_shell(word),
    ]


def k_model_class(word: BitWord) -> CodeResult:
    """Fixed 3-bit model tag plus the best member coder.

    The ideal length takes the minimum over member ideal lengths; the
    concrete length takes the minimum over members that have a concrete
    code.  model_tag reports the ideal winner (first in MODEL_MEMBERS on
    ties).
    """
    members = _member_results(word)
    best = min(range(len(members)), key=lambda i: (members[i].ideal_len, i))
    concrete = MODEL_TAG_BITS + min(
        m.concrete_len for m in members if m.concrete_len is not None
    )
    return CodeResult(
        CoderId("model_class"),
        MODEL_TAG_BITS + members[best].ideal_len,
        concrete,
        model_tag=MODEL_MEMBERS[best],
    )


_LENGTH_FUNCS = {
    "literal": k_len,
    "shell": k_comb,
    "run_length": k_run_length,
    "pair_shell": k_pair_shell,
    "model_class": k_model_class,
}


def code_word(coder: CoderId, word: BitWord) -> CodeResult:
    """Score a word under the chosen coder."""
    if coder.name == "periodic":
        return k_periodic(word, coder.p_max)
    try:
        return _LENGTH_FUNCS[coder.name](word)
    except KeyError:
        raise ValueError(f"coder {coder.label} cannot score words") from None


# ---------------------------------------------------------------------------
# concrete encoders / decoders


def _encode_run_length(word: BitWord, out: BitWriter) -> None:
    out.write_bit(word[0])
    for r in run_lengths(word):
        out.write_elias_gamma(r)


def _decode_run_length(n: int, reader: BitReader) -> BitWord:
    bit = reader.read_bit()
    bits: list[int] = []
    while len(bits) < n:
        r = reader.read_elias_gamma()
        if len(bits) + r > n:
            raise DecodeError("run overruns the declared word length")
        bits.extend([bit] * r)
        bit ^= 1
    return BitWord(bits)


def _encode_periodic(word: BitWord, p_max: int, out: BitWriter) -> None:
    n = word.n
    p, _ = _best_period(word, p_max)
    tiled = np.resize(word.bits[:p], n)
    positions = (np.flatnonzero(word.bits[p:] != tiled[p:]) + p).tolist()
    out.write_elias_gamma(p)
    out.write_bits(word.bits[:p])
    out.write_elias_gamma(len(positions) + 1)
    width = ceil_log2(n + 1)
    for pos in positions:
        out.write_uint(pos, width)


def _decode_periodic(n: int, reader: BitReader) -> BitWord:
    p = reader.read_elias_gamma()
    if p > n:
        raise DecodeError(f"period {p} exceeds word length {n}")
    pattern = [reader.read_bit() for _ in range(p)]
    bits = np.resize(np.array(pattern, dtype=np.uint8), n)
    r = reader.read_elias_gamma() - 1
    width = ceil_log2(n + 1)
    for _ in range(r):
        pos = reader.read_uint(width)
        if pos >= n:
            raise DecodeError(f"mismatch position {pos} out of range")
        bits[pos] ^= 1
    return BitWord(bits)


def encode_word(coder: CoderId, word: BitWord) -> np.ndarray:
    """Concrete codeword bits for the word; n is side information for decoding."""
    out = BitWriter()
    name = coder.name
    if name == "literal":
        out.write_bits(word.bits)
    elif name == "shell":
        return encode_shell(word).bits
    elif name == "run_length":
        _encode_run_length(word, out)
    elif name == "periodic":
        _encode_periodic(word, coder.p_max, out)
    elif name == "model_class":
        members = _member_results(word)
        best = min(
            (i for i in range(len(members)) if members[i].concrete_len is not None),
            key=lambda i: (members[i].concrete_len, i),
        )
        out.write_uint(best, MODEL_TAG_BITS)
        member_id = (
            CoderId("periodic", DEFAULT_P_MAX)
            if MODEL_MEMBERS[best] == "periodic"
            else CoderId(MODEL_MEMBERS[best])
        )
        out.write_bits(encode_word(member_id, word))
    else:
        raise ValueError(f"coder {coder.label} has no concrete code")
    return out.getvalue()


def decode_word(coder: CoderId, n: int, source) -> BitWord:
    """Decode a concrete codeword back to the original word of known length n."""
    reader = source if isinstance(source, BitReader) else BitReader(source)
    name = coder.name
    if name == "literal":
        return BitWord([reader.read_bit() for _ in range(n)])
    if name == "shell":
        return decode_shell(n, reader)
    if name == "run_length":
        return _decode_run_length(n, reader)
    if name == "periodic":
        return _decode_periodic(n, reader)
    if name == "model_class":
        tag = reader.read_uint(MODEL_TAG_BITS)
        if tag >= len(MODEL_MEMBERS) or MODEL_MEMBERS[tag] == "pair_shell":
            raise DecodeError(f"invalid model tag {tag}")
        member = MODEL_MEMBERS[tag]
        member_id = CoderId("periodic", DEFAULT_P_MAX) if member == "periodic" else CoderId(member)
        return decode_word(member_id, n, reader)
    raise ValueError(f"coder {coder.label} has no concrete code")


# ---------------------------------------------------------------------------
# external compressor adapter


class ExternalCompressor:
    """Adapter for a deterministic external executable used as a coder.

    The word is packed MSB-first into bytes and piped to the command; the
    description length is 8 bits per output byte.  The resulting code is
    not prefix-free, so it is excluded from Kraft and counting audits.
    """

    def __init__(self, command: list[str]):
        if not command:
            raise ValueError("command must be nonempty")
        self.command = list(command)
        self.id = CoderId("external")

    def code(self, word: BitWord) -> CodeResult:
        payload = np.packbits(word.bits).tobytes()
        proc = subprocess.run(
            self.command, input=payload, stdout=subprocess.PIPE, check=True
        )
        bits = 8 * len(proc.stdout)
        return CodeResult(self.id, float(bits), bits)

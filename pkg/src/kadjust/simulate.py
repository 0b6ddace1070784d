"""Seeded generators for the studied measure families plus trace drivers.

All randomness flows through SplitMix64 with the fixed constants below, so
output is bit-identical across runs and platforms for a given seed.  The
generator is counter-based (output i is mix64(seed + i*GAMMA)), which lets
the vectorized paths reproduce the sequential stream exactly.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .coders import CoderId, code_word
from .entropy import binary_entropy
from .stats import adjusted, ConstantWordError
from .words import BitWord

GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_MASK = (1 << 64) - 1


def mix64(z: int) -> int:
    """SplitMix64 finalizer."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Sequential SplitMix64 stream; reference for the vectorized paths."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + GAMMA) & _MASK
        return mix64(self._state)

    def next_float(self) -> float:
        """Uniform in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53


def splitmix_outputs(seed: int, count: int) -> np.ndarray:
    """The first `count` outputs of SplitMix64(seed), vectorized."""
    idx = np.arange(1, count + 1, dtype=np.uint64)
    z = np.uint64(seed & _MASK) + idx * np.uint64(GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


def uniform_floats(seed: int, count: int) -> np.ndarray:
    return (splitmix_outputs(seed, count) >> np.uint64(11)).astype(np.float64) * 2.0**-53


def derive_seed(seed: int, index: int) -> int:
    """Independent child seed for stream `index`; mirrors splitmix_outputs."""
    return mix64((seed + (index + 1) * GAMMA) & _MASK)


GENERATOR_KINDS = ("bernoulli", "mixture", "block")


@dataclass(frozen=True)
class GeneratorSpec:
    """A seeded source: Bernoulli(p), a finite Bernoulli mixture, or the
    uniform {00,01,11} block source."""

    kind: str
    seed: int
    length: int
    p: float | None = None
    components: tuple[tuple[float, float], ...] | None = None

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.length < 1:
            raise ValueError("length must be >= 1")
        object.__setattr__(self, "seed", self.seed & _MASK)
        if self.kind == "bernoulli":
            if self.p is None or not 0.0 < self.p < 1.0:
                raise ValueError("bernoulli requires p in (0,1)")
        elif self.kind == "mixture":
            comps = self.components
            if not comps:
                raise ValueError("mixture requires at least one component")
            if any(w <= 0 for w, _ in comps):
                raise ValueError("mixture weights must be positive")
            if any(not 0.0 < p < 1.0 for _, p in comps):
                raise ValueError("mixture components require p in (0,1)")
            if abs(sum(w for w, _ in comps) - 1.0) > 1e-9:
                raise ValueError("mixture weights must sum to 1")
            object.__setattr__(self, "components", tuple((float(w), float(p)) for w, p in comps))
        elif self.p is not None or self.components is not None:
            raise ValueError("block generator takes no parameters")

    @classmethod
    def bernoulli(cls, p: float, seed: int, length: int) -> "GeneratorSpec":
        return cls(kind="bernoulli", seed=seed, length=length, p=p)

    @classmethod
    def mixture(cls, components, seed: int, length: int) -> "GeneratorSpec":
        return cls(kind="mixture", seed=seed, length=length, components=tuple(components))

    @classmethod
    def block(cls, seed: int, length: int) -> "GeneratorSpec":
        return cls(kind="block", seed=seed, length=length)


def _bernoulli_bits(p: float, seed: int, length: int) -> np.ndarray:
    return (uniform_floats(seed, length) < p).astype(np.uint8)


def generate(spec: GeneratorSpec) -> BitWord:
    """Emit the word determined by the spec; identical seeds give identical bits."""
    if spec.kind == "bernoulli":
        return BitWord(_bernoulli_bits(spec.p, spec.seed, spec.length))
    if spec.kind == "mixture":
        rng = SplitMix64(spec.seed)
        u = rng.next_float()
        cum = 0.0
        chosen = spec.components[-1][1]
        for w, p in spec.components:
            cum += w
            if u < cum:
                chosen = p
                break
        stream_seed = rng.next_u64()
        return BitWord(_bernoulli_bits(chosen, stream_seed, spec.length))
    # block: uniform over {00, 01, 11}; block 10 never occurs.
    nblocks = (spec.length + 1) // 2
    u = uniform_floats(spec.seed, nblocks)
    idx = np.minimum((u * 3).astype(np.int64), 2)
    bits = np.empty(2 * nblocks, dtype=np.uint8)
    bits[0::2] = idx == 2
    bits[1::2] = idx >= 1
    return BitWord(bits[: spec.length])


@dataclass(frozen=True)
class TraceRow:
    m: int
    p_hat: float
    H: float
    k_eff: float
    R: float | None  # None marks a constant prefix


@dataclass(frozen=True)
class ConvergenceTrace:
    coder: CoderId
    rows: tuple[TraceRow, ...]

    def final(self) -> TraceRow:
        return self.rows[-1]

    def to_csv(self, fileobj) -> None:
        writer = csv.writer(fileobj)
        writer.writerow(["m", "p_hat", "H", "K_eff", "R", "coder"])
        for row in self.rows:
            writer.writerow(
                [
                    row.m,
                    f"{row.p_hat:.6g}",
                    f"{row.H:.6g}",
                    f"{row.k_eff:.6g}",
                    "" if row.R is None else f"{row.R:.6g}",
                    self.coder.label,
                ]
            )


def geometric_schedule(length: int, start: int = 16, factor: float = 2.0) -> list[int]:
    """Strictly increasing prefix lengths from `start`, ending exactly at `length`."""
    if length < 1:
        raise ValueError("length must be >= 1")
    points: list[int] = []
    m = float(min(start, length))
    while True:
        v = min(int(math.ceil(m)), length)
        if not points or v > points[-1]:
            points.append(v)
        if v >= length:
            return points
        m *= factor


def convergence_trace(
    spec: GeneratorSpec, coder: CoderId, schedule: Sequence[int]
) -> ConvergenceTrace:
    """Adjusted statistics along prefixes of one generated word."""
    schedule = list(schedule)
    if not schedule:
        raise ValueError("schedule must be nonempty")
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise ValueError("schedule must be strictly increasing")
    if schedule[0] < 1 or schedule[-1] > spec.length:
        raise ValueError("schedule out of range for the generated length")
    word = generate(spec)
    ones = np.concatenate([[0], np.cumsum(word.bits, dtype=np.int64)])
    rows = []
    for m in schedule:
        prefix = word.prefix(m)
        k = int(ones[m])
        p_hat = k / m
        try:
            rep = adjusted(prefix, coder)
            rows.append(TraceRow(m=m, p_hat=p_hat, H=rep.H, k_eff=rep.k_eff, R=rep.R))
        except ConstantWordError:
            k_eff = code_word(coder, prefix).ideal_len
            rows.append(TraceRow(m=m, p_hat=p_hat, H=0.0, k_eff=k_eff, R=None))
    return ConvergenceTrace(coder=coder, rows=tuple(rows))


def entropy_rate_estimate(spec: GeneratorSpec, coder: CoderId, m: int) -> float:
    """K_eff(prefix of length m) / m, the effective stand-in for the entropy rate."""
    if m < 1000:
        raise ValueError("entropy rate estimation requires m >= 1000")
    word = generate(replace(spec, length=m))
    return code_word(coder, word).ideal_len / m


def empirical_entropy(word: BitWord) -> float:
    """Single-symbol empirical entropy of a word, bits per symbol."""
    return binary_entropy(word.weight / word.n)

"""Entropy-adjusted complexity reports.

The central statistic is the ratio R = K_eff / (n * H) of a computable
description length to the empirical-entropy baseline, together with its
scale KA = K_eff / H and the deficiency n*H - K_eff.  Conditional and
mutual variants swap in the empirical conditional entropy and empirical
mutual information baselines.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .coders import CoderId, code_word
from .entropy import (
    binary_entropy,
    conditional_entropy,
    log2_multinomial,
    mutual_information_emp,
)
from .words import BitWord, PairCounts, SymbolCounts

logger = logging.getLogger(__name__)


class ConstantWordError(ValueError):
    """The empirical (or conditional) entropy baseline is zero."""


class ZeroMutualBaselineError(ValueError):
    """The empirical mutual information baseline is (numerically) zero."""


def sig6(value):
    """Round a float to 6 significant digits for serialized reports."""
    if value is None:
        return None
    return float(f"{value:.6g}")


@dataclass(frozen=True)
class AdjustedReport:
    """Statistic bundle for one word under one coder."""

    n: int
    w: int
    H: float
    baseline: float
    k_eff: float
    KA: float
    R: float
    deficiency: float
    coder: CoderId

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "w": self.w,
            "H": sig6(self.H),
            "baseline": sig6(self.baseline),
            "k_eff": sig6(self.k_eff),
            "KA": sig6(self.KA),
            "R": sig6(self.R),
            "deficiency": sig6(self.deficiency),
            "coder": self.coder.label,
        }


@dataclass(frozen=True)
class ConditionalReport:
    """Adjusted statistics of x against the conditional baseline given y."""

    n: int
    H_cond: float
    baseline: float
    k_eff_cond: float
    KA_cond: float
    R_cond: float
    deficiency_cond: float
    coder: CoderId

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "H_cond": sig6(self.H_cond),
            "baseline": sig6(self.baseline),
            "k_eff_cond": sig6(self.k_eff_cond),
            "KA_cond": sig6(self.KA_cond),
            "R_cond": sig6(self.R_cond),
            "deficiency_cond": sig6(self.deficiency_cond),
            "coder": self.coder.label,
        }


@dataclass(frozen=True)
class MutualReport:
    """Effective mutual information of a pair against the empirical baseline.

    I_eff can be negative for surrogate coders; it is reported as-is.
    """

    n: int
    I_emp: float
    I_eff: float
    KA_mutual: float
    R_mutual: float

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "I_emp": sig6(self.I_emp),
            "I_eff": sig6(self.I_eff),
            "KA_mutual": sig6(self.KA_mutual),
            "R_mutual": sig6(self.R_mutual),
        }


def adjusted(word: BitWord, coder: CoderId, lengths: str = "ideal") -> AdjustedReport:
    """Full adjusted-complexity report for a word under the chosen coder.

    Raises ConstantWordError for constant words, whose entropy baseline is
    zero.
    """
    counts = SymbolCounts.from_word(word)
    h = binary_entropy(counts.p)
    if h == 0.0:
        raise ConstantWordError("adjusted complexity is undefined for constant words")
    result = code_word(coder, word)
    k_eff = result.length(lengths)
    baseline = word.n * h
    return AdjustedReport(
        n=word.n,
        w=counts.n1,
        H=h,
        baseline=baseline,
        k_eff=k_eff,
        KA=k_eff / h,
        R=k_eff / baseline,
        deficiency=baseline - k_eff,
        coder=result.coder,
    )


def conditional_code_len(
    x: BitWord, y: BitWord, coder: CoderId, lengths: str = "ideal"
) -> float:
    """Description length of x coded separately within each y-value class.

    The coordinates of x are split by the value of y and each class
    subword is scored by the coder on its own; empty classes cost nothing.
    With the shell coder this is the two-class conditional shell code.
    """
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} vs {y.n}")
    total = 0.0
    ybits = y.bits
    for b in (0, 1):
        idx = np.flatnonzero(ybits == b)
        if idx.size:
            total += code_word(coder, BitWord(x.bits[idx])).length(lengths)
    return total


def adjusted_conditional(
    x: BitWord, y: BitWord, coder: CoderId, lengths: str = "ideal"
) -> ConditionalReport:
    """Adjusted statistics of x against the baseline n * H_emp(X|Y)."""
    pc = PairCounts.from_words(x, y)
    h_cond = conditional_entropy(pc)
    if h_cond == 0.0:
        raise ConstantWordError("conditional entropy baseline is zero")
    k_eff = conditional_code_len(x, y, coder, lengths)
    baseline = x.n * h_cond
    return ConditionalReport(
        n=x.n,
        H_cond=h_cond,
        baseline=baseline,
        k_eff_cond=k_eff,
        KA_cond=k_eff / h_cond,
        R_cond=k_eff / baseline,
        deficiency_cond=baseline - k_eff,
        coder=coder,
    )


def joint_pair_code_len(pc: PairCounts) -> float:
    """Ideal length of the four-cell code for an aligned pair of words.

    Multinomial index over the cell counts plus three log2(n+1) headers
    (the fourth count is implied by n).
    """
    n = pc.n
    return log2_multinomial((pc.c00, pc.c01, pc.c10, pc.c11)) + 3 * math.log2(n + 1)


ZERO_MUTUAL_EPS = 1e-6


def adjusted_mutual(
    x: BitWord, y: BitWord, coder: CoderId, lengths: str = "ideal"
) -> MutualReport:
    """Effective mutual information report for an equal-length pair.

    I_eff = K_eff(x) + K_eff(y) - K_eff(x,y), with the joint coded by the
    four-cell pair code.  Raises ZeroMutualBaselineError when the empirical
    mutual information is below ZERO_MUTUAL_EPS.
    """
    pc = PairCounts.from_words(x, y)
    i_emp = mutual_information_emp(pc)
    if i_emp < ZERO_MUTUAL_EPS:
        raise ZeroMutualBaselineError(
            f"empirical mutual information {i_emp:.3g} is below {ZERO_MUTUAL_EPS}"
        )
    i_eff = (
        code_word(coder, x).length(lengths)
        + code_word(coder, y).length(lengths)
        - joint_pair_code_len(pc)
    )
    if i_eff < 0:
        logger.warning(
            "effective mutual information is negative (%.4g bits); "
            "surrogate coders do not guarantee nonnegativity",
            i_eff,
        )
    n = x.n
    return MutualReport(
        n=n,
        I_emp=i_emp,
        I_eff=i_eff,
        KA_mutual=i_eff / i_emp,
        R_mutual=i_eff / (n * i_emp),
    )

"""Entropy-adjusted description-length statistics for binary words.

The package computes the normalized ratio R = K_eff / (n * H) of a
computable description length to the empirical-entropy baseline of a word,
the adjusted scale KA = K_eff / H, and the deficiency n * H - K_eff, and
builds calibrated randomness tests and seeded simulation experiments on
top of them.
"""

from .coders import (
    CODER_NAMES,
    CodeResult,
    CoderId,
    coder_from_name,
    code_word,
    concrete_coder_ids,
    decode_word,
    encode_word,
    k_comb,
    k_len,
    k_model_class,
    k_pair_shell,
    k_periodic,
    k_run_length,
)
from .entropy import (
    binary_entropy,
    block_shell_log_size,
    conditional_entropy,
    log2_multinomial,
    mutual_information_emp,
    shell_log_size,
    shell_size,
)
from .shellcode import (
    ShellCodeword,
    ShellId,
    code_len_shell_ideal,
    decode_shell,
    encode_shell,
    rank,
    unrank,
)
from .simulate import (
    ConvergenceTrace,
    GeneratorSpec,
    SplitMix64,
    convergence_trace,
    entropy_rate_estimate,
    generate,
    geometric_schedule,
)
from .stats import (
    AdjustedReport,
    ConditionalReport,
    ConstantWordError,
    MutualReport,
    ZeroMutualBaselineError,
    adjusted,
    adjusted_conditional,
    adjusted_mutual,
)
from .testing import (
    PrefixScanResult,
    TestConfig,
    TestVerdict,
    counting_lemma_audit,
    monte_carlo_fpr,
    prefix_scan,
    test_word,
)
from .words import BitWord, BlockCounts, PairCounts, SymbolCounts, block_counts, weight

__all__ = [
    "AdjustedReport",
    "BitWord",
    "BlockCounts",
    "CODER_NAMES",
    "CodeResult",
    "CoderId",
    "ConditionalReport",
    "ConstantWordError",
    "ConvergenceTrace",
    "GeneratorSpec",
    "MutualReport",
    "PairCounts",
    "PrefixScanResult",
    "ShellCodeword",
    "ShellId",
    "SplitMix64",
    "SymbolCounts",
    "TestConfig",
    "TestVerdict",
    "ZeroMutualBaselineError",
    "adjusted",
    "adjusted_conditional",
    "adjusted_mutual",
    "binary_entropy",
    "block_counts",
    "block_shell_log_size",
    "code_len_shell_ideal",
    "code_word",
    "coder_from_name",
    "concrete_coder_ids",
    "conditional_entropy",
    "convergence_trace",
    "counting_lemma_audit",
    "decode_shell",
    "decode_word",
    "encode_shell",
    "encode_word",
    "entropy_rate_estimate",
    "generate",
    "geometric_schedule",
    "k_comb",
    "k_len",
    "k_model_class",
    "k_pair_shell",
    "k_periodic",
    "k_run_length",
    "log2_multinomial",
    "monte_carlo_fpr",
    "mutual_information_emp",
    "prefix_scan",
    "rank",
    "shell_log_size",
    "shell_size",
    "test_word",
    "unrank",
    "weight",
]

__version__ = "0.1.0"

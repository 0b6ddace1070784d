"""Entropy and shell-size arithmetic on exact integer combinatorics.

Binomial and multinomial coefficients are evaluated as exact arbitrary
precision integers (directly for moderate sizes, via their exact prime
factorization for very large ones) and the logarithm is taken last, so no
Stirling-style drift enters the downstream baselines.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .words import BlockCounts, PairCounts

# Above this total the log of a binomial/multinomial is evaluated from the
# exact prime factorization instead of materializing the integer.
_BIG_N = 4096


def binary_entropy(p: float) -> float:
    """Binary entropy of p in bits per symbol, with 0*log2(0) = 0."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability out of range: {p}")
    if p == 0.0 or p == 1.0:
        return 0.0
    q = 1.0 - p
    return -p * math.log2(p) - q * math.log2(q)


def shell_size(n: int, k: int) -> int:
    """Exact number of length-n words of weight k."""
    if n < 1 or k < 0 or k > n:
        raise ValueError(f"invalid shell ({n},{k})")
    return math.comb(n, k)


def shell_log_size(n: int, k: int) -> float:
    """log2 of the exact binomial coefficient C(n, k)."""
    if n < 1 or k < 0 or k > n:
        raise ValueError(f"invalid shell ({n},{k})")
    if n <= _BIG_N:
        return _log2_comb_small(n, k)
    return _log2_from_exponents(_comb_prime_exponents(n, k))


def block_shell_log_size(bc: BlockCounts) -> float:
    """log2 of the exact multinomial counting arrangements of the 2-bit blocks."""
    return log2_multinomial(bc.as_tuple())


def log2_multinomial(counts) -> float:
    """log2 of the exact multinomial coefficient (sum counts)! / prod(counts!)."""
    counts = [int(c) for c in counts]
    if any(c < 0 for c in counts):
        raise ValueError("counts must be nonnegative")
    total = sum(counts)
    if total <= _BIG_N:
        value = 1
        remaining = total
        for c in counts:
            value *= math.comb(remaining, c)
            remaining -= c
        return math.log2(value) if value > 1 else 0.0
    exps = _factorial_prime_exponents(total)
    for c in counts:
        exps = exps - _factorial_prime_exponents(c, upto=total)
    return _log2_from_exponents((_primes_upto(total), exps))


def conditional_entropy(pc: PairCounts) -> float:
    """Empirical conditional entropy H(X|Y) in bits per symbol.

    Conditioning classes with zero mass contribute zero.
    """
    n = pc.n
    total = 0.0
    for n1b, n0b in ((pc.c11, pc.c01), (pc.c10, pc.c00)):
        nb = n0b + n1b
        if nb > 0:
            total += (nb / n) * binary_entropy(n1b / nb)
    return total


def mutual_information_emp(pc: PairCounts) -> float:
    """Empirical mutual information H(X) + H(Y) - H(X,Y) in bits per symbol."""
    n = pc.n
    hx = binary_entropy(pc.x_counts.p)
    hy = binary_entropy(pc.y_counts.p)
    hxy = 0.0
    for c in (pc.c00, pc.c01, pc.c10, pc.c11):
        if c > 0:
            hxy -= (c / n) * math.log2(c / n)
    return hx + hy - hxy


def joint_entropy_emp(pc: PairCounts) -> float:
    """Empirical joint entropy of the aligned pair cells, bits per symbol."""
    n = pc.n
    h = 0.0
    for c in (pc.c00, pc.c01, pc.c10, pc.c11):
        if c > 0:
            h -= (c / n) * math.log2(c / n)
    return h


def ceil_log2(m: int) -> int:
    """Smallest integer w with 2**w >= m, for m >= 1."""
    if m < 1:
        raise ValueError("m must be positive")
    return (m - 1).bit_length()


def ceil_log2_comb(n: int, k: int) -> int:
    """ceil_log2 of the exact binomial, without materializing it when huge.

    The factorized log is trusted when it is far from an integer; near a
    boundary the exact integer decides.
    """
    if n <= _BIG_N:
        size = math.comb(n, k)
        return ceil_log2(size) if size > 1 else 0
    lg = shell_log_size(n, k)
    if abs(lg - round(lg)) < 1e-6:
        size = math.comb(n, k)
        return ceil_log2(size) if size > 1 else 0
    return math.ceil(lg)


@lru_cache(maxsize=65536)
def _log2_comb_small(n: int, k: int) -> float:
    return math.log2(math.comb(n, k)) if 0 < k < n else 0.0


@lru_cache(maxsize=8)
def _primes_upto(n: int) -> np.ndarray:
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve).astype(np.int64)


def _factorial_prime_exponents(m: int, upto: int | None = None) -> np.ndarray:
    """Exponent of each prime <= (upto or m) in the factorization of m!."""
    primes = _primes_upto(upto if upto is not None else m)
    exps = np.zeros(primes.size, dtype=np.int64)
    if m < 2:
        return exps
    pk = primes.copy()
    alive = np.arange(primes.size)
    while alive.size:
        exps[alive] += m // pk[alive]
        pk[alive] *= primes[alive]
        alive = alive[pk[alive] <= m]
    return exps


def _comb_prime_exponents(n: int, k: int):
    primes = _primes_upto(n)
    exps = (
        _factorial_prime_exponents(n)
        - _factorial_prime_exponents(k, upto=n)
        - _factorial_prime_exponents(n - k, upto=n)
    )
    return primes, exps


def _log2_from_exponents(pe) -> float:
    primes, exps = pe
    if np.any(exps < 0):
        raise ValueError("invalid factorization")
    nz = exps != 0
    return float(np.dot(exps[nz].astype(np.float64), np.log2(primes[nz].astype(np.float64))))

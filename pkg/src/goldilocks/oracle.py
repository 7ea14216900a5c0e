"""Brute-force references that share no code path with the LP.

``integer_ltf_tables`` realizes every function reachable with integer weights
in [-B, B]^n and integer thresholds, which covers all threshold functions for
small n (all of them need weights far below 8 up to n = 5).
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def integer_ltf_tables(n: int, bound: int = 8) -> frozenset[int]:
    if n > 4:
        raise ValueError("integer weight search is only run for n <= 4")
    size = 1 << n
    points = np.array([[(k >> i) & 1 for i in range(n)] for k in range(size)], dtype=np.int64)
    grid = np.array(list(itertools.product(range(-bound, bound + 1), repeat=n)), dtype=np.int64)
    if n == 0:
        grid = np.zeros((1, 0), dtype=np.int64)
    values = grid @ points.T if n else np.zeros((1, 1), dtype=np.int64)
    place = (np.uint64(1) << np.arange(size, dtype=np.uint64))
    tables = set()
    span = n * bound
    for theta in range(-span - 1, span + 1):
        bits = ((values > theta).astype(np.uint64) * place).sum(axis=1)
        tables.update(int(b) for b in np.unique(bits))
    return frozenset(tables)


def is_monotone_bits(bits: int, n: int) -> bool:
    for k in range(1 << n):
        if (bits >> k) & 1:
            for i in range(n):
                if not (bits >> (k | (1 << i))) & 1:
                    return False
    return True


def semi_goldilocks_oracle(n: int) -> frozenset[int]:
    """Integer-realizable, monotone, all singletons false."""
    out = set()
    for bits in integer_ltf_tables(n):
        if is_monotone_bits(bits, n) and not any((bits >> (1 << i)) & 1 for i in range(n)):
            out.add(bits)
    return frozenset(out)


def goldilocks_oracle(n: int) -> frozenset[int]:
    size = 1 << n
    return frozenset(
        b for b in semi_goldilocks_oracle(n)
        if all((b >> k) & 1 or (b >> (size - 1 - k)) & 1 for k in range(size))
    )

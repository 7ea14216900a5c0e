"""Counting engines for Semi-Goldilocks and Goldilocks functions.

DIRECT walks every monotone function, keeps the small (and, for genus zero,
ample) ones and tests the survivors for linear separability. SD enumerates one
positive self-dual threshold function per self-dualization class and counts the
small reductions of each, weighted by their permutation-orbit sizes.

Both engines call the LP once per sorted-Chow class rather than once per
function: by Chow's theorem a boolean function sharing the (sorted) Chow
parameters of a threshold function is a permutation of it.
"""

from __future__ import annotations

import enum
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .boolfn import (
    BooleanFunction,
    is_positive,
    is_self_dual,
    permute,
    reduce,
    self_dualize,
    u_complement,
    var_mask,
)
from .chow import ChowParameters, chow, orbit_size_from_chow, sorting_permutation
from .errors import BudgetError, InvalidRepresentativeError
from .ltf import is_threshold

log = logging.getLogger(__name__)


class Genus(enum.Enum):
    ZERO = "0"
    POSITIVE = "positive"

    @classmethod
    def parse(cls, s) -> "Genus":
        if isinstance(s, Genus):
            return s
        s = str(s).lower()
        if s in ("0", "zero"):
            return cls.ZERO
        if s in ("positive", "pos", "+", "g+"):
            return cls.POSITIVE
        raise ValueError(f"unknown genus class {s!r}")


class Engine(enum.Enum):
    DIRECT = "direct"
    SD = "sd"
    BOTH = "both"


DIRECT_CAP = 6   # monotone tables at n = 7 number ~2.4e12
SD_CAP = 7


@dataclass(frozen=True)
class EnumerationBudget:
    max_n: int = 6
    workers: int = 1
    engine: Engine = Engine.BOTH

    def check(self, n: int, engine: Engine) -> None:
        cap = DIRECT_CAP if engine is Engine.DIRECT else SD_CAP
        if n > min(self.max_n, cap) or n < 0:
            raise BudgetError(
                f"n={n} exceeds the {engine.value} budget (max_n={self.max_n}, cap={cap})"
            )


# --- vectorized truth-table helpers (n <= 6, tables fit in uint64) ---

_REV8 = np.array([int(f"{b:08b}"[::-1], 2) for b in range(256)], dtype=np.uint8)


def _reverse_tables(t: np.ndarray, n: int) -> np.ndarray:
    size = 1 << n
    rev = _REV8[t.astype(np.uint64).byteswap().view(np.uint8)].view(np.uint64)
    return rev >> np.uint64(64 - size)


def _singleton_mask(n: int) -> int:
    return sum(1 << (1 << i) for i in range(n))


def _chow_keys(t: np.ndarray, n: int) -> np.ndarray:
    """Encode (m, a sorted descending) of every table as one int64."""
    half = (1 << n) >> 1
    m = np.bitwise_count(t).astype(np.int64)
    if n == 0:
        return m
    a = np.empty((len(t), n), dtype=np.int64)
    for i in range(n):
        a[:, i] = 2 * np.bitwise_count(t & np.uint64(var_mask(n, i + 1))).astype(np.int64) - m + half
    a = -np.sort(-a, axis=1)
    base = (1 << n) + 1
    key = m
    for i in range(n):
        key = key * base + a[:, i]
    return key


@lru_cache(maxsize=None)
def monotone_tables(n: int) -> np.ndarray:
    """Truth tables of all monotone functions on n <= 6 variables, as uint64."""
    if n > 6:
        raise BudgetError(f"monotone tables for n={n} do not fit the direct budget")
    if n == 0:
        return np.array([0, 1], dtype=np.uint64)
    prev = monotone_tables(n - 1)
    half = np.uint64(1 << (n - 1))
    parts = []
    for f0 in prev:
        f1 = prev[(prev & f0) == f0]
        parts.append(f0 | (f1 << half))
    return np.concatenate(parts)


def monotone_functions(n: int) -> Iterator[BooleanFunction]:
    """Every monotone function on n variables, built as pairs f0 <= f1 on n-1 variables."""
    if n > DIRECT_CAP:
        raise BudgetError(f"n={n} exceeds the monotone enumeration cap {DIRECT_CAP}")
    for bits in monotone_tables(n):
        yield BooleanFunction(n, int(bits))


def _threshold_worker(args) -> list[bool]:
    n, tables = args
    return [is_threshold(BooleanFunction(n, b)) for b in tables]


def threshold_flags(n: int, tables: list[int], workers: int = 1) -> list[bool]:
    """is_threshold over many tables, optionally spread across processes."""
    if workers <= 1 or len(tables) < 64:
        return _threshold_worker((n, tables))
    chunk = max(1, math.ceil(len(tables) / (workers * 4)))
    jobs = [(n, tables[i : i + chunk]) for i in range(0, len(tables), chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        out = []
        for part in pool.map(_threshold_worker, jobs):
            out.extend(part)
    return out


def count_direct(n: int, genus, workers: int = 1, budget: EnumerationBudget | None = None):
    """(count, orbit_count) of Semi-Goldilocks (POSITIVE) or Goldilocks (ZERO) functions."""
    genus = Genus.parse(genus)
    (budget or EnumerationBudget(max_n=n)).check(n, Engine.DIRECT)
    t = monotone_tables(n)
    t = t[(t & np.uint64(_singleton_mask(n))) == 0]
    if genus is Genus.ZERO:
        full = np.uint64((1 << (1 << n)) - 1)
        t = t[(t | _reverse_tables(t, n)) == full]
    keys = _chow_keys(t, n)
    uniq, first, counts = np.unique(keys, return_index=True, return_counts=True)
    reps = [int(t[i]) for i in first]
    flags = threshold_flags(n, reps, workers)
    count = sum(int(c) for c, ok in zip(counts, flags) if ok)
    orbits = sum(flags)
    log.debug("direct n=%d %s: %d candidates, %d classes", n, genus.value, len(t), len(uniq))
    return count, orbits


# --- canonical positive threshold functions ---

def _shift_down_mask(n: int, j: int, f0: int) -> int:
    """Bits y (y_j = 0) where f0(y + e_j) = 1, i.e. where f1 may be true."""
    step = 1 << (j - 1)
    lower = (1 << (1 << n)) - 1 ^ var_mask(n, j)
    return (f0 >> step) & lower | var_mask(n, j)


def _dominated_by(f0: int, n: int) -> int:
    """Upper bound on f1 when the new last variable is dominated by all others."""
    bound = (1 << (1 << n)) - 1
    for j in range(1, n + 1):
        bound &= _shift_down_mask(n, j, f0)
    return bound


@lru_cache(maxsize=None)
def canonical_positive_ltfs(n: int, workers: int = 1) -> tuple[int, ...]:
    """Sorted-Chow representatives of every S_n-orbit of positive threshold functions.

    Grows representatives one variable at a time: a sorted representative on n
    variables splits on its weakest (last) variable into two sorted
    representatives f0 <= f1 on n-1 variables with f1 dominated by every shift
    of f0. Each candidate pair is then checked by the LP.
    """
    if n > SD_CAP:
        raise BudgetError(f"n={n} exceeds the SD cap {SD_CAP}")
    if n == 0:
        return (0, 1)
    prev = canonical_positive_ltfs(n - 1, workers)
    half = 1 << (n - 1)
    candidates = []
    if n - 1 <= 6:
        arr = np.array(prev, dtype=np.uint64)
        for f0 in prev:
            bound = _dominated_by(f0, n - 1)
            sel = arr[((arr & np.uint64(f0)) == np.uint64(f0)) & ((arr & ~np.uint64(bound)) == 0)]
            candidates.extend(f0 | (int(f1) << half) for f1 in sel)
    else:
        for f0 in prev:
            bound = _dominated_by(f0, n - 1)
            candidates.extend(f0 | (f1 << half) for f1 in prev if f1 & f0 == f0 and not f1 & ~bound)
    flags = threshold_flags(n, candidates, workers)
    out = tuple(sorted(c for c, ok in zip(candidates, flags) if ok))
    log.debug("canonical positive LTFs n=%d: %d of %d candidates", n, len(out), len(candidates))
    return out


# --- SD representatives and per-class counting ---

@dataclass(frozen=True)
class SDRepresentative:
    F: BooleanFunction
    chow: ChowParameters

    @property
    def n(self) -> int:
        return self.F.arity - 1


def _canonical_self_dual(f: BooleanFunction) -> BooleanFunction:
    F = self_dualize(f)
    full = 1 << f.arity
    a = chow(F).a
    u = sum(1 << i for i, ai in enumerate(a) if ai < full)
    if u:
        F = u_complement(F, u)
    return permute(F, sorting_permutation(chow(F).a))


def sd_representatives(n: int, workers: int = 1) -> Iterator[SDRepresentative]:
    """One canonical positive self-dual LTF on n+1 variables per SD class meeting LTF(n)."""
    seen = set()
    for bits in canonical_positive_ltfs(n, workers):
        F = _canonical_self_dual(BooleanFunction(n, bits))
        if F.bits not in seen:
            seen.add(F.bits)
            yield SDRepresentative(F, chow(F))


def validate_representative(rep: SDRepresentative, n: int, check_ltf: bool = True) -> None:
    F = rep.F
    if F.arity != n + 1:
        raise InvalidRepresentativeError(f"representative has arity {F.arity}, expected {n + 1}")
    a = rep.chow.a
    if rep.chow != chow(F) or rep.chow.m != (1 << n) or list(a) != sorted(a, reverse=True):
        raise InvalidRepresentativeError("representative Chow parameters are not canonical")
    if not is_self_dual(F) or not is_positive(F):
        raise InvalidRepresentativeError("representative is not positive and self-dual")
    if check_ltf and not is_threshold(F):
        raise InvalidRepresentativeError("representative is not a threshold function")


def _reduction_is_small(F: BooleanFunction, i: int, val: int) -> bool:
    # singletons of the reduction: F(e_j + val * e_i), j != i
    base = val << (i - 1)
    return not any(F[base | (1 << (j - 1))] for j in range(1, F.arity + 1) if j != i)


def _distinct_reductions(rep: SDRepresentative):
    """(i, m of the true reduction, orbit size) for the first index of each a-block."""
    a = rep.chow.a
    prev = None
    for i, ai in enumerate(a, start=1):
        if ai == prev:
            continue
        prev = ai
        rest = a[: i - 1] + a[i:]
        yield i, ai // 2, orbit_size_from_chow(rest)


def sgold_sd(rep: SDRepresentative, n: int | None = None, validate: bool = True) -> int:
    return _sgold_sd(rep, n, validate)[0]


def _sgold_sd(rep, n=None, validate=True) -> tuple[int, int]:
    n = rep.n if n is None else n
    if validate:
        validate_representative(rep, n, check_ltf=False)
    half = (1 << n) >> 1
    total = orbits = 0
    for i, m1, size in _distinct_reductions(rep):
        if _reduction_is_small(rep.F, i, 1):
            total += size
            orbits += 1
        if m1 != half and _reduction_is_small(rep.F, i, 0):
            total += size
            orbits += 1
    return total, orbits


def gold_sd(rep: SDRepresentative, n: int | None = None, validate: bool = True) -> int:
    return _gold_sd(rep, n, validate)[0]


def _gold_sd(rep, n=None, validate=True) -> tuple[int, int]:
    n = rep.n if n is None else n
    if validate:
        validate_representative(rep, n, check_ltf=False)
    half = (1 << n) >> 1
    total = orbits = 0
    for i, m1, size in _distinct_reductions(rep):
        val = 1 if m1 >= half else 0   # which member of the dual pair is ample
        if _reduction_is_small(rep.F, i, val):
            total += size
            orbits += 1
    return total, orbits


def count_sd(n: int, genus, workers: int = 1, budget: EnumerationBudget | None = None):
    genus = Genus.parse(genus)
    (budget or EnumerationBudget(max_n=n)).check(n, Engine.SD)
    counter = _gold_sd if genus is Genus.ZERO else _sgold_sd
    total = orbits = 0
    for rep in sd_representatives(n, workers):
        c, o = counter(rep, n, validate=False)
        total += c
        orbits += o
    return total, orbits


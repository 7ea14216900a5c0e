"""Truth-table boolean functions and the structural operators on them.

A function on n variables is stored as an integer whose bit k is f(x) for the
point x with code(x) = sum x_i 2^(i-1), so x_1 is the least significant bit.
Variable indices in the public API are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ArityError, NotSelfDualError, ParseError, PermError

ARITY_MAX = 12


@dataclass(frozen=True)
class Point:
    coords: tuple[int, ...]

    def __post_init__(self):
        if any(c not in (0, 1) for c in self.coords):
            raise ValueError(f"point coordinates must be bits, got {self.coords}")

    @classmethod
    def from_code(cls, code: int, n: int) -> "Point":
        if not 0 <= code < (1 << n):
            raise ValueError(f"code {code} out of range for n={n}")
        return cls(tuple((code >> i) & 1 for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def code(self) -> int:
        return sum(c << i for i, c in enumerate(self.coords))

    def negation(self) -> "Point":
        return Point(tuple(1 - c for c in self.coords))

    def __str__(self):
        return "(" + ",".join(map(str, self.coords)) + ")"


def unit(i: int, n: int) -> Point:
    """The singleton point with a single 1 at (1-based) index i."""
    return Point.from_code(1 << (i - 1), n)


@dataclass(frozen=True)
class BooleanFunction:
    arity: int
    bits: int

    def __post_init__(self):
        if not 0 <= self.arity <= ARITY_MAX:
            raise ArityError(f"arity {self.arity} outside [0, {ARITY_MAX}]")
        if not 0 <= self.bits < (1 << (1 << self.arity)):
            raise ArityError(f"truth table does not fit 2^{self.arity} bits")

    @property
    def size(self) -> int:
        return 1 << self.arity

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def __call__(self, x) -> int:
        return evaluate(self, x)

    def __getitem__(self, code: int) -> int:
        return (self.bits >> code) & 1

    def true_codes(self) -> list[int]:
        return [k for k in range(self.size) if (self.bits >> k) & 1]

    def false_codes(self) -> list[int]:
        return [k for k in range(self.size) if not (self.bits >> k) & 1]

    def popcount(self) -> int:
        return bin(self.bits).count("1")

    @classmethod
    def from_string(cls, s: str, arity: int | None = None) -> "BooleanFunction":
        return parse_truth_table(s, arity)

    @classmethod
    def from_values(cls, values: Sequence[int]) -> "BooleanFunction":
        n = _log2_exact(len(values))
        return cls(n, sum((1 << k) for k, v in enumerate(values) if v))

    @classmethod
    def const(cls, value: int, n: int) -> "BooleanFunction":
        return cls(n, ((1 << (1 << n)) - 1) if value else 0)

    @classmethod
    def dictator(cls, i: int, n: int) -> "BooleanFunction":
        return cls(n, var_mask(n, i))

    @classmethod
    def from_callable(cls, n: int, fn) -> "BooleanFunction":
        bits = 0
        for k in range(1 << n):
            if fn(tuple((k >> i) & 1 for i in range(n))):
                bits |= 1 << k
        return cls(n, bits)

    def __str__(self):
        return format_truth_table(self)


def _log2_exact(length: int) -> int:
    if length <= 0 or length & (length - 1):
        raise ParseError(f"truth table length {length} is not a power of two")
    return length.bit_length() - 1


@lru_cache(maxsize=None)
def var_mask(n: int, i: int) -> int:
    """Bitmask of the codes with x_i = 1 on the n-cube."""
    step = 1 << (i - 1)
    block = ((1 << step) - 1) << step
    mask = 0
    for start in range(0, 1 << n, 2 * step):
        mask |= block << start
    return mask


# --- truth table text format ---

def parse_truth_table(s: str, arity: int | None = None) -> BooleanFunction:
    """Parse a binary truth table, or a 0x-prefixed big-endian hex one."""
    s = s.strip()
    if s.lower().startswith("0x"):
        digits = s[2:]
        if not digits or any(c not in "0123456789abcdefABCDEF" for c in digits):
            raise ParseError(f"bad hex truth table {s!r}")
        if arity is None:
            arity = _log2_exact(4 * len(digits))
        elif len(digits) != max(1, -(-(1 << arity) // 4)):
            raise ParseError(f"hex truth table {s!r} has wrong width for n={arity}")
        value = int(digits, 16)
        if value >> (1 << arity):
            raise ParseError(f"hex truth table {s!r} has bits beyond 2^{arity}")
        return BooleanFunction(arity, value)
    if not s or any(c not in "01" for c in s):
        raise ParseError(f"bad binary truth table {s!r}")
    n = _log2_exact(len(s))
    if arity is not None and arity != n:
        raise ParseError(f"truth table of length {len(s)} does not have arity {arity}")
    if n > ARITY_MAX:
        raise ArityError(f"arity {n} exceeds {ARITY_MAX}")
    return BooleanFunction(n, int(s[::-1], 2))


def format_truth_table(f: BooleanFunction, hex: bool = False) -> str:
    if hex:
        width = max(1, -(-f.size // 4))
        return "0x" + format(f.bits, f"0{width}x")
    return format(f.bits, f"0{f.size}b")[::-1]


# --- operators ---

def _code(x, n: int) -> int:
    if isinstance(x, Point):
        if x.n != n:
            raise ArityError(f"point of length {x.n} for a function of arity {n}")
        return x.code
    if isinstance(x, int):
        if not 0 <= x < (1 << n):
            raise ArityError(f"code {x} out of range for arity {n}")
        return x
    coords = tuple(x)
    if len(coords) != n:
        raise ArityError(f"point of length {len(coords)} for a function of arity {n}")
    return Point(coords).code


def evaluate(f: BooleanFunction, x) -> int:
    """f at a Point, a coordinate sequence, or an integer code."""
    return (f.bits >> _code(x, f.arity)) & 1


def _reverse(bits: int, size: int) -> int:
    return int(format(bits, f"0{size}b")[::-1], 2)


def dual(f: BooleanFunction) -> BooleanFunction:
    return BooleanFunction(f.arity, f.full ^ _reverse(f.bits, f.size))


def is_self_dual(f: BooleanFunction) -> bool:
    return dual(f).bits == f.bits


def _interleave(even: int, odd: int, size: int) -> int:
    out = 0
    for k in range(size):
        out |= ((even >> k) & 1) << (2 * k)
        out |= ((odd >> k) & 1) << (2 * k + 1)
    return out


def self_dualize(f: BooleanFunction) -> BooleanFunction:
    """The self-dual function on n+1 variables with slices f (x_1=0) and dual(f).

    The new variable becomes x_1 and the old ones shift up by one index.
    """
    if f.arity + 1 > ARITY_MAX:
        raise ArityError(f"self-dualization of arity {f.arity} exceeds {ARITY_MAX}")
    return BooleanFunction(f.arity + 1, _interleave(f.bits, dual(f).bits, f.size))


def anti_self_dualize(F: BooleanFunction) -> BooleanFunction:
    if F.arity == 0 or not is_self_dual(F):
        raise NotSelfDualError(f"{format_truth_table(F)} is not self-dual")
    return reduce(F, 1, 0)


def u_complement(f: BooleanFunction, u) -> BooleanFunction:
    """x -> f(x XOR u): negate the variables where u is 1."""
    mask = _code(u, f.arity)
    if mask == 0:
        return f
    bits = f.bits
    out = 0
    for k in range(f.size):
        if (bits >> (k ^ mask)) & 1:
            out |= 1 << k
    return BooleanFunction(f.arity, out)


def _check_perm(sigma: Sequence[int], n: int) -> tuple[int, ...]:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise PermError(f"{sigma} is not a permutation of 1..{n}")
    return sigma


def compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """The permutation j -> sigma(tau(j))."""
    return tuple(sigma[t - 1] for t in tau)


def inverse_perm(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for j, s in enumerate(sigma, start=1):
        inv[s - 1] = j
    return tuple(inv)


@lru_cache(maxsize=4096)
def _perm_table(sigma: tuple[int, ...]) -> tuple[int, ...]:
    # code of the point y with y_sigma(i) = x_i, for every code x
    table = []
    for k in range(1 << len(sigma)):
        y = 0
        for i, s in enumerate(sigma):
            y |= ((k >> i) & 1) << (s - 1)
        table.append(y)
    return tuple(table)


def permute(f: BooleanFunction, sigma: Sequence[int]) -> BooleanFunction:
    """Move argument i of f to slot sigma(i): x -> f(y) with y_sigma(i) = x_i.

    sigma lists the 1-based images (sigma(1), ..., sigma(n)). Under this
    convention the Chow vector transforms as b_i = a_sigma(i) and
    permute(permute(f, sigma), tau) == permute(f, compose(sigma, tau)).
    """
    sigma = _check_perm(sigma, f.arity)
    bits = f.bits
    out = 0
    for k, y in enumerate(_perm_table(sigma)):
        if (bits >> y) & 1:
            out |= 1 << k
    return BooleanFunction(f.arity, out)


def reduce(f: BooleanFunction, i: int, s: int) -> BooleanFunction:
    """Pin x_i to s; the remaining variables keep their relative order."""
    if not 1 <= i <= f.arity:
        raise IndexError(f"variable index {i} out of range 1..{f.arity}")
    low = i - 1
    out = 0
    for k in range(1 << (f.arity - 1)):
        lo = k & ((1 << low) - 1)
        src = lo | (s << low) | ((k >> low) << (low + 1))
        out |= ((f.bits >> src) & 1) << k
    return BooleanFunction(f.arity - 1, out)


def restrict_upper(f: BooleanFunction, s: int) -> BooleanFunction:
    """Pin the last variable: the upper (s=1) or lower (s=0) half of the table."""
    half = f.size // 2
    return BooleanFunction(f.arity - 1, (f.bits >> (half * s)) & ((1 << half) - 1))


# --- the three combinatorial criteria ---

def is_positive(f: BooleanFunction) -> bool:
    """Monotone nondecreasing in every coordinate."""
    bits = f.bits
    for i in range(1, f.arity + 1):
        m = var_mask(f.arity, i)
        step = 1 << (i - 1)
        lower = (bits & ~m & f.full) << step
        if lower & ~bits:
            return False
    return True


def is_small(f: BooleanFunction) -> bool:
    return all(not (f.bits >> (1 << i)) & 1 for i in range(f.arity))


def is_ample(f: BooleanFunction) -> bool:
    """No negation pair on which f is false at both points."""
    return (f.bits | _reverse(f.bits, f.size)) == f.full


def first_nonpositive_pair(f: BooleanFunction) -> tuple[int, int] | None:
    """Smallest code x (then smallest i) with x <= x + e_i and f(x) > f(x + e_i)."""
    best = None
    for i in range(1, f.arity + 1):
        step = 1 << (i - 1)
        for x in range(f.size):
            if not x & step and f[x] and not f[x | step]:
                if best is None or (x, x | step) < best:
                    best = (x, x | step)
                break
    return best


def first_large_singleton(f: BooleanFunction) -> int | None:
    for i in range(1, f.arity + 1):
        if f[1 << (i - 1)]:
            return i
    return None


def first_false_negation_pair(f: BooleanFunction) -> int | None:
    for k in range(f.size):
        if not f[k] and not f[f.size - 1 - k]:
            return k
    return None


def all_functions(n: int) -> Iterable[BooleanFunction]:
    for bits in range(1 << (1 << n)):
        yield BooleanFunction(n, bits)


def orbit(f: BooleanFunction) -> set[int]:
    """Truth tables of all permutations of f."""
    import itertools

    return {permute(f, p).bits for p in itertools.permutations(range(1, f.arity + 1))}

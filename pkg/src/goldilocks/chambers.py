"""Weight vectors, chambers and the top-level counting API.

A weight vector w in (0, 1]^n (with sum > 2 in genus zero) lands in the chamber
labelled by the threshold function x -> [w.x > 1]. Chambers of the genus-zero
domain correspond to Goldilocks functions, those of positive genus to
Semi-Goldilocks functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .boolfn import BooleanFunction, all_functions, is_ample
from .enumeration import Engine, EnumerationBudget, Genus, count_direct, count_sd
from .errors import AdmissibilityError, BudgetError, ClassError, EngineMismatchError, ParseError
from .ltf import AMPLE, POSITIVE, SMALL, find_realization, is_semi_goldilocks, is_threshold

# Published chamber counts (count, count up to S_n), kept for reporting only.
REFERENCE_POSITIVE = {
    1: (1, 1),
    2: (2, 2),
    3: (9, 5),
    4: (96, 17),
    5: (2690, 92),
    6: (226360, 994),
    7: (64646855, 28262),
    8: (68339572672, 2700791),
    9: (281196831947304, 990331318),
}
REFERENCE_ZERO = {
    3: (1, 1),
    4: (27, 5),
    5: (1087, 36),
    6: (105123, 448),
    7: (31562520, 13642),
    8: (33924554539, 1336943),
    9: (140306938682875, 493888290),
}


@dataclass(frozen=True)
class WeightVector:
    w: tuple[Fraction, ...]
    genus: Genus

    def __post_init__(self):
        object.__setattr__(self, "w", tuple(Fraction(v) for v in self.w))
        object.__setattr__(self, "genus", Genus.parse(self.genus))
        if any(not 0 < v <= 1 for v in self.w):
            raise AdmissibilityError(f"weights must lie in (0, 1]: {self.display()}")
        if self.genus is Genus.ZERO and sum(self.w) <= 2:
            raise AdmissibilityError(f"genus-zero weights must sum past 2: {self.display()}")

    @classmethod
    def parse(cls, s: str, genus) -> "WeightVector":
        try:
            w = tuple(Fraction(v.strip()) for v in s.split(",") if v.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad weight list {s!r}") from exc
        return cls(w, genus)

    @property
    def n(self) -> int:
        return len(self.w)

    def subset_sum(self, S) -> Fraction:
        return sum((self.w[i - 1] for i in S), Fraction(0))

    def on_wall(self) -> bool:
        return any(s == 1 for s in _subset_sums(self.w)[1:])

    def display(self) -> list[str]:
        return [f"{v.numerator}/{v.denominator}" for v in self.w]


def _subset_sums(w) -> list[Fraction]:
    sums = [Fraction(0)] * (1 << len(w))
    for k in range(1, len(sums)):
        low = (k & -k).bit_length() - 1
        sums[k] = sums[k & (k - 1)] + w[low]
    return sums


def _subset(code: int) -> frozenset[int]:
    return frozenset(i + 1 for i in range(code.bit_length()) if (code >> i) & 1)


def phi_map(w: WeightVector) -> BooleanFunction:
    """The chamber label x -> [w.x > 1]; points on a wall go to the closed side."""
    bits = 0
    for k, s in enumerate(_subset_sums(w.w)):
        if s > 1:
            bits |= 1 << k
    return BooleanFunction(w.n, bits)


def _check_pair(w: WeightVector, w2: WeightVector) -> None:
    if w.n != w2.n:
        raise AdmissibilityError("weight vectors have different lengths")
    if w.genus is not w2.genus:
        raise AdmissibilityError("weight vectors belong to different genus classes")


def same_chamber(w: WeightVector, w2: WeightVector) -> bool:
    _check_pair(w, w2)
    return phi_map(w) == phi_map(w2)


def separating_walls(w: WeightVector, w2: WeightVector) -> list[frozenset[int]]:
    """Nonempty S whose wall sum_S = 1 has w and w2 on opposite sides."""
    _check_pair(w, w2)
    s1, s2 = _subset_sums(w.w), _subset_sums(w2.w)
    return [_subset(k) for k in range(1, len(s1)) if (s1[k] > 1) != (s2[k] > 1)]


def chamber_representative(f: BooleanFunction, genus) -> WeightVector:
    """A weight vector in the chamber labelled f."""
    genus = Genus.parse(genus)
    if f.arity == 0:
        raise ClassError("the weight domain on zero points has no walls to place a vector against")
    if not is_semi_goldilocks(f):
        raise ClassError(f"{f} is not Semi-Goldilocks")
    cs = {POSITIVE, SMALL}
    if genus is Genus.ZERO:
        if not is_ample(f):
            raise ClassError(f"{f} is not ample, so it labels no genus-zero chamber")
        cs.add(AMPLE)
    w = find_realization(f, cs).normalized().w
    # The LP leaves false sums at most 1, possibly on a wall. Shrinking by a
    # factor just below 1 pushes them strictly inside while true sums (and the
    # genus-zero total) stay above their bounds.
    sums = _subset_sums(w)
    floor = [1 / s for k, s in enumerate(sums) if f[k]]
    if genus is Genus.ZERO:
        floor.append(2 / sum(w))
    lam = (1 + max(floor, default=Fraction(0))) / 2
    out = WeightVector(tuple(lam * v for v in w), genus)
    assert phi_map(out) == f and not out.on_wall()
    return out


@dataclass(frozen=True)
class CountRow:
    n: int
    genus: Genus
    count: int
    orbit_count: int

    def to_json(self) -> dict:
        return {"n": self.n, "genus": self.genus.value, "count": self.count,
                "orbit_count": self.orbit_count}


def count_chambers(n: int, genus, engine=Engine.BOTH, workers: int = 1,
                   budget: EnumerationBudget | None = None) -> CountRow:
    genus = Genus.parse(genus)
    engine = Engine(engine) if not isinstance(engine, Engine) else engine
    budget = budget or EnumerationBudget(max_n=max(n, 0), workers=workers, engine=engine)
    if engine is Engine.DIRECT:
        count, orbits = count_direct(n, genus, workers, budget)
    elif engine is Engine.SD:
        count, orbits = count_sd(n, genus, workers, budget)
    else:
        direct = count_direct(n, genus, workers, budget)
        sd = count_sd(n, genus, workers, budget)
        if direct != sd:
            raise EngineMismatchError(
                f"n={n} genus={genus.value}: direct {direct} != sd {sd}"
            )
        count, orbits = direct
    return CountRow(n, genus, count, orbits)


def brute_force_ltf_count(n: int) -> int:
    """LTF(n) by running the LP on every boolean function of n variables."""
    if n > 4:
        raise BudgetError(f"exhaustive LTF scan over 2^(2^{n}) functions is out of budget")
    return sum(is_threshold(f) for f in all_functions(n))


def ltf_identity_check(n: int, lhs: int | None = None, engine=Engine.SD) -> dict:
    """Compare LTF(n) with sum_k C(n, k) 2^k Gold_{g+}(k)."""
    if lhs is None:
        lhs = brute_force_ltf_count(n)
    rhs = sum(comb(n, k) * 2**k * count_chambers(k, Genus.POSITIVE, engine).count
              for k in range(n + 1))
    return {"n": n, "lhs": lhs, "rhs": rhs, "ok": lhs == rhs}


def irmatov_estimate(n: int) -> int:
    """2 * sum_{i<=n} C(2^n - 1, i)."""
    if not 0 <= n <= 30:
        raise BudgetError("estimate is evaluated for 0 <= n <= 30")
    return 2 * sum(comb((1 << n) - 1, i) for i in range(n + 1))


def gold_values(n: int, compute_up_to: int = 6) -> tuple[int, int, str]:
    """(Gold_{g+}(n), Gold_0(n), source) computed when cheap, else from the reference table."""
    if n <= compute_up_to:
        pos = count_chambers(n, Genus.POSITIVE, Engine.SD).count
        zero = count_chambers(n, Genus.ZERO, Engine.SD).count
        return pos, zero, "computed"
    if n in REFERENCE_POSITIVE:
        return REFERENCE_POSITIVE[n][0], REFERENCE_ZERO.get(n, (0, 0))[0], "reference"
    raise BudgetError(f"no chamber count available for n={n}")


def ratio_report(n: int, compute_up_to: int = 6) -> dict:
    """Exact ratios Gold_0/Gold_{g+} and 2^n Gold_{g+} / estimate; reported, not asserted."""
    pos, zero, source = gold_values(n, compute_up_to)
    est = irmatov_estimate(n)
    return {
        "n": n,
        "source": source,
        "gold_positive": pos,
        "gold_zero": zero,
        "estimate": est,
        "zero_over_positive": Fraction(zero, pos) if pos else None,
        "scaled_positive_over_estimate": Fraction(2**n * pos, est),
    }


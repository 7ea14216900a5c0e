"""Exhaustive small-n consistency checks behind the ``selftest`` subcommand."""

from __future__ import annotations

import sys
from typing import Callable

from .boolfn import (
    BooleanFunction,
    all_functions,
    anti_self_dualize,
    dual,
    is_ample,
    is_positive,
    is_self_dual,
    reduce,
    self_dualize,
)
from .chambers import chamber_representative, ltf_identity_check, phi_map
from .chow import chow
from .classify import classify, verify_certificate
from .enumeration import Genus, count_direct, count_sd
from .ltf import is_threshold
from .oracle import goldilocks_oracle, integer_ltf_tables, semi_goldilocks_oracle


def _dual_involution(max_n):
    return all(dual(dual(f)) == f for n in range(max_n + 1) for f in all_functions(n))


def _self_dual_round_trip(max_n):
    for n in range(max_n + 1):
        for f in all_functions(n):
            F = self_dualize(f)
            if not is_self_dual(F) or anti_self_dualize(F) != f:
                return False
            if reduce(F, 1, 0) != f or reduce(F, 1, 1) != dual(f):
                return False
    return True


def _ltf_matches_oracle(n):
    ref = integer_ltf_tables(n)
    return all(is_threshold(f) == (f.bits in ref) for f in all_functions(n))


def _classes_match_oracle(n):
    semi, gold = semi_goldilocks_oracle(n), goldilocks_oracle(n)
    for f in all_functions(n):
        r = classify(f)
        if r.semi_goldilocks != (f.bits in semi) or r.goldilocks != (f.bits in gold):
            return False
        if r.certificate is not None and not verify_certificate(f, r.certificate):
            return False
    return True


def _chow_criteria(n):
    half = (1 << n) >> 1
    for f in all_functions(n):
        if not is_threshold(f):
            continue
        c = chow(f)
        if is_positive(f) != all(a >= half for a in c.a):
            return False
        if is_ample(f) != (c.m >= half):
            return False
    return True


def _engines_agree(max_n):
    return all(count_direct(n, g) == count_sd(n, g)
               for n in range(max_n + 1) for g in Genus)


def _round_trip(n):
    gold = goldilocks_oracle(n)
    for bits in semi_goldilocks_oracle(n):
        f = BooleanFunction(n, bits)
        if phi_map(chamber_representative(f, Genus.POSITIVE)) != f:
            return False
        if bits in gold and phi_map(chamber_representative(f, Genus.ZERO)) != f:
            return False
    return True


def checks(slow: bool = False) -> list[tuple[str, Callable[[], bool]]]:
    top = 4
    out = [
        ("dual involution n<=3", lambda: _dual_involution(3)),
        ("self-dualization round trip n<=3", lambda: _self_dual_round_trip(3)),
        (f"LP agrees with integer-weight search n={top}", lambda: _ltf_matches_oracle(top)),
        (f"classify agrees with oracle, certificates verify n={top}", lambda: _classes_match_oracle(top)),
        ("Chow positivity/ampleness criteria 1<=n<=4", lambda: all(_chow_criteria(n) for n in range(1, 5))),
        (f"engines agree n<={6 if slow else 5}", lambda: _engines_agree(6 if slow else 5)),
        ("chamber representative round trip 1<=n<=4", lambda: all(_round_trip(n) for n in range(1, 5))),
    ]
    for n in range(1, top + 1):
        out.append((f"LTF identity n={n}", lambda n=n: ltf_identity_check(n)["ok"]))
    return out


def run_selftest(slow: bool = False, out=sys.stdout) -> bool:
    ok = True
    for name, check in checks(slow):
        try:
            passed = bool(check())
        except Exception as exc:  # a crash is a failure, reported like one
            passed = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        ok &= passed
        out.write(f"{'PASS' if passed else 'FAIL'} {name}\n")
    return ok

"""Command-line entry point.

Exit codes: 0 success, 1 usage or parse error, 2 internal consistency failure,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .boolfn import parse_truth_table, format_truth_table
from .chambers import (
    WeightVector,
    count_chambers,
    ltf_identity_check,
    phi_map,
    ratio_report,
)
from .classify import classify
from .config import load_config
from .enumeration import Engine, EnumerationBudget, Genus
from .errors import BudgetError, EngineMismatchError, GoldilocksError, ParseError
from .ltf import Infeasible, find_realization, is_goldilocks, is_semi_goldilocks

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL, EXIT_BUDGET = 0, 1, 2, 3

# Smallest n with a nonempty chamber set, as laid out in the published tables.
TABLE_START = {Genus.POSITIVE: 1, Genus.ZERO: 3}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _emit(obj, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json" or not isinstance(obj, str):
        out.write(json.dumps(obj, default=_json_default, sort_keys=False) + "\n")
    else:
        out.write(obj + "\n")


def _json_default(o):
    if isinstance(o, Fraction):
        return f"{o.numerator}/{o.denominator}"
    raise TypeError(f"cannot serialize {type(o).__name__}")


def _budget(cfg, n: int, engine: Engine) -> EnumerationBudget:
    caps = {Engine.DIRECT: cfg.direct_cap, Engine.SD: cfg.sd_cap,
            Engine.BOTH: min(cfg.direct_cap, cfg.sd_cap)}
    if n > caps[engine]:
        raise BudgetError(f"n={n} exceeds the configured {engine.value} cap {caps[engine]}")
    return EnumerationBudget(max_n=caps[engine], workers=cfg.workers, engine=engine)


def cmd_count(args, cfg) -> int:
    engine = Engine(args.engine)
    genus = Genus.parse(args.genus)
    row = count_chambers(args.n, genus, engine, cfg.workers, _budget(cfg, args.n, engine))
    if cfg.format == "json":
        _emit(row.to_json(), "json")
    elif args.orbits:
        _emit(f"{row.count} {row.orbit_count}", "text")
    else:
        _emit(str(row.count), "text")
    return EXIT_OK


def cmd_classify(args, cfg) -> int:
    f = parse_truth_table(args.truth_table)
    report = classify(f, target=args.target)
    _emit({"truth_table": format_truth_table(f), **report.to_json()}, "json")
    return EXIT_OK


def cmd_realize(args, cfg) -> int:
    f = parse_truth_table(args.truth_table)
    cs = [c for c in (args.constraints or "").split(",") if c]
    try:
        r = find_realization(f, cs)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if isinstance(r, Infeasible):
        body = {"feasible": False, "status": r.status,
                "witness": r.witness.to_json() if r.witness else None}
    else:
        body = {"feasible": True, **r.to_json()}
    _emit({"truth_table": format_truth_table(f), "constraints": sorted(cs), **body}, "json")
    return EXIT_OK


def cmd_chamber(args, cfg) -> int:
    w = WeightVector.parse(args.weights, args.genus)
    f = phi_map(w)
    _emit({
        "weights": w.display(),
        "genus": w.genus.value,
        "truth_table": format_truth_table(f),
        "on_wall": w.on_wall(),
        "semi_goldilocks": is_semi_goldilocks(f),
        "goldilocks": is_goldilocks(f),
    }, "json")
    return EXIT_OK


def table_rows(max_n: int, genera, engine: Engine, workers: int, cfg) -> list:
    rows = []
    for genus in genera:
        for n in range(TABLE_START[genus], max_n + 1):
            rows.append(count_chambers(n, genus, engine, workers, _budget(cfg, n, engine)))
    return rows


def render_table(rows, fmt: str, with_genus: bool) -> str:
    if fmt == "json":
        return json.dumps([r.to_json() for r in rows])
    head = (["genus"] if with_genus else []) + ["n", "count", "count/S_n"]
    body = [([r.genus.value] if with_genus else []) + [str(r.n), str(r.count), str(r.orbit_count)]
            for r in rows]
    if fmt == "csv":
        return "\n".join(",".join(line) for line in [head] + body)
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    lines += ["| " + " | ".join(line) + " |" for line in body]
    return "\n".join(lines)


def cmd_table(args, cfg) -> int:
    genera = [Genus.POSITIVE, Genus.ZERO] if args.genus == "both" else [Genus.parse(args.genus)]
    rows = table_rows(args.max_n, genera, Engine(args.engine), cfg.workers, cfg)
    sys.stdout.write(render_table(rows, args.format, args.genus == "both") + "\n")
    return EXIT_OK


def cmd_identity(args, cfg) -> int:
    result = ltf_identity_check(args.n)
    _emit(result, "json")
    return EXIT_OK if result["ok"] else EXIT_INTERNAL


def cmd_asymptotics(args, cfg) -> int:
    report = ratio_report(args.n, compute_up_to=min(6, cfg.sd_cap))
    for key in ("zero_over_positive", "scaled_positive_over_estimate"):
        q = report[key]
        report[key + "_float"] = float(q) if q is not None else None
    _emit(report, "json")
    return EXIT_OK


def cmd_selftest(args, cfg) -> int:
    from .selftest import run_selftest

    ok = run_selftest(slow=cfg.slow, out=sys.stdout)
    return EXIT_OK if ok else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="goldilocks", description="Count chambers of weighted-curve moduli via threshold functions.")
    p.add_argument("--config", help="key=value configuration file")
    p.add_argument("--workers", type=int, help="worker processes (default $GOLDILOCKS_WORKERS or 1)")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    c = sub.add_parser("count", help="count chambers for one (n, genus)")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--genus", choices=["0", "positive"], required=True)
    c.add_argument("--engine", choices=["direct", "sd", "both"], default="both")
    c.add_argument("--orbits", action="store_true", help="also print the count up to S_n")
    c.add_argument("--workers", type=int, dest="sub_workers")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.set_defaults(func=cmd_count)

    c = sub.add_parser("classify", help="classify a truth table")
    c.add_argument("--truth-table", required=True)
    c.add_argument("--target", choices=["goldilocks", "semi_goldilocks"], default="goldilocks")
    c.set_defaults(func=cmd_classify, format="json")

    c = sub.add_parser("realize", help="exact realization with optional flags")
    c.add_argument("--truth-table", required=True)
    c.add_argument("--constraints", default="", help="comma list of positive,small,ample")
    c.set_defaults(func=cmd_realize, format="json")

    c = sub.add_parser("chamber", help="chamber label of a weight vector")
    c.add_argument("--weights", required=True)
    c.add_argument("--genus", choices=["0", "positive"], required=True)
    c.set_defaults(func=cmd_chamber, format="json")

    c = sub.add_parser("table", help="chamber-count table for n up to --max-n")
    c.add_argument("--max-n", type=int, required=True)
    c.add_argument("--genus", choices=["0", "positive", "both"], default="both")
    c.add_argument("--format", choices=["md", "csv", "json"], default="md")
    c.add_argument("--engine", choices=["direct", "sd", "both"], default="sd")
    c.add_argument("--workers", type=int, dest="sub_workers")
    c.set_defaults(func=cmd_table)

    c = sub.add_parser("identity-check", help="LTF(n) = sum C(n,k) 2^k Gold_{g+}(k)")
    c.add_argument("--n", type=int, required=True)
    c.set_defaults(func=cmd_identity, format="json")

    c = sub.add_parser("asymptotics", help="estimate and exact ratios for n")
    c.add_argument("--n", type=int, required=True)
    c.set_defaults(func=cmd_asymptotics, format="json")

    c = sub.add_parser("selftest", help="exhaustive n <= 4 property checks")
    c.add_argument("--slow", action="store_true")
    c.set_defaults(func=cmd_selftest, format="text")
    return p


def main(argv=None) -> int:
    fmt = "text"
    try:
        args = build_parser().parse_args(argv)
        fmt = getattr(args, "format", "text")
        if args.command is None:
            raise ParseError("a subcommand is required")
        workers = getattr(args, "sub_workers", None) or args.workers
        cfg = load_config(args.config, workers=workers,
                          format=fmt if fmt in ("json", "text") else None,
                          slow=getattr(args, "slow", None) or None)
        return args.func(args, cfg)
    except BudgetError as exc:
        return _fail(exc, EXIT_BUDGET, fmt)
    except EngineMismatchError as exc:
        return _fail(exc, EXIT_INTERNAL, fmt)
    except (GoldilocksError, ValueError, OSError) as exc:
        return _fail(exc, EXIT_USAGE, fmt)


def _fail(exc: Exception, code: int, fmt: str) -> int:
    if fmt == "json":
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc), "exit": code}) + "\n")
    else:
        sys.stderr.write(f"error: {exc}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

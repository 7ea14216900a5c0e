"""Runtime configuration: worker count, arity caps, output format."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

from .boolfn import ARITY_MAX
from .enumeration import DIRECT_CAP, SD_CAP
from .errors import ParseError


@dataclass(frozen=True)
class Config:
    workers: int = 1
    direct_cap: int = DIRECT_CAP
    sd_cap: int = SD_CAP
    format: str = "text"
    slow: bool = False

    def __post_init__(self):
        if self.workers < 1:
            raise ParseError("workers must be at least 1")
        if not (0 <= self.direct_cap <= ARITY_MAX and 0 <= self.sd_cap <= ARITY_MAX):
            raise ParseError(f"arity caps must lie in [0, {ARITY_MAX}]")


def _coerce(name: str, raw: str):
    kind = {f.name: f.type for f in fields(Config)}[name]
    if kind in (int, "int"):
        return int(raw)
    if kind in (bool, "bool"):
        return raw.strip().lower() in ("1", "true", "yes", "on")
    return raw.strip()


def parse_config_file(path: str | Path) -> dict:
    """key = value lines; '#' starts a comment; unknown keys are an error."""
    known = {f.name for f in fields(Config)}
    out = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in known:
            raise ParseError(f"{path}:{lineno}: cannot parse {line!r}")
        try:
            out[key] = _coerce(key, value.strip().strip('"'))
        except ValueError as exc:
            raise ParseError(f"{path}:{lineno}: bad value for {key}") from exc
    return out


def load_config(path: str | Path | None = None, **overrides) -> Config:
    """Defaults, then GOLDILOCKS_WORKERS, then the config file, then explicit overrides."""
    cfg = Config()
    env = os.environ.get("GOLDILOCKS_WORKERS")
    if env:
        try:
            cfg = replace(cfg, workers=int(env))
        except ValueError as exc:
            raise ParseError(f"GOLDILOCKS_WORKERS={env!r} is not an integer") from exc
    if path is not None:
        cfg = replace(cfg, **parse_config_file(path))
    overrides = {k: v for k, v in overrides.items() if v is not None}
    return replace(cfg, **overrides)

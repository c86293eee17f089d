"""Runtime configuration: brute-force caps, per-theorem defaults, specializations.

The optional config file is INI-style, read with :mod:`configparser`::

    [caps]
    bruteforce = 10        # largest n for n!-sized sweeps
    pathsum = 10           # largest n for exhaustive diagram generation

    [nmax]
    t1.1 = 9               # default --nmax per theorem id

    [specialize]
    u = 1                  # default --set values for `expand`
    w = 1

``CATALAN_CF_NMAX_CAP`` overrides every brute-force cap when set.
"""
from __future__ import annotations

import configparser
import os
from dataclasses import dataclass, field
from pathlib import Path

ENV_CAP = "CATALAN_CF_NMAX_CAP"
ENV_CONFIG = "CATALAN_CF_CONFIG"
DEFAULT_BRUTEFORCE_CAP = 10
DEFAULT_PATHSUM_CAP = 10


class CapExceededError(ValueError):
    pass


@dataclass
class Config:
    bruteforce_cap: int = DEFAULT_BRUTEFORCE_CAP
    pathsum_cap: int = DEFAULT_PATHSUM_CAP
    nmax: dict[str, int] = field(default_factory=dict)
    specialize: dict[str, int] = field(default_factory=dict)

    @classmethod
    def load(cls, path: str | os.PathLike | None = None) -> "Config":
        cfg = cls()
        path = path or os.environ.get(ENV_CONFIG)
        if path:
            parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
            if not parser.read(Path(path)):
                raise FileNotFoundError(path)
            if parser.has_section("caps"):
                caps = parser["caps"]
                cfg.bruteforce_cap = caps.getint("bruteforce", cfg.bruteforce_cap)
                cfg.pathsum_cap = caps.getint("pathsum", cfg.pathsum_cap)
            if parser.has_section("nmax"):
                cfg.nmax = {k.lower(): int(x) for k, x in parser["nmax"].items()}
            if parser.has_section("specialize"):
                cfg.specialize = {k: int(x) for k, x in parser["specialize"].items()}
        env = os.environ.get(ENV_CAP)
        if env:
            cfg.bruteforce_cap = cfg.pathsum_cap = int(env)
        return cfg


_active: Config | None = None


def active() -> Config:
    global _active
    if _active is None:
        _active = Config.load()
    return _active


def set_active(cfg: Config | None) -> None:
    global _active
    _active = cfg


def check_cap(n: int, cap: int | None, what: str) -> None:
    if cap is not None and n > cap:
        raise CapExceededError(f"{what}: n={n} exceeds cap {cap} (set {ENV_CAP} to raise it)")

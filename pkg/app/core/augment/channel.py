# -*- coding: utf-8 -*-
"""Simulated TTS+ASR channel: seeded per-token substitutions, deletions and insertions."""
from __future__ import annotations
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import List, Mapping, Optional, Tuple
import hashlib

import numpy as np

from app.core.augment.spoken import spoken_form
from app.core.common.errors import DataError

import logging
log = logging.getLogger(__name__)

MAX_RATE = 0.5
INSERTION_CANDIDATES = ("a", "the", "and", "uh", "i", "to")


class ConfusionTableError(DataError):
    """The confusion table file is malformed."""


class ChannelMode(str, Enum):
    EXTERNAL = "external"
    SIMULATED = "simulated"


def load_confusions(path: Path) -> Mapping[str, Tuple[str, ...]]:
    """Read ``word<TAB>cand1|cand2`` lines; ``#`` comments and blank lines are ignored."""
    return _parse_confusions(Path(path).read_text(encoding="utf-8"), str(path))


def _parse_confusions(text: str, name: str) -> Mapping[str, Tuple[str, ...]]:
    table = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ConfusionTableError(f"{name}:{line_no}: expected word<TAB>candidates")
        word = parts[0].strip().lower()
        cands = tuple(c.strip().lower() for c in parts[1].split("|") if c.strip() and c.strip().lower() != word)
        if not word or not cands:
            raise ConfusionTableError(f"{name}:{line_no}: empty word or candidate list")
        table[word] = cands
    return MappingProxyType(table)


@lru_cache(maxsize=1)
def default_confusions() -> Mapping[str, Tuple[str, ...]]:
    text = resources.files("app.core.augment").joinpath("resources/confusions.tsv").read_text(encoding="utf-8")
    return _parse_confusions(text, "confusions.tsv")


@dataclass(frozen=True)
class ChannelConfig:
    mode: ChannelMode = ChannelMode.SIMULATED
    seed: int = 0
    sub_rate: float = 0.0
    del_rate: float = 0.0
    ins_rate: float = 0.0
    confusion_table: Mapping[str, Tuple[str, ...]] = field(default_factory=default_confusions, compare=False)

    def __post_init__(self) -> None:
        if self.seed < 0:
            raise ValueError("seed must be >= 0")
        for name in ("sub_rate", "del_rate", "ins_rate"):
            value = getattr(self, name)
            if not 0.0 <= value <= MAX_RATE:
                raise ValueError(f"{name} must be in [0, {MAX_RATE}], got {value}")

    def to_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "seed": self.seed,
            "sub_rate": self.sub_rate,
            "del_rate": self.del_rate,
            "ins_rate": self.ins_rate,
            "confusion_entries": len(self.confusion_table),
        }


@dataclass(frozen=True)
class ChannelTrace:
    text: str
    tokens: int
    substitutions: int
    deletions: int
    insertions: int


def record_rng(seed: int, record_id: str) -> np.random.Generator:
    """Generator keyed by (seed, record id); independent of processing order."""
    digest = int.from_bytes(hashlib.sha1(record_id.encode("utf-8")).digest()[:8], "big")
    return np.random.default_rng(np.random.SeedSequence([seed, digest]))


def _perturb_chars(word: str, rng: np.random.Generator) -> str:
    """Drop, double or swap one character; the result always differs from ``word``."""
    if len(word) > 1:
        op = int(rng.integers(3))
        i = int(rng.integers(len(word)))
        if op == 0:
            out = word[:i] + word[i + 1:]
        elif op == 1:
            out = word[:i] + word[i] + word[i:]
        else:
            i = min(i, len(word) - 2)
            out = word[:i] + word[i + 1] + word[i] + word[i + 2:]
        if out and out != word:
            return out
    return word + word[-1]


def simulate_channel_traced(text: str, cfg: ChannelConfig, record_id: str = "") -> ChannelTrace:
    if cfg.mode is not ChannelMode.SIMULATED:
        raise ValueError("simulate_channel needs a simulated ChannelConfig")
    tokens = spoken_form(text).split()
    rng = record_rng(cfg.seed, record_id)
    out: List[str] = []
    subs = dels = ins = 0
    for tok in tokens:
        u, v = rng.random(2)
        if u < cfg.del_rate:
            dels += 1
        elif u < cfg.del_rate + cfg.sub_rate:
            cands = cfg.confusion_table.get(tok)
            out.append(cands[int(rng.integers(len(cands)))] if cands else _perturb_chars(tok, rng))
            subs += 1
        else:
            out.append(tok)
        if v < cfg.ins_rate:
            out.append(INSERTION_CANDIDATES[int(rng.integers(len(INSERTION_CANDIDATES)))])
            ins += 1
    return ChannelTrace(" ".join(out), len(tokens), subs, dels, ins)


def simulate_channel(text: str, cfg: ChannelConfig, record_id: str = "") -> str:
    """Spoken form of ``text`` with seeded per-token edits; identical to spoken_form at zero rates."""
    return simulate_channel_traced(text, cfg, record_id).text

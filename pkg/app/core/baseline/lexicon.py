# -*- coding: utf-8 -*-
"""Filler lexicon: filled pauses and multi-word discourse markers."""
from __future__ import annotations
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import FrozenSet, Iterable, Optional, Tuple
import os

from app.core.common.errors import DataError

import logging
log = logging.getLogger(__name__)

LEXICON_ENV = "READTRANSOR_LEXICON"
MAX_MARKER_WORDS = 4


class LexiconError(DataError):
    """Raised when a lexicon file holds an invalid entry."""


@dataclass(frozen=True)
class FillerLexicon:
    filled_pauses: FrozenSet[str] = frozenset()
    discourse_markers: FrozenSet[Tuple[str, ...]] = frozenset()

    def __post_init__(self) -> None:
        for w in self.filled_pauses:
            if not w or w != w.strip().lower() or " " in w:
                raise ValueError(f"invalid filled pause entry: {w!r}")
        for m in self.discourse_markers:
            if not 2 <= len(m) <= MAX_MARKER_WORDS or any(not w or w != w.strip().lower() for w in m):
                raise ValueError(f"invalid discourse marker entry: {' '.join(m)!r}")

    @classmethod
    def from_entries(cls, entries: Iterable[str]) -> "FillerLexicon":
        pauses, markers = set(), set()
        for entry in entries:
            words = tuple(entry.lower().split())
            if not words:
                continue
            if len(words) == 1:
                pauses.add(words[0])
            elif len(words) <= MAX_MARKER_WORDS:
                markers.add(words)
            else:
                raise LexiconError(f"discourse marker longer than {MAX_MARKER_WORDS} words: {entry!r}")
        return cls(frozenset(pauses), frozenset(markers))

    @property
    def longest_marker(self) -> int:
        return max((len(m) for m in self.discourse_markers), default=0)


def load_lexicon(path: Path) -> FillerLexicon:
    """Read a lexicon file (UTF-8, `#` comments, blank lines ignored)."""
    entries = []
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if line and not line.startswith("#"):
                entries.append(line)
    lex = FillerLexicon.from_entries(entries)
    log.debug("Lexicon %s: %d filled pauses, %d discourse markers",
              path, len(lex.filled_pauses), len(lex.discourse_markers))
    return lex


@lru_cache(maxsize=1)
def default_lexicon() -> FillerLexicon:
    ref = resources.files("app.core.baseline") / "resources" / "default_lexicon.txt"
    with resources.as_file(ref) as p:
        return load_lexicon(Path(p))


def resolve_lexicon(path: Optional[Path]) -> FillerLexicon:
    """Explicit path, else $READTRANSOR_LEXICON, else the bundled default."""
    if path is None:
        env = os.getenv(LEXICON_ENV)
        if env:
            path = Path(env)
    return load_lexicon(path) if path is not None else default_lexicon()

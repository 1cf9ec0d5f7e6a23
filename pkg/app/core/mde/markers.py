# -*- coding: utf-8 -*-
"""SU boundary kinds, the marker table and parse options."""
from __future__ import annotations
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Dict, FrozenSet, Mapping, Optional
import re

from app.core.common.errors import DataError

import logging
log = logging.getLogger(__name__)


class MarkerConfigError(DataError):
    """Raised when a marker table line cannot be understood."""


class SuType(str, Enum):
    STATEMENT = "statement"
    QUESTION = "question"
    INCOMPLETE = "incomplete"
    OTHER = "other"


@dataclass(frozen=True)
class SuKind:
    """Kind of a sentence-like unit; ``tag`` is only set for OTHER."""
    type: SuType
    tag: str = ""

    def __post_init__(self) -> None:
        if self.type is SuType.OTHER and not self.tag:
            raise ValueError("SuKind OTHER requires a nonempty tag")
        if self.type is not SuType.OTHER and self.tag:
            raise ValueError(f"SuKind {self.type.value} takes no tag")

    def __str__(self) -> str:
        return f"other:{self.tag}" if self.type is SuType.OTHER else self.type.value


STATEMENT = SuKind(SuType.STATEMENT)
QUESTION = SuKind(SuType.QUESTION)
INCOMPLETE = SuKind(SuType.INCOMPLETE)

# Filled pauses recognised without annotation; discourse markers need explicit `< >`.
DEFAULT_FILLER_WORDS: FrozenSet[str] = frozenset({"uh", "um", "er", "ah", "mm", "hmm", "huh"})

# `/x` or `x/` where x carries no slash or whitespace.
_OTHER_MARKER = re.compile(r"^(?:/([^\s/]+)|([^\s/]+)/)$")


def parse_kind(value: str) -> SuKind:
    """Parse ``statement``, ``question``, ``incomplete`` or ``other:<tag>``."""
    v = value.strip()
    low = v.lower()
    if low.startswith("other:"):
        return SuKind(SuType.OTHER, v.split(":", 1)[1].strip())
    try:
        return SuKind(SuType(low))
    except ValueError:
        raise MarkerConfigError(f"Unknown SU kind: {value!r}") from None


def load_markers(path: Path) -> Dict[str, SuKind]:
    """Read a ``marker<TAB>kind`` table; ``#`` starts a comment line."""
    table: Dict[str, SuKind] = {}
    with open(path, "r", encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0].strip():
                raise MarkerConfigError(f"{path}:{line_no}: expected marker<TAB>kind, got {line!r}")
            try:
                table[parts[0].strip()] = parse_kind(parts[1])
            except (MarkerConfigError, ValueError) as e:
                raise MarkerConfigError(f"{path}:{line_no}: {e}") from e
    log.debug("Loaded %d boundary markers from %s", len(table), path)
    return table


@lru_cache(maxsize=1)
def _bundled_markers() -> Mapping[str, SuKind]:
    ref = resources.files("app.core.mde") / "resources" / "markers.tsv"
    with resources.as_file(ref) as p:
        return load_markers(Path(p))


def default_markers() -> Dict[str, SuKind]:
    return dict(_bundled_markers())


@dataclass(frozen=True)
class ParseOptions:
    """Options for reading annotated transcripts.

    Attributes:
        markers: Boundary marker -> SU kind.
        accept_other_markers: Treat any other `/x` or `x/` token as an OTHER boundary.
        filler_words: Lowercase words recorded as fillers even when not annotated.
    """
    markers: Mapping[str, SuKind] = field(default_factory=default_markers)
    accept_other_markers: bool = True
    filler_words: FrozenSet[str] = DEFAULT_FILLER_WORDS

    def boundary_kind(self, token: str) -> Optional[SuKind]:
        kind = self.markers.get(token)
        if kind is not None:
            return kind
        if self.accept_other_markers:
            m = _OTHER_MARKER.match(token)
            if m:
                return SuKind(SuType.OTHER, m.group(1) or m.group(2))
        return None

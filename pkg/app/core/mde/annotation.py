# -*- coding: utf-8 -*-
"""Parser for MDE-style annotated transcripts.

Markup is whitespace-delimited:
    `< ... >`  filler (filled pause or discourse marker)
    `[ ... ]`  deletable portion of an edit disfluency (may nest)
    `*`        interruption point
    `/.` etc.  SU boundary, see ``app.core.mde.markers``
"""
from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
import re
from typing import Any, Dict, List, Optional, Tuple

from app.core.common.errors import DataError
from app.core.mde.markers import ParseOptions, SuKind

import logging
log = logging.getLogger(__name__)


class AnnotationError(DataError):
    """Raised when markup cannot be matched; ``offset`` is the raw token index."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} at token offset {offset}")
        self.offset = offset


class UnbalancedMarkup(AnnotationError):
    """An opening `<` or `[` was never closed."""


class StrayClose(AnnotationError):
    """A `>` or `]` has no matching opener."""


class SpanKind(str, Enum):
    FILLER = "filler"
    EDIT_DELETABLE = "edit"
    INTERRUPTION_POINT = "interruption"


DELETABLE_KINDS = (SpanKind.FILLER, SpanKind.EDIT_DELETABLE)

_OPENERS = {">": "<", "]": "["}


@dataclass(frozen=True)
class MetadataSpan:
    """Half-open token range ``[start, end)``; interruption points are zero-width."""
    kind: SpanKind
    start: int
    end: int

    def __post_init__(self) -> None:
        if self.kind is SpanKind.INTERRUPTION_POINT:
            if self.start != self.end:
                raise ValueError("interruption point must have start == end")
        elif not 0 <= self.start < self.end:
            raise ValueError(f"{self.kind.value} span needs 0 <= start < end, got [{self.start}, {self.end})")


@dataclass(frozen=True)
class SuBoundary:
    """SU boundary; ``position`` counts the tokens that precede the marker."""
    position: int
    kind: SuKind

    @property
    def after_token(self) -> int:
        return self.position - 1


@dataclass(frozen=True)
class AnnotatedTranscript:
    tokens: Tuple[str, ...]
    spans: Tuple[MetadataSpan, ...] = ()
    boundaries: Tuple[SuBoundary, ...] = ()

    def __post_init__(self) -> None:
        n = len(self.tokens)
        for sp in self.spans:
            if sp.end > n or sp.start < 0:
                raise ValueError(f"span [{sp.start}, {sp.end}) outside {n} tokens")
        last = 0
        for b in self.boundaries:
            if b.position < last or b.position > n:
                raise ValueError(f"boundary positions must be nondecreasing and <= {n}")
            last = b.position
        fillers = {(s.start, s.end) for s in self.spans if s.kind is SpanKind.FILLER}
        edits = [s for s in self.spans if s.kind is SpanKind.EDIT_DELETABLE]
        if fillers & {(s.start, s.end) for s in edits}:
            raise ValueError("filler and edit spans share a range")
        for i, a in enumerate(edits):
            for b in edits[i + 1:]:
                if a.start < b.start < a.end < b.end or b.start < a.start < b.end < a.end:
                    raise ValueError("edit spans overlap without nesting")

    def spans_of(self, kind: SpanKind) -> List[MetadataSpan]:
        return [s for s in self.spans if s.kind is kind]

    def deletable_mask(self) -> List[bool]:
        mask = [False] * len(self.tokens)
        for sp in self.spans:
            if sp.kind in DELETABLE_KINDS:
                for i in range(sp.start, sp.end):
                    mask[i] = True
        return mask

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tokens": list(self.tokens),
            "spans": [{"kind": s.kind.value, "start": s.start, "end": s.end} for s in self.spans],
            "boundaries": [{"position": b.position, "kind": str(b.kind)} for b in self.boundaries],
        }


def parse_annotation(text: str, options: Optional[ParseOptions] = None) -> AnnotatedTranscript:
    """Parse an annotated transcript into tokens, metadata spans and SU boundaries.

    Raises:
        UnbalancedMarkup: an opener is still open at end of input.
        StrayClose: a closer has no opener of the same type on top of the stack.
    """
    opts = options or ParseOptions()
    tokens: List[str] = []
    spans: List[MetadataSpan] = []
    boundaries: List[SuBoundary] = []
    # (opener, raw offset, token index at open)
    stack: List[Tuple[str, int, int]] = []

    for offset, tok in enumerate(text.split()):
        if tok in ("<", "["):
            stack.append((tok, offset, len(tokens)))
        elif tok in _OPENERS:
            want = _OPENERS[tok]
            if not stack:
                raise StrayClose(f"'{tok}' without '{want}'", offset)
            opener, open_offset, start = stack[-1]
            if opener != want:
                raise StrayClose(f"'{tok}' crosses '{opener}' opened at offset {open_offset}", offset)
            stack.pop()
            end = len(tokens)
            if start == end:
                log.debug("Dropping empty '%s %s' group at offset %d", want, tok, open_offset)
                continue
            _add_span(spans, SpanKind.FILLER if want == "<" else SpanKind.EDIT_DELETABLE, start, end)
        elif tok == "*":
            spans.append(MetadataSpan(SpanKind.INTERRUPTION_POINT, len(tokens), len(tokens)))
        else:
            kind = opts.boundary_kind(tok)
            if kind is not None:
                boundaries.append(SuBoundary(len(tokens), kind))
            else:
                tokens.append(tok)

    if stack:
        opener, offset, _ = stack[-1]
        raise UnbalancedMarkup(f"unclosed '{opener}'", offset)

    if opts.filler_words:
        _mark_lexicon_fillers(tokens, spans, opts.filler_words)

    return AnnotatedTranscript(tuple(tokens), tuple(spans), tuple(boundaries))


_TOKEN = re.compile(r"\S+")


def locate_token(text: str, offset: int) -> Tuple[int, int]:
    """1-based ``(line, column)`` of the whitespace token at raw ``offset``."""
    for idx, m in enumerate(_TOKEN.finditer(text)):
        if idx == offset:
            line_start = text.rfind("\n", 0, m.start()) + 1
            return text.count("\n", 0, m.start()) + 1, m.start() - line_start + 1
    raise IndexError(f"no token at offset {offset}")


def render_verbatim(t: AnnotatedTranscript) -> str:
    """Tokens joined by single spaces, markup removed."""
    return " ".join(t.tokens)


def _add_span(spans: List[MetadataSpan], kind: SpanKind, start: int, end: int) -> None:
    # `[ < uh > ]` and `< [ uh ] >` collapse to the edit span alone.
    same = [s for s in spans if s.start == start and s.end == end and s.kind in DELETABLE_KINDS]
    if kind is SpanKind.EDIT_DELETABLE:
        for s in same:
            if s.kind is SpanKind.FILLER:
                spans.remove(s)
    elif any(s.kind is SpanKind.EDIT_DELETABLE for s in same):
        return
    spans.append(MetadataSpan(kind, start, end))


def _mark_lexicon_fillers(tokens: List[str], spans: List[MetadataSpan], words) -> None:
    covered = set()
    for sp in spans:
        if sp.kind in DELETABLE_KINDS:
            covered.update(range(sp.start, sp.end))
    for i, tok in enumerate(tokens):
        if i not in covered and tok.lower() in words:
            spans.append(MetadataSpan(SpanKind.FILLER, i, i + 1))

# -*- coding: utf-8 -*-
"""Readable reference transcripts generated from annotated ones."""
from __future__ import annotations
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from app.core.mde.annotation import AnnotatedTranscript
from app.core.mde.markers import STATEMENT, SuKind, SuType
from app.core.text.casing import capitalize_first_alpha, set_terminal_mark, uppercase_pronoun_i


@dataclass(frozen=True)
class RenderOptions:
    incomplete_mark: str = "."
    other_mark: str = "."
    capitalize_pronoun_i: bool = False

    def __post_init__(self) -> None:
        for mark in (self.incomplete_mark, self.other_mark):
            if mark not in (".", "?", "!"):
                raise ValueError(f"terminal mark must be one of . ? !, got {mark!r}")

    def mark_for(self, kind: SuKind) -> str:
        if kind.type is SuType.STATEMENT:
            return "."
        if kind.type is SuType.QUESTION:
            return "?"
        if kind.type is SuType.INCOMPLETE:
            return self.incomplete_mark
        return self.other_mark


@dataclass(frozen=True)
class ReadableTranscript:
    """Ordered sentences, one per surviving SU.

    Each sentence opens with an uppercase letter or a digit, after any leading
    apostrophe of a clipped word ("'Cause it is.").
    """
    sentences: Tuple[str, ...] = ()

    @property
    def text(self) -> str:
        return " ".join(self.sentences)

    @property
    def lines(self) -> str:
        return "\n".join(self.sentences)

    def __len__(self) -> int:
        return len(self.sentences)


def iter_su_words(t: AnnotatedTranscript) -> Iterator[Tuple[List[str], SuKind]]:
    """Yield the surviving words of each SU, including the implicit trailing one."""
    keep = [not d for d in t.deletable_mask()]
    start = 0
    for b in t.boundaries:
        yield [t.tokens[i] for i in range(start, b.position) if keep[i]], b.kind
        start = b.position
    if start < len(t.tokens):
        yield [t.tokens[i] for i in range(start, len(t.tokens)) if keep[i]], STATEMENT


def make_readable(t: AnnotatedTranscript, options: Optional[RenderOptions] = None) -> ReadableTranscript:
    """Drop fillers and deletable edits, one sentence per SU, capitalized and terminated."""
    opts = options or RenderOptions()
    sentences: List[str] = []
    for words, kind in iter_su_words(t):
        if not words:
            continue
        body = " ".join(words).rstrip(".?!").rstrip()
        if not body:
            continue
        body = capitalize_first_alpha(body)
        if opts.capitalize_pronoun_i:
            body = uppercase_pronoun_i(body)
        sentences.append(set_terminal_mark(body, opts.mark_for(kind)))
    return ReadableTranscript(tuple(sentences))

# -*- coding: utf-8 -*-
"""Rule baseline: disfluency removal followed by a light inverse text normalization.

The production pipeline puts n-best LM rescoring before ITN. Rescoring needs
decoder lattices, so here it is the identity transform.
"""
from __future__ import annotations
from dataclasses import dataclass, field
from typing import List

from app.core.baseline.lexicon import FillerLexicon, default_lexicon
from app.core.text.casing import capitalize_first_alpha, has_terminal_mark, uppercase_pronoun_i

# Trimmed from a token before lexicon / repeat comparison only.
_EDGE_PUNCT = ",.?!;:\""


@dataclass(frozen=True)
class BaselineConfig:
    lexicon: FillerLexicon = field(default_factory=default_lexicon)
    max_repeat_ngram: int = 2
    enable_capitalization: bool = True
    enable_terminal_punctuation: bool = True

    def __post_init__(self) -> None:
        if not 1 <= self.max_repeat_ngram <= 4:
            raise ValueError(f"max_repeat_ngram must be in [1, 4], got {self.max_repeat_ngram}")


def _key(token: str) -> str:
    return token.lower().strip(_EDGE_PUNCT)


def _drop_filled_pauses(tokens: List[str], lex: FillerLexicon) -> List[str]:
    return [t for t in tokens if _key(t) not in lex.filled_pauses]


def _drop_discourse_markers(tokens: List[str], lex: FillerLexicon) -> List[str]:
    longest = lex.longest_marker
    if longest < 2:
        return tokens
    keys = [_key(t) for t in tokens]
    out: List[str] = []
    i = 0
    while i < len(tokens):
        for width in range(min(longest, len(tokens) - i), 1, -1):
            if tuple(keys[i:i + width]) in lex.discourse_markers:
                i += width
                break
        else:
            out.append(tokens[i])
            i += 1
    return out


def _collapse_repeats(tokens: List[str], max_n: int) -> List[str]:
    """Keep one copy of immediately repeated n-grams, longest n first, runs included."""
    tokens = list(tokens)
    keys = [_key(t) for t in tokens]
    for n in range(max_n, 0, -1):
        i = 0
        while i + 2 * n <= len(tokens):
            if keys[i:i + n] == keys[i + n:i + 2 * n]:
                del tokens[i + n:i + 2 * n]
                del keys[i + n:i + 2 * n]
            else:
                i += 1
    return tokens


def remove_disfluencies(text: str, cfg: BaselineConfig) -> str:
    """Remove filled pauses, discourse markers and repeated n-grams.

    The three passes run until nothing more is removed, so a removal that
    brings a new marker or repeat together is handled as well. Only deletions
    happen: the output tokens are a subsequence of the input tokens.
    """
    tokens = text.split()
    while True:
        before = len(tokens)
        tokens = _drop_filled_pauses(tokens, cfg.lexicon)
        tokens = _drop_discourse_markers(tokens, cfg.lexicon)
        tokens = _collapse_repeats(tokens, cfg.max_repeat_ngram)
        if len(tokens) == before:
            return " ".join(tokens)


def apply_itn_lite(text: str, cfg: BaselineConfig) -> str:
    """Capitalize the first letter and the pronoun I, then add a terminal period if missing.

    Internal punctuation is left untouched and no token is added or removed.
    """
    if not text.strip():
        return text
    out = text
    if cfg.enable_capitalization:
        out = capitalize_first_alpha(uppercase_pronoun_i(out))
    if cfg.enable_terminal_punctuation and not has_terminal_mark(out):
        out = out.rstrip() + "."
    return out


def run_baseline(text: str, cfg: BaselineConfig) -> str:
    return apply_itn_lite(remove_disfluencies(text, cfg), cfg)

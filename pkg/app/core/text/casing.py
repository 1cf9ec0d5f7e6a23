# -*- coding: utf-8 -*-
"""Sentence-level casing and terminal punctuation helpers shared by targets and ITN."""
from __future__ import annotations
import re

TERMINAL_MARKS = ".?!"

# Standalone "i" and its contractions; straight or curly apostrophe.
_PRONOUN_I = re.compile(r"(?<![\w'’])i(?=(?:['’](?:m|ve|d|ll))?(?![\w'’]))")


def capitalize_first_alpha(text: str) -> str:
    """Uppercase the first alphanumeric character if it is a letter.

    A sentence opening with a digit ("2nd floor") is left alone. Leading
    apostrophes of clipped words stay in place: "'cause" becomes "'Cause".
    """
    for idx, ch in enumerate(text):
        if ch.isdigit():
            return text
        if ch.isalpha():
            return text[:idx] + ch.upper() + text[idx + 1:]
    return text


def uppercase_pronoun_i(text: str) -> str:
    """Turn ``i``, ``i'm``, ``i've``, ``i'd`` and ``i'll`` into their capitalized forms."""
    return _PRONOUN_I.sub("I", text)


def has_terminal_mark(text: str) -> bool:
    stripped = text.rstrip()
    return bool(stripped) and stripped[-1] in TERMINAL_MARKS


def set_terminal_mark(text: str, mark: str) -> str:
    """Replace any trailing run of terminal marks with exactly one ``mark``."""
    return text.rstrip().rstrip(TERMINAL_MARKS).rstrip() + mark

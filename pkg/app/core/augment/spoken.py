# -*- coding: utf-8 -*-
"""Spoken-form normalization: what an ASR system would emit for the same words."""
from __future__ import annotations
import re

_NON_WORD = re.compile(r"[^\w\s']|_")
_EDGE_QUOTES = "'"


def spoken_form(text: str) -> str:
    """Lowercase, drop punctuation (keeping in-word apostrophes), collapse whitespace.

    >>> spoken_form("Don't stop, please!")
    "don't stop please"
    """
    text = _NON_WORD.sub(" ", text.lower().replace("’", "'"))
    tokens = (t.strip(_EDGE_QUOTES) for t in text.split())
    return " ".join(t for t in tokens if t)

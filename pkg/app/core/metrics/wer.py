# -*- coding: utf-8 -*-
"""Readability-aware WER: word-level Levenshtein without text normalization.

Case and attached punctuation are kept, so "And" vs "and" or "wash." vs
"wash" count as substitutions.
"""
from __future__ import annotations
from dataclasses import dataclass
from typing import List, Sequence

from app.core.common.errors import DataError


class EmptyReference(DataError):
    """The reference has no tokens but the hypothesis does; the rate is undefined."""


def tokenize(text: str) -> List[str]:
    """Split on Unicode whitespace only. Shared by RA-WER and BLEU."""
    return text.split()


@dataclass(frozen=True)
class ErrorCounts:
    substitutions: int = 0
    insertions: int = 0
    deletions: int = 0
    reference_length: int = 0

    @property
    def errors(self) -> int:
        return self.substitutions + self.insertions + self.deletions

    def __add__(self, other: "ErrorCounts") -> "ErrorCounts":
        return ErrorCounts(
            self.substitutions + other.substitutions,
            self.insertions + other.insertions,
            self.deletions + other.deletions,
            self.reference_length + other.reference_length,
        )

    @property
    def rate(self) -> float:
        """(S + I + D) / N; 0 for an empty reference with no errors."""
        if self.reference_length == 0:
            if self.errors == 0:
                return 0.0
            raise EmptyReference(f"{self.insertions} insertion(s) against an empty reference")
        return self.errors / self.reference_length


def align(reference: Sequence[str], hypothesis: Sequence[str]) -> ErrorCounts:
    """Unit-cost Levenshtein alignment with an S/I/D breakdown.

    Backtrace ties prefer substitution (or match), then insertion, then deletion.
    """
    n, m = len(reference), len(hypothesis)
    d = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        d[i][0] = i
    for j in range(1, m + 1):
        d[0][j] = j
    for i in range(1, n + 1):
        row, prev = d[i], d[i - 1]
        r = reference[i - 1]
        for j in range(1, m + 1):
            diag = prev[j - 1] + (0 if r == hypothesis[j - 1] else 1)
            row[j] = min(diag, row[j - 1] + 1, prev[j] + 1)

    subs = ins = dels = 0
    i, j = n, m
    while i > 0 or j > 0:
        if i > 0 and j > 0:
            cost = 0 if reference[i - 1] == hypothesis[j - 1] else 1
            if d[i][j] == d[i - 1][j - 1] + cost:
                subs += cost
                i -= 1
                j -= 1
                continue
        if j > 0 and d[i][j] == d[i][j - 1] + 1:
            ins += 1
            j -= 1
        else:
            dels += 1
            i -= 1
    return ErrorCounts(subs, ins, dels, n)


def ra_wer(reference: str, hypothesis: str) -> ErrorCounts:
    """Per-sentence error components.

    Raises:
        EmptyReference: the reference is empty and the hypothesis is not.
    """
    counts = align(tokenize(reference), tokenize(hypothesis))
    if counts.reference_length == 0 and counts.errors:
        raise EmptyReference(f"empty reference for hypothesis {hypothesis!r}")
    return counts


def corpus_ra_wer(counts: Sequence[ErrorCounts]) -> float:
    """Σ(S+I+D) / Σ(N), not the mean of per-sentence rates."""
    total = ErrorCounts()
    for c in counts:
        total = total + c
    return total.rate

# -*- coding: utf-8 -*-
"""Corpus-level BLEU with clipped n-gram precision and brevity penalty."""
from __future__ import annotations
from collections import Counter
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple
import math

from app.core.common.errors import DataError
from app.core.metrics.wer import tokenize


class LengthMismatch(DataError):
    """Reference and hypothesis lists differ in length."""


@dataclass(frozen=True)
class BleuConfig:
    max_order: int = 4
    # add-one on orders >= 2, for very small corpora
    smooth: bool = False

    def __post_init__(self) -> None:
        if self.max_order < 1:
            raise ValueError("max_order must be >= 1")


@dataclass(frozen=True)
class BleuStats:
    """Sufficient statistics; sums over sentences are order independent."""
    matches: Tuple[int, ...]
    totals: Tuple[int, ...]
    hypothesis_length: int = 0
    reference_length: int = 0

    @classmethod
    def zero(cls, max_order: int = 4) -> "BleuStats":
        return cls((0,) * max_order, (0,) * max_order)

    def __add__(self, other: "BleuStats") -> "BleuStats":
        return BleuStats(
            tuple(a + b for a, b in zip(self.matches, other.matches)),
            tuple(a + b for a, b in zip(self.totals, other.totals)),
            self.hypothesis_length + other.hypothesis_length,
            self.reference_length + other.reference_length,
        )


@dataclass(frozen=True)
class BleuResult:
    bleu: float
    precisions: Tuple[Optional[float], ...]
    brevity_penalty: float
    stats: BleuStats


def _ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def sentence_stats(reference: Sequence[str], hypothesis: Sequence[str], max_order: int = 4) -> BleuStats:
    matches, totals = [], []
    for n in range(1, max_order + 1):
        hyp_ngrams = _ngrams(hypothesis, n)
        ref_ngrams = _ngrams(reference, n)
        matches.append(sum(min(c, ref_ngrams[g]) for g, c in hyp_ngrams.items()))
        totals.append(max(len(hypothesis) - n + 1, 0))
    return BleuStats(tuple(matches), tuple(totals), len(hypothesis), len(reference))


def brevity_penalty(hyp_len: int, ref_len: int) -> float:
    if hyp_len > ref_len:
        return 1.0
    if hyp_len == 0:
        return 0.0
    return math.exp(1.0 - ref_len / hyp_len)


def bleu_from_stats(stats: BleuStats, config: Optional[BleuConfig] = None) -> BleuResult:
    """Score accumulated statistics.

    Orders with no hypothesis n-grams anywhere in the corpus are left out of
    the geometric mean and reported with precision None; any present order
    with zero matches scores 0.
    """
    cfg = config or BleuConfig()
    precisions: List[Optional[float]] = []
    logs: List[float] = []
    zero = False
    for n, (m, t) in enumerate(zip(stats.matches, stats.totals), start=1):
        if cfg.smooth and n > 1:
            m, t = m + 1, t + 1
        if t == 0:
            precisions.append(None)
            continue
        p = m / t
        precisions.append(p)
        if m == 0:
            zero = True
        else:
            logs.append(math.log(p))
    bp = brevity_penalty(stats.hypothesis_length, stats.reference_length)
    if zero or not logs or bp == 0.0:
        score = 0.0
    else:
        score = bp * math.exp(math.fsum(logs) / len(logs)) * 100.0
    return BleuResult(score, tuple(precisions), bp, stats)


def bleu(references: Sequence[str], hypotheses: Sequence[str], config: Optional[BleuConfig] = None) -> BleuResult:
    """Single-reference corpus BLEU over whitespace tokens.

    Raises:
        LengthMismatch: when the two lists differ in length.
    """
    if len(references) != len(hypotheses):
        raise LengthMismatch(f"{len(references)} references vs {len(hypotheses)} hypotheses")
    cfg = config or BleuConfig()
    total = BleuStats.zero(cfg.max_order)
    for ref, hyp in zip(references, hypotheses):
        total = total + sentence_stats(tokenize(ref), tokenize(hyp), cfg.max_order)
    return bleu_from_stats(total, cfg)

# -*- coding: utf-8 -*-
"""Human A/B evaluation: blind sheets, majority vote and the exact binomial test."""
from __future__ import annotations
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union
import random

from scipy.stats import binomtest

from app.core.common.errors import DataError
from app.core.corpus.records import TranscriptRecord, iter_tsv_rows

import logging
log = logging.getLogger(__name__)

LABELS = ("A", "B")
# Presentation labels on a blind sheet: 1 = shown first, 2 = shown second.
SHEET_LABELS = ("1", "2")


class NoCases(DataError):
    """No votes were given."""


class VoteFormatError(DataError):
    """A vote label or case is not usable."""


@dataclass(frozen=True)
class AbCase:
    case_id: str
    labels: Tuple[str, ...]


@dataclass(frozen=True)
class AbTestResult:
    wins_a: int
    wins_b: int
    ties_broken: int
    win_rate_a: float
    p_value: float

    @property
    def cases(self) -> int:
        return self.wins_a + self.wins_b


def binomial_p_value(k: int, n: int) -> float:
    """Exact two-sided binomial test of ``k`` successes in ``n`` trials at p = 0.5.

    Sums the probability of every outcome no more likely than the observed one.
    """
    if n <= 0 or not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n and n > 0, got k={k} n={n}")
    return float(min(1.0, max(0.0, binomtest(k, n, p=0.5, alternative="two-sided").pvalue)))


def _majority(case: AbCase, labels_per_case: Optional[int]) -> Tuple[str, bool]:
    labels = tuple(l.strip().upper() for l in case.labels)
    if labels_per_case is not None and len(labels) != labels_per_case:
        raise VoteFormatError(f"case {case.case_id}: expected {labels_per_case} labels, got {len(labels)}")
    if not labels:
        raise VoteFormatError(f"case {case.case_id}: no labels")
    bad = [l for l in labels if l not in LABELS]
    if bad:
        raise VoteFormatError(f"case {case.case_id}: labels must be A or B, got {bad}")
    a = labels.count("A")
    b = len(labels) - a
    if a == b:
        # ties go to B
        return "B", True
    return ("A" if a > b else "B"), False


def binomial_ab_test(
    votes: Iterable[Union[AbCase, Sequence[str]]],
    labels_per_case: Optional[int] = 3,
) -> AbTestResult:
    """Majority vote per case, then the exact binomial test on A's wins.

    Raises:
        NoCases: for empty input.
        VoteFormatError: for a case with the wrong number of labels or an unknown label.
    """
    wins_a = wins_b = ties = 0
    for idx, v in enumerate(votes):
        case = v if isinstance(v, AbCase) else AbCase(str(idx), tuple(v))
        winner, tie = _majority(case, labels_per_case)
        ties += tie
        if winner == "A":
            wins_a += 1
        else:
            wins_b += 1
    n = wins_a + wins_b
    if n == 0:
        raise NoCases("no A/B cases to test")
    return AbTestResult(wins_a, wins_b, ties, wins_a / n, binomial_p_value(wins_a, n))


def read_votes(path: Path, strict: bool = False) -> List[AbCase]:
    """Read ``case_id<TAB>label1<TAB>label2<TAB>label3`` lines; a case id may appear once."""
    cases: Dict[str, AbCase] = {}
    for line_no, fields in iter_tsv_rows(path, min_fields=2, strict=strict):
        if fields[0] in cases:
            raise VoteFormatError(f"{path}:{line_no}: duplicate case id {fields[0]!r}")
        cases[fields[0]] = AbCase(fields[0], tuple(fields[1:]))
    return list(cases.values())


def read_key(path: Path) -> Dict[str, str]:
    """Read a sheet key: ``case_id<TAB>system shown first`` (A or B)."""
    key = {}
    for line_no, fields in iter_tsv_rows(path, fields=2, strict=True):
        first = fields[1].strip().upper()
        if first not in LABELS:
            raise VoteFormatError(f"{path}:{line_no}: key must name A or B, got {fields[1]!r}")
        if fields[0] in key:
            raise VoteFormatError(f"{path}:{line_no}: duplicate case id {fields[0]!r}")
        key[fields[0]] = first
    return key


def decode_votes(cases: Iterable[AbCase], key: Mapping[str, str]) -> List[AbCase]:
    """Map sheet labels 1/2 back to systems; A/B labels pass through."""
    out = []
    for case in cases:
        first = key.get(case.case_id)
        labels = []
        for label in case.labels:
            label = label.strip().upper()
            if label in SHEET_LABELS:
                if first is None:
                    raise VoteFormatError(f"case {case.case_id}: no key entry to decode {label!r}")
                second = "B" if first == "A" else "A"
                label = first if label == "1" else second
            labels.append(label)
        out.append(AbCase(case.case_id, tuple(labels)))
    return out


def select_eval_cases(
    records: Sequence[TranscriptRecord],
    n: int = 100,
    min_words: int = 20,
    max_words: int = 60,
    seed: int = 0,
) -> List[TranscriptRecord]:
    """Sample ``n`` records whose source length lies in ``[min_words, max_words]``."""
    eligible = sorted(
        (r for r in records if min_words <= len(r.source.split()) <= max_words),
        key=lambda r: r.id,
    )
    if len(eligible) < n:
        log.warning("Only %d records have %d-%d source words; using all of them",
                    len(eligible), min_words, max_words)
        n = len(eligible)
    return random.Random(seed).sample(eligible, n)


@dataclass(frozen=True)
class SheetRow:
    case_id: str
    source: str
    first: str
    second: str


def prepare_ab_sheet(
    cases: Sequence[TranscriptRecord],
    hyps_a: Mapping[str, str],
    hyps_b: Mapping[str, str],
    seed: int = 0,
) -> Tuple[List[SheetRow], Dict[str, str]]:
    """Blind sheet with each case's two outputs in seeded random order, plus the key."""
    rng = random.Random(seed)
    rows, key = [], {}
    for rec in cases:
        if rec.id not in hyps_a or rec.id not in hyps_b:
            raise VoteFormatError(f"case {rec.id}: missing output from system A or B")
        a_first = rng.random() < 0.5
        a, b = hyps_a[rec.id], hyps_b[rec.id]
        rows.append(SheetRow(rec.id, rec.source, a if a_first else b, b if a_first else a))
        key[rec.id] = "A" if a_first else "B"
    return rows, key

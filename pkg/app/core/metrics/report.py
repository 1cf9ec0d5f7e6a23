# -*- coding: utf-8 -*-
"""Corpus scoring and report formatting."""
from __future__ import annotations
from dataclasses import dataclass, field
from typing import Iterable, List, Mapping, Optional, Sequence, Tuple

from app.core.common.errors import DataError
from app.core.common.workers import run_ordered
from app.core.corpus.records import TranscriptRecord
from app.core.metrics.bleu import BleuConfig, BleuStats, bleu_from_stats, sentence_stats
from app.core.metrics.wer import EmptyReference, ErrorCounts, align, tokenize

import logging
log = logging.getLogger(__name__)


class IdMismatch(DataError):
    """Hypotheses do not cover every record id."""

    def __init__(self, missing: Iterable[str]) -> None:
        self.ids = sorted(missing)
        shown = ", ".join(self.ids[:10]) + (" ..." if len(self.ids) > 10 else "")
        super().__init__(f"no hypothesis for {len(self.ids)} record(s): {shown}")


@dataclass(frozen=True)
class SentenceErrors:
    id: str
    counts: ErrorCounts


@dataclass(frozen=True)
class EvalReport:
    ra_wer: float
    bleu: float
    substitutions: int
    insertions: int
    deletions: int
    reference_length: int
    ngram_precisions: Tuple[Optional[float], ...]
    brevity_penalty: float
    hypothesis_length: int
    num_sentences: int
    sentences: Tuple[SentenceErrors, ...] = field(default=(), compare=False, repr=False)


def _score_one(pair: Tuple[str, str, str], max_order: int) -> Tuple[str, ErrorCounts, BleuStats]:
    rid, ref, hyp = pair
    ref_tokens, hyp_tokens = tokenize(ref), tokenize(hyp)
    return rid, align(ref_tokens, hyp_tokens), sentence_stats(ref_tokens, hyp_tokens, max_order)


def score_pairs(
    pairs: Iterable[Tuple[str, str, str]],
    config: Optional[BleuConfig] = None,
    jobs: int = 1,
) -> EvalReport:
    """Score ``(id, reference, hypothesis)`` triples.

    Per-sentence statistics are summed in input order, so the report does not
    depend on ``jobs``.

    Raises:
        EmptyReference: the corpus has no reference tokens but the hypotheses do.
    """
    cfg = config or BleuConfig()
    counts = ErrorCounts()
    stats = BleuStats.zero(cfg.max_order)
    sentences: List[SentenceErrors] = []
    for outcome in run_ordered(lambda p: _score_one(p, cfg.max_order), pairs, jobs=jobs):
        if not outcome.ok:
            raise outcome.error
        rid, c, s = outcome.value
        counts = counts + c
        stats = stats + s
        sentences.append(SentenceErrors(rid, c))

    if counts.reference_length == 0 and counts.errors:
        raise EmptyReference("references are empty but hypotheses are not")
    result = bleu_from_stats(stats, cfg)
    report = EvalReport(
        ra_wer=counts.rate,
        bleu=result.bleu,
        substitutions=counts.substitutions,
        insertions=counts.insertions,
        deletions=counts.deletions,
        reference_length=counts.reference_length,
        ngram_precisions=result.precisions,
        brevity_penalty=result.brevity_penalty,
        hypothesis_length=stats.hypothesis_length,
        num_sentences=len(sentences),
        sentences=tuple(sentences),
    )
    log.debug("Scored %d sentence(s): RA-WER=%.6f BLEU=%.6f", report.num_sentences, report.ra_wer, report.bleu)
    return report


def score_corpus(
    records: Sequence[TranscriptRecord],
    hypotheses: Mapping[str, str],
    config: Optional[BleuConfig] = None,
    jobs: int = 1,
) -> EvalReport:
    """Corpus RA-WER and BLEU of ``hypotheses[id]`` against each record's target.

    Raises:
        IdMismatch: a record id has no hypothesis. Extra hypotheses are ignored.
    """
    missing = [r.id for r in records if r.id not in hypotheses]
    if missing:
        raise IdMismatch(missing)
    extra = len(set(hypotheses) - {r.id for r in records})
    if extra:
        log.warning("Ignoring %d hypothesis id(s) not present in the references", extra)
    return score_pairs(((r.id, r.target, hypotheses[r.id]) for r in records), config, jobs)


def format_report(report: EvalReport) -> str:
    lines = [
        f"ra_wer={report.ra_wer:.6f}",
        f"bleu={report.bleu:.6f}",
        f"substitutions={report.substitutions}",
        f"insertions={report.insertions}",
        f"deletions={report.deletions}",
        f"reference_length={report.reference_length}",
        f"hypothesis_length={report.hypothesis_length}",
        f"brevity_penalty={report.brevity_penalty:.6f}",
    ]
    lines += [
        f"precision_{n}=" + ("n/a" if p is None else f"{p:.6f}")
        for n, p in enumerate(report.ngram_precisions, start=1)
    ]
    lines.append(f"sentences={report.num_sentences}")
    return "\n".join(lines) + "\n"


def format_breakdown(report: EvalReport) -> str:
    return "".join(
        f"{s.id}\t{s.counts.substitutions}\t{s.counts.insertions}\t{s.counts.deletions}\t{s.counts.reference_length}\n"
        for s in report.sentences
    )


def table_rows(reports: Sequence[Tuple[str, EvalReport]]) -> List[Tuple[str, str, str]]:
    rows = [("System", "RA-WER (%)", "BLEU")]
    rows += [(name, f"{r.ra_wer * 100:.2f}", f"{r.bleu:.2f}") for name, r in reports]
    return rows


def format_table(reports: Sequence[Tuple[str, EvalReport]]) -> str:
    """Aligned plain-text table, one row per named report."""
    rows = table_rows(reports)
    widths = [max(len(row[i]) for row in rows) for i in range(3)]
    out = []
    for k, row in enumerate(rows):
        out.append("  ".join([row[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(row[1:], widths[1:])]))
        if k == 0:
            out.append("  ".join("-" * w for w in widths))
    return "\n".join(out) + "\n"

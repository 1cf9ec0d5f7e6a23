# -*- coding: utf-8 -*-
"""Stage-by-stage scoring of the rule baseline."""
from __future__ import annotations
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from app.core.baseline.rules import BaselineConfig, apply_itn_lite, run_baseline
from app.core.corpus.records import TranscriptRecord
from app.core.metrics.bleu import BleuConfig
from app.core.metrics.report import EvalReport, score_pairs

import logging
log = logging.getLogger(__name__)

STAGE_NAMES = ("asr", "lm_rescoring", "itn", "rm_disfluencies")


@dataclass(frozen=True)
class StageResult:
    name: str
    report: EvalReport
    skipped: bool = False


def _stages(cfg: BaselineConfig) -> List[Tuple[str, Callable[[str], str], bool]]:
    return [
        ("asr", lambda text: text, False),
        # needs decoder lattices
        ("lm_rescoring", lambda text: text, True),
        ("itn", lambda text: apply_itn_lite(text, cfg), False),
        ("rm_disfluencies", lambda text: run_baseline(text, cfg), False),
    ]


def evaluate_stages(
    records: Sequence[TranscriptRecord],
    cfg: Optional[BaselineConfig] = None,
    bleu_config: Optional[BleuConfig] = None,
    jobs: int = 1,
) -> List[StageResult]:
    """Score each record's source after every cumulative baseline stage."""
    cfg = cfg or BaselineConfig()
    results: List[StageResult] = []
    for name, fn, skipped in _stages(cfg):
        report = score_pairs(((r.id, r.target, fn(r.source)) for r in records), bleu_config, jobs)
        if skipped:
            log.info("Stage %s is the identity transform (skipped)", name)
        results.append(StageResult(name, report, skipped))
    return results


def stage_table_rows(results: Sequence[StageResult]) -> List[Tuple[str, EvalReport]]:
    return [(f"{r.name} (skipped)" if r.skipped else r.name, r.report) for r in results]

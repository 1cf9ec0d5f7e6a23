# -*- coding: utf-8 -*-
"""``baseline``: rule-based disfluency removal plus light ITN over record sources."""
from __future__ import annotations
import argparse
from dataclasses import replace
from pathlib import Path

from app.cli.config import PipelineConfig
from app.cli.streaming import stream_records
from app.core.baseline import BaselineConfig, evaluate_stages, resolve_lexicon, run_baseline, stage_table_rows
from app.core.common.workers import run_ordered
from app.core.corpus.records import STDIO, TranscriptRecord, atomic_write, read_records, write_records
from app.core.metrics import format_table

import logging
log = logging.getLogger(__name__)


def add_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="input", default=STDIO, help="Record file (default: stdin)")
    p.add_argument("--out", default=STDIO, help="Records with the baseline output as target (default: stdout)")
    p.add_argument("--lexicon", default=None,
                   help="Filler lexicon (default: $READTRANSOR_LEXICON, else the bundled list)")
    p.add_argument("--max-repeat-ngram", type=int, default=2, help="Longest repeated n-gram to collapse (1-4, default 2)")
    p.add_argument("--stages-out", default=None, help="Write a per-stage RA-WER/BLEU table against the input targets")


def _apply(rec: TranscriptRecord, cfg: BaselineConfig) -> TranscriptRecord:
    return replace(rec, target=run_baseline(rec.source, cfg), target_lines=None)


def run(args: argparse.Namespace, cfg: PipelineConfig) -> int:
    base = BaselineConfig(
        lexicon=resolve_lexicon(Path(args.lexicon) if args.lexicon else None),
        max_repeat_ngram=args.max_repeat_ngram,
    )
    if args.stages_out:
        if args.input == STDIO:
            raise ValueError("--stages-out needs --in to be a file")
        results = evaluate_stages(read_records(args.input, strict=cfg.strict), base, jobs=cfg.jobs)
        with atomic_write(args.stages_out) as f:
            f.write(format_table(stage_table_rows(results)))

    def outputs():
        for outcome in run_ordered(lambda r: _apply(r, base), stream_records(args.input, cfg), jobs=cfg.jobs):
            if not outcome.ok:
                raise outcome.error
            yield outcome.value

    n = write_records(args.out, outputs())
    log.info("Baseline applied to %d record(s)", n)
    return 0

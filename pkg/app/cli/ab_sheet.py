# -*- coding: utf-8 -*-
"""``ab-sheet``: a blind side-by-side sheet for human raters, plus its key."""
from __future__ import annotations
import argparse

from app.cli.config import PipelineConfig
from app.cli.streaming import read_hypotheses, stream_records
from app.core.corpus.records import STDIO, write_rows
from app.core.metrics import prepare_ab_sheet, select_eval_cases

import logging
log = logging.getLogger(__name__)


def add_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--records", required=True, help="Records to sample cases from")
    p.add_argument("--hyps-a", required=True, help="System A output records")
    p.add_argument("--hyps-b", required=True, help="System B output records")
    p.add_argument("--n", type=int, default=100, help="Number of cases (default 100)")
    p.add_argument("--min-words", type=int, default=20, help="Shortest source to sample (default 20)")
    p.add_argument("--max-words", type=int, default=60, help="Longest source to sample (default 60)")
    p.add_argument("--seed", type=int, default=0, help="Sampling and ordering seed (default 0)")
    p.add_argument("--out", default=STDIO, help="Sheet: case_id<TAB>source<TAB>output 1<TAB>output 2")
    p.add_argument("--key-out", required=True, help="Key: case_id<TAB>system shown first")


def run(args: argparse.Namespace, cfg: PipelineConfig) -> int:
    if args.n < 1 or args.min_words > args.max_words:
        raise ValueError("need --n >= 1 and --min-words <= --max-words")
    records = list(stream_records(args.records, cfg))
    cases = select_eval_cases(records, args.n, args.min_words, args.max_words, args.seed)
    rows, key = prepare_ab_sheet(
        cases, read_hypotheses(args.hyps_a, cfg), read_hypotheses(args.hyps_b, cfg), args.seed,
    )
    write_rows(args.out, ((r.case_id, r.source, r.first, r.second) for r in rows))
    write_rows(args.key_out, key.items())
    log.info("Sheet with %d case(s) written", len(rows))
    return 0

# -*- coding: utf-8 -*-
"""``abtest``: majority vote per case and the exact binomial test."""
from __future__ import annotations
import argparse

from app.cli.config import PipelineConfig
from app.core.corpus.records import STDIO, atomic_write
from app.core.metrics import binomial_ab_test, decode_votes, read_key, read_votes


def add_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--votes", required=True, help="case_id<TAB>label1<TAB>label2<TAB>label3 lines (A/B, or 1/2 with --key)")
    p.add_argument("--key", default=None, help="Sheet key from ab-sheet, to decode 1/2 labels")
    p.add_argument("--labels-per-case", type=int, default=3, help="Labels expected per case (default 3)")
    p.add_argument("--out", default=STDIO, help="Result file (default: stdout)")


def run(args: argparse.Namespace, cfg: PipelineConfig) -> int:
    if args.labels_per_case < 1:
        raise ValueError("--labels-per-case must be >= 1")
    cases = read_votes(args.votes, strict=cfg.strict)
    if args.key:
        cases = decode_votes(cases, read_key(args.key))
    result = binomial_ab_test(cases, labels_per_case=args.labels_per_case)
    with atomic_write(args.out) as f:
        f.write(
            f"cases={result.cases}\n"
            f"wins_a={result.wins_a}\n"
            f"wins_b={result.wins_b}\n"
            f"ties_broken={result.ties_broken}\n"
            f"win_rate_a={result.win_rate_a:.6f}\n"
            f"p_value={result.p_value:.6e}\n"
        )
    return 0

# -*- coding: utf-8 -*-
"""``score``: corpus RA-WER and BLEU of hypotheses against reference targets."""
from __future__ import annotations
import argparse
from pathlib import Path
import sys

from app.cli.config import PipelineConfig
from app.cli.streaming import read_hypotheses, stream_records
from app.core.corpus.records import STDIO, atomic_write, ensure_unique_ids
from app.core.export.pdf_exporter import export_report_pdf
from app.core.metrics import BleuConfig, format_breakdown, format_report, format_table, score_corpus

import logging
log = logging.getLogger(__name__)


def add_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--refs", required=True, help="Reference records (targets are the references)")
    p.add_argument("--hyps", required=True, help="Hypothesis records, matched by id")
    p.add_argument("--hyp-field", choices=("target", "source"), default="target",
                   help="Which field of the hypothesis records to score (default: target)")
    p.add_argument("--smooth", action="store_true", help="Add-one smoothing for BLEU orders >= 2")
    p.add_argument("--report", default=STDIO, help="key=value report (default: stdout)")
    p.add_argument("--breakdown", default=None, help="Per-sentence id<TAB>S<TAB>I<TAB>D<TAB>ref_len file")
    p.add_argument("--pdf", default=None, help="Also render the report as PDF")


def run(args: argparse.Namespace, cfg: PipelineConfig) -> int:
    refs = list(stream_records(args.refs, cfg))
    ensure_unique_ids(refs)
    hyps = read_hypotheses(args.hyps, cfg, args.hyp_field)
    report = score_corpus(refs, hyps, BleuConfig(smooth=args.smooth), jobs=cfg.jobs)

    with atomic_write(args.report) as f:
        f.write(format_report(report))
    if args.breakdown:
        with atomic_write(args.breakdown) as f:
            f.write(format_breakdown(report))
    name = Path(args.hyps).name if args.hyps != STDIO else "hypotheses"
    if args.pdf:
        export_report_pdf(Path(args.pdf), "Readability evaluation", [(name, report)])
        log.info("PDF report written to %s", args.pdf)
    if cfg.verbosity >= 0:
        sys.stderr.write(format_table([(name, report)]))
    return 0

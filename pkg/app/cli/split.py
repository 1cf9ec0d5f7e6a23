# -*- coding: utf-8 -*-
"""``split``: conversation-disjoint train/valid/test files."""
from __future__ import annotations
import argparse
from pathlib import Path

from app.cli.config import PipelineConfig
from app.cli.streaming import stream_records
from app.core.corpus import split_corpus, write_split


def add_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="input", required=True, help="Record file")
    p.add_argument("--valid", type=int, default=1000, help="Minimum validation records (default 1000)")
    p.add_argument("--test", type=int, default=1000, help="Minimum test records (default 1000)")
    p.add_argument("--seed", type=int, default=0, help="Conversation shuffle seed (default 0)")
    p.add_argument("--out-dir", required=True, help="Directory for train/valid/test.tsv and manifest.tsv")
    p.add_argument("--parallel", action="store_true", help="Also write <split>.src / <split>.tgt")


def run(args: argparse.Namespace, cfg: PipelineConfig) -> int:
    records = list(stream_records(args.input, cfg))
    manifest = split_corpus(records, args.valid, args.test, args.seed)
    write_split(Path(args.out_dir), records, manifest, parallel=args.parallel)
    return 0

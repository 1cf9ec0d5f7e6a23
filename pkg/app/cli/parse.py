# -*- coding: utf-8 -*-
"""``parse``: one annotated conversation to JSON."""
from __future__ import annotations
import argparse
import json
from typing import Optional

from app.cli.config import PipelineConfig
from app.cli.streaming import read_annotated
from app.core.corpus.records import STDIO, atomic_write
from app.core.mde import ParseOptions, load_markers


def add_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="input", default=STDIO,
                   help="Annotated transcript, one conversation per file; markup may span lines (default: stdin)")
    p.add_argument("--markers", default=None, help="Boundary marker table (marker<TAB>kind)")
    p.add_argument("--out", default=STDIO, help="Output file (default: stdout)")
    p.add_argument("--pretty", action="store_true", help="Indent the JSON")


def parse_options(markers: Optional[str]) -> ParseOptions:
    return ParseOptions(markers=load_markers(markers)) if markers else ParseOptions()


def run(args: argparse.Namespace, cfg: PipelineConfig) -> int:
    transcript = read_annotated(args.input, parse_options(args.markers))
    indent = 2 if args.pretty else None
    with atomic_write(args.out) as f:
        f.write(json.dumps(transcript.to_dict(), ensure_ascii=False, indent=indent) + "\n")
    return 0

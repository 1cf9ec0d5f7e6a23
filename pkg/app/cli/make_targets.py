# -*- coding: utf-8 -*-
"""``make-targets``: readable sentences from annotated transcripts."""
from __future__ import annotations
import argparse

from app.cli.config import PipelineConfig
from app.cli.parse import parse_options
from app.cli.streaming import read_annotated
from app.core.corpus.records import STDIO, atomic_write
from app.core.mde import RenderOptions, make_readable

import logging
log = logging.getLogger(__name__)


def add_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="input", default=STDIO, help="Annotated transcript, one conversation per file (default: stdin)")
    p.add_argument("--markers", default=None, help="Boundary marker table (marker<TAB>kind)")
    p.add_argument("--out", default=STDIO, help="One readable sentence per line (default: stdout)")
    p.add_argument("--capitalize-i", action="store_true", help="Also uppercase the pronoun i")


def run(args: argparse.Namespace, cfg: PipelineConfig) -> int:
    options = parse_options(args.markers)
    render = RenderOptions(capitalize_pronoun_i=args.capitalize_i)
    readable = make_readable(read_annotated(args.input, options), render)
    with atomic_write(args.out) as f:
        for sentence in readable.sentences:
            f.write(sentence + "\n")
    log.info("Wrote %d sentence(s)", len(readable))
    return 0

# -*- coding: utf-8 -*-
"""``build``: pair ASR output with readable targets into a record file."""
from __future__ import annotations
import argparse
from typing import Dict, List, Tuple

from app.cli.config import PipelineConfig
from app.cli.parse import parse_options
from app.cli.streaming import collect_unique
from app.core.corpus import build_records
from app.core.corpus.records import MalformedRecord, STDIO, iter_tsv_rows, write_records, write_rows
from app.core.mde import AnnotationError, ReadableTranscript, RenderOptions, make_readable, parse_annotation

import logging
log = logging.getLogger(__name__)


def add_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--annotated", required=True, help="Segments: id<TAB>conversation_id<TAB>annotated text")
    p.add_argument("--sources", required=True, help="ASR output: id<TAB>text")
    p.add_argument("--markers", default=None, help="Boundary marker table (marker<TAB>kind)")
    p.add_argument("--capitalize-i", action="store_true", help="Also uppercase the pronoun i in targets")
    p.add_argument("--out", default=STDIO, help="Record file (default: stdout)")
    p.add_argument("--lines-out", default=None, help="Sidecar with each target's sentence lines")


def _read_segments(args: argparse.Namespace, cfg: PipelineConfig) -> Tuple[Dict[str, ReadableTranscript], Dict[str, str], List[str]]:
    options = parse_options(args.markers)
    render = RenderOptions(capitalize_pronoun_i=args.capitalize_i)
    parsed: List[Tuple[str, Tuple[str, ReadableTranscript]]] = []
    rejected: List[str] = []
    for line_no, (rid, conv_id, annotated) in iter_tsv_rows(args.annotated, fields=3, strict=cfg.strict):
        try:
            readable = make_readable(parse_annotation(annotated, options), render)
        except AnnotationError as e:
            if cfg.strict:
                raise MalformedRecord(args.annotated, line_no, str(e)) from e
            log.warning("%s:%d: skipping segment %s: %s", args.annotated, line_no, rid, e)
            rejected.append(rid)
            continue
        parsed.append((rid, (conv_id, readable)))
    segments = collect_unique(parsed, args.annotated)
    targets = {rid: readable for rid, (_, readable) in segments.items()}
    conv = {rid: conv_id for rid, (conv_id, _) in segments.items()}
    return targets, conv, rejected


def run(args: argparse.Namespace, cfg: PipelineConfig) -> int:
    targets, conv, rejected = _read_segments(args, cfg)
    sources = collect_unique(
        ((rid, text) for _, (rid, text) in iter_tsv_rows(args.sources, fields=2, strict=cfg.strict)),
        args.sources,
    )
    for rid in rejected:
        if sources.pop(rid, None) is not None:
            log.warning("Dropping ASR output for rejected segment %s", rid)

    records = build_records(sources, targets, conv)
    n = write_records(args.out, records)
    if args.lines_out:
        write_rows(args.lines_out, ((r.id, "\n".join(r.target_lines or ())) for r in records))
    log.info("Built %d record(s)", n)
    return 0

# -*- coding: utf-8 -*-
"""Input readers with a progress counter and per-line diagnostics."""
from __future__ import annotations
from typing import Dict, Iterable, Iterator, Optional, Tuple, TypeVar

from tqdm import tqdm

from app.cli.config import PipelineConfig
from app.core.corpus.records import (
    STDIO,
    DuplicateRecordId,
    MalformedRecord,
    PathLike,
    ReadStats,
    TranscriptRecord,
    iter_records,
    open_input,
)
from app.core.mde import AnnotatedTranscript, AnnotationError, ParseOptions, locate_token, parse_annotation

import logging
log = logging.getLogger(__name__)

T = TypeVar("T")


def counted(items: Iterable[T], cfg: PipelineConfig, desc: str) -> Iterator[T]:
    """Wrap ``items`` in a stderr line counter when progress display is on."""
    return iter(tqdm(items, desc=desc, unit=" lines", disable=not cfg.progress, leave=False))


def stream_records(path: PathLike, cfg: PipelineConfig, stats: Optional[ReadStats] = None) -> Iterator[TranscriptRecord]:
    """Records one line at a time; malformed lines are skipped with a warning unless ``--strict``."""
    stats = stats if stats is not None else ReadStats()
    yield from counted(iter_records(path, strict=cfg.strict, stats=stats), cfg, "records")
    if stats.malformed:
        log.warning("%s: %d malformed line(s) skipped", path, stats.malformed)


def read_annotated(path: PathLike, options: ParseOptions) -> AnnotatedTranscript:
    """Parse one conversation: the whole file is a single annotated transcript.

    Line breaks are ordinary whitespace, so markup may span lines. A markup
    error stops the run with the line and column of the offending token.
    """
    name = "<stdin>" if str(path) == STDIO else str(path)
    with open_input(path) as f:
        text = f.read()
    try:
        transcript = parse_annotation(text, options)
    except AnnotationError as e:
        line_no, column = locate_token(text, e.offset)
        raise MalformedRecord(name, line_no, f"column {column}: {e}") from e
    log.debug("%s: %d token(s), %d SU boundary(ies)", name, len(transcript.tokens), len(transcript.boundaries))
    return transcript


def collect_unique(pairs: Iterable[Tuple[str, T]], name: str) -> Dict[str, T]:
    """Dict from ``(id, value)`` pairs, keeping first-seen order; a repeated id is an error."""
    out: Dict[str, T] = {}
    for key, value in pairs:
        if key in out:
            raise DuplicateRecordId(f"{name}: duplicate id {key}")
        out[key] = value
    return out


def read_hypotheses(path: PathLike, cfg: PipelineConfig, field: str = "target") -> Dict[str, str]:
    """``id -> text`` from a record file, taking the ``target`` (system output) or ``source`` field."""
    return collect_unique(((r.id, getattr(r, field)) for r in stream_records(path, cfg)), str(path))

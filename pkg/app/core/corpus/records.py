# -*- coding: utf-8 -*-
"""Line-delimited TSV records with backslash escaping.

Record lines are ``id<TAB>conversation_id<TAB>source<TAB>target``; inside a
field, backslash, tab, newline and carriage return are written as ``\\\\``,
``\\t``, ``\\n`` and ``\\r``.
"""
from __future__ import annotations
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Iterator, List, Optional, TextIO, Tuple, TypeVar, Union
import os
import sys

from app.core.common.errors import DataError

import logging
log = logging.getLogger(__name__)

STDIO = "-"
T = TypeVar("T")
PathLike = Union[str, Path]

_ESCAPES = {"\\": "\\\\", "\t": "\\t", "\n": "\\n", "\r": "\\r"}
_UNESCAPES = {"\\": "\\", "t": "\t", "n": "\n", "r": "\r"}


class RecordFormatError(DataError):
    """Raised for unreadable record files."""


class MalformedRecord(RecordFormatError):
    def __init__(self, source: str, line_no: int, reason: str) -> None:
        super().__init__(f"{source}:{line_no}: malformed line: {reason}")
        self.line_no = line_no
        self.reason = reason


class DuplicateRecordId(RecordFormatError):
    """The same record id occurs twice in one corpus."""


@dataclass(frozen=True)
class TranscriptRecord:
    id: str
    conversation_id: str
    source: str
    target: str
    # Sentence lines of the target, when known; not part of the TSV line.
    target_lines: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("record id must be nonempty")
        if not self.conversation_id:
            raise ValueError(f"record {self.id}: conversation_id must be nonempty")


@dataclass
class ReadStats:
    lines: int = 0
    rows: int = 0
    malformed: int = 0


def escape_field(value: str) -> str:
    return "".join(_ESCAPES.get(ch, ch) for ch in value)


def unescape_field(value: str) -> str:
    """Inverse of ``escape_field``; raises ValueError on a dangling or unknown escape."""
    if "\\" not in value:
        return value
    out: List[str] = []
    i = 0
    while i < len(value):
        ch = value[i]
        if ch == "\\":
            if i + 1 >= len(value) or value[i + 1] not in _UNESCAPES:
                raise ValueError(f"bad escape at column {i + 1}")
            out.append(_UNESCAPES[value[i + 1]])
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)


def format_row(fields: Iterable[str]) -> str:
    return "\t".join(escape_field(f) for f in fields)


def format_record(rec: TranscriptRecord) -> str:
    return format_row((rec.id, rec.conversation_id, rec.source, rec.target))


def record_from_fields(fields: Tuple[str, ...]) -> TranscriptRecord:
    return TranscriptRecord(*fields)


@contextmanager
def open_input(path: PathLike) -> Iterator[TextIO]:
    if str(path) == STDIO:
        yield sys.stdin
    else:
        with open(path, "r", encoding="utf-8") as f:
            yield f


def iter_tsv_rows(
    path: PathLike,
    fields: Optional[int] = None,
    min_fields: Optional[int] = None,
    strict: bool = False,
    stats: Optional[ReadStats] = None,
    row_factory: Optional[Callable[[Tuple[str, ...]], T]] = None,
) -> Iterator[Tuple[int, T]]:
    """Stream ``(line_no, row)`` pairs from a TSV file, one line at a time.

    Blank lines are skipped. A malformed line (wrong field count, bad escape,
    or a ``row_factory`` ValueError) raises MalformedRecord when ``strict``,
    otherwise it is logged with its line number and counted in ``stats``.
    """
    stats = stats if stats is not None else ReadStats()
    name = "<stdin>" if str(path) == STDIO else str(path)
    with open_input(path) as f:
        for line_no, line in enumerate(f, start=1):
            line = line.rstrip("\r\n")
            if not line.strip():
                continue
            stats.lines += 1
            try:
                parts = line.split("\t")
                if fields is not None and len(parts) != fields:
                    raise ValueError(f"expected {fields} fields, got {len(parts)}")
                if min_fields is not None and len(parts) < min_fields:
                    raise ValueError(f"expected at least {min_fields} fields, got {len(parts)}")
                row = tuple(unescape_field(p) for p in parts)
                value = row_factory(row) if row_factory else row
            except ValueError as e:
                if strict:
                    raise MalformedRecord(name, line_no, str(e)) from e
                stats.malformed += 1
                log.warning("%s:%d: skipping malformed line: %s", name, line_no, e)
                continue
            stats.rows += 1
            yield line_no, value


def iter_records(path: PathLike, strict: bool = False, stats: Optional[ReadStats] = None) -> Iterator[TranscriptRecord]:
    for _, rec in iter_tsv_rows(path, fields=4, strict=strict, stats=stats, row_factory=record_from_fields):
        yield rec


def read_records(path: PathLike, strict: bool = False) -> List[TranscriptRecord]:
    return list(iter_records(path, strict=strict))


@contextmanager
def atomic_write(path: PathLike) -> Iterator[TextIO]:
    """Write to ``<path>.tmp`` and rename over ``path`` on success; ``-`` is stdout."""
    if str(path) == STDIO:
        yield sys.stdout
        sys.stdout.flush()
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    tmp = target.with_name(target.name + ".tmp")
    try:
        with open(tmp, "w", encoding="utf-8", newline="\n") as f:
            yield f
        os.replace(tmp, target)
    except BaseException:
        tmp.unlink(missing_ok=True)
        raise


def write_rows(path: PathLike, rows: Iterable[Iterable[str]]) -> int:
    n = 0
    with atomic_write(path) as f:
        for row in rows:
            f.write(format_row(row) + "\n")
            n += 1
    return n


def write_records(path: PathLike, records: Iterable[TranscriptRecord]) -> int:
    """Stream records to ``path`` atomically; returns the count written."""
    n = 0
    with atomic_write(path) as f:
        for rec in records:
            f.write(format_record(rec) + "\n")
            n += 1
    log.debug("Wrote %d records to %s", n, path)
    return n


def write_parallel(records: Iterable[TranscriptRecord], src_path: PathLike, tgt_path: PathLike) -> int:
    """One-sentence-per-line source/target files for seq2seq training toolkits."""
    n = 0
    with atomic_write(src_path) as src, atomic_write(tgt_path) as tgt:
        for rec in records:
            src.write(" ".join(rec.source.split()) + "\n")
            tgt.write(" ".join(rec.target.split()) + "\n")
            n += 1
    return n


def ensure_unique_ids(records: Iterable[TranscriptRecord]) -> None:
    seen = set()
    for rec in records:
        if rec.id in seen:
            raise DuplicateRecordId(f"duplicate record id: {rec.id}")
        seen.add(rec.id)

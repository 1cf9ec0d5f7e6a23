# -*- coding: utf-8 -*-
"""Gold corpus records, construction and splitting."""
from app.core.corpus.builder import (
    MissingConversation,
    MissingSource,
    MissingTarget,
    build_records,
    targets_from_segments,
)
from app.core.corpus.records import (
    DuplicateRecordId,
    MalformedRecord,
    ReadStats,
    RecordFormatError,
    TranscriptRecord,
    escape_field,
    iter_records,
    iter_tsv_rows,
    read_records,
    unescape_field,
    write_parallel,
    write_records,
)
from app.core.corpus.split import SplitManifest, SplitTooLarge, TooFewConversations, split_corpus, write_split

__all__ = [
    "MissingConversation", "MissingSource", "MissingTarget", "build_records", "targets_from_segments",
    "DuplicateRecordId", "MalformedRecord", "ReadStats", "RecordFormatError", "TranscriptRecord",
    "escape_field", "iter_records", "iter_tsv_rows", "read_records", "unescape_field",
    "write_parallel", "write_records", "SplitManifest", "SplitTooLarge", "TooFewConversations",
    "split_corpus", "write_split",
]

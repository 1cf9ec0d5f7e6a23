# -*- coding: utf-8 -*-
"""Conversation-disjoint train/valid/test splitting."""
from __future__ import annotations
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Sequence, Tuple
import random

from app.core.common.errors import DataError
from app.core.corpus.records import (
    TranscriptRecord,
    atomic_write,
    ensure_unique_ids,
    write_parallel,
    write_records,
)

import logging
log = logging.getLogger(__name__)

SPLITS = ("train", "valid", "test")


class TooFewConversations(DataError):
    """Fewer than three distinct conversations."""


class SplitTooLarge(DataError):
    """Requested valid + test sizes leave no training data."""


@dataclass(frozen=True)
class SplitManifest:
    train: Tuple[str, ...]
    valid: Tuple[str, ...]
    test: Tuple[str, ...]
    seed: int

    @property
    def counts(self) -> Dict[str, int]:
        return {name: len(getattr(self, name)) for name in SPLITS}

    def ids(self, name: str) -> Tuple[str, ...]:
        return getattr(self, name)


def split_corpus(records: Sequence[TranscriptRecord], valid_size: int, test_size: int, seed: int) -> SplitManifest:
    """Assign whole conversations to valid, then test, then train.

    Conversations are shuffled with a seeded RNG; valid and test take
    conversations until their record count first reaches the requested size,
    so they may overshoot. Everything else is train.
    """
    if valid_size < 0 or test_size < 0:
        raise ValueError("split sizes must be >= 0")
    ensure_unique_ids(records)
    by_conv: Dict[str, List[str]] = {}
    for rec in records:
        by_conv.setdefault(rec.conversation_id, []).append(rec.id)
    if len(by_conv) < 3:
        raise TooFewConversations(f"need at least 3 conversations, got {len(by_conv)}")
    if valid_size + test_size >= len(records):
        raise SplitTooLarge(f"valid {valid_size} + test {test_size} >= {len(records)} records")

    order = sorted(by_conv)
    random.Random(seed).shuffle(order)

    assigned: Dict[str, List[str]] = {name: [] for name in SPLITS}
    queue = iter(order)
    for name, size in (("valid", valid_size), ("test", test_size)):
        while len(assigned[name]) < size:
            conv_id = next(queue, None)
            if conv_id is None:
                break
            assigned[name].extend(by_conv[conv_id])
    for conv_id in queue:
        assigned["train"].extend(by_conv[conv_id])
    if not assigned["train"]:
        raise SplitTooLarge("no conversations left for train after filling valid and test")

    manifest = SplitManifest(
        train=tuple(assigned["train"]), valid=tuple(assigned["valid"]), test=tuple(assigned["test"]), seed=seed,
    )
    log.info("Split seed=%d counts=%s conversations=%d", seed, manifest.counts, len(order))
    return manifest


def format_manifest(manifest: SplitManifest, records: Sequence[TranscriptRecord]) -> List[str]:
    conv = {r.id: r.conversation_id for r in records}
    c = manifest.counts
    lines = [
        f"# seed={manifest.seed}",
        f"# counts train={c['train']} valid={c['valid']} test={c['test']}",
    ]
    for name in SPLITS:
        lines.extend(f"{rid}\t{conv[rid]}\t{name}" for rid in manifest.ids(name))
    return lines


def write_split(
    out_dir: Path,
    records: Sequence[TranscriptRecord],
    manifest: SplitManifest,
    parallel: bool = False,
) -> Dict[str, Path]:
    """Write ``train.tsv``, ``valid.tsv``, ``test.tsv`` and ``manifest.tsv`` (plus .src/.tgt)."""
    out_dir.mkdir(parents=True, exist_ok=True)
    by_id = {r.id: r for r in records}
    written: Dict[str, Path] = {}
    for name in SPLITS:
        rows = [by_id[rid] for rid in manifest.ids(name)]
        path = out_dir / f"{name}.tsv"
        write_records(path, rows)
        written[name] = path
        if parallel:
            write_parallel(rows, out_dir / f"{name}.src", out_dir / f"{name}.tgt")
    path = out_dir / "manifest.tsv"
    with atomic_write(path) as f:
        f.write("\n".join(format_manifest(manifest, records)) + "\n")
    written["manifest"] = path
    return written

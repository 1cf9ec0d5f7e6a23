# -*- coding: utf-8 -*-
"""Seed pairs through the speech channel into training records."""
from __future__ import annotations
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Sequence
import json

from app.core.augment.adapters import AdapterCallFailed, ChannelAdapter
from app.core.augment.channel import ChannelConfig, ChannelMode, simulate_channel
from app.core.augment.spoken import spoken_form
from app.core.common.errors import DataError
from app.core.common.workers import run_ordered
from app.core.corpus.records import PathLike, ReadStats, TranscriptRecord, atomic_write, iter_tsv_rows
from app._version import RECORD_FORMAT_VERSION, __version__

import logging
log = logging.getLogger(__name__)


class NoSeeds(DataError):
    """The seed file held no usable seed pairs."""


@dataclass(frozen=True)
class SeedPair:
    id: str
    ungrammatical: str
    corrected: str

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("seed id is empty")
        if not self.ungrammatical.strip() or not self.corrected.strip():
            raise ValueError(f"seed {self.id!r} has an empty side")


@dataclass(frozen=True)
class AugmentedRecord:
    id: str
    source: str
    target: str

    def to_record(self) -> TranscriptRecord:
        # each seed sentence is its own conversation
        return TranscriptRecord(id=self.id, conversation_id=self.id, source=self.source, target=self.target)


@dataclass
class AugmentStats:
    seeds: int = 0
    written: int = 0
    skipped: List[str] = field(default_factory=list)


def read_seeds(path: PathLike, strict: bool = False, stats: Optional[ReadStats] = None) -> Iterator[SeedPair]:
    """Stream ``id<TAB>ungrammatical<TAB>corrected`` lines."""
    for _, seed in iter_tsv_rows(path, fields=3, strict=strict, stats=stats, row_factory=lambda f: SeedPair(*f)):
        yield seed


def _through_channel(seed: SeedPair, cfg: ChannelConfig, adapter: Optional[ChannelAdapter]) -> AugmentedRecord:
    if cfg.mode is ChannelMode.SIMULATED:
        source = simulate_channel(seed.ungrammatical, cfg, seed.id)
    else:
        source = spoken_form(adapter.transcribe(seed.ungrammatical))
    return AugmentedRecord(seed.id, source, seed.corrected)


def iter_augmentation(
    seeds: Iterable[SeedPair],
    cfg: ChannelConfig,
    adapter: Optional[ChannelAdapter] = None,
    jobs: int = 1,
    stats: Optional[AugmentStats] = None,
) -> Iterator[AugmentedRecord]:
    """Yield one record per seed in input order; failed adapter calls are logged and skipped.

    Raises:
        AdapterUnavailable: external mode and ``adapter.check()`` fails before any work.
        ValueError: external mode without an adapter.
        NoSeeds: no seed pairs at all.
    """
    stats = stats if stats is not None else AugmentStats()
    if cfg.mode is ChannelMode.EXTERNAL:
        if adapter is None:
            raise ValueError("external channel mode needs an adapter")
        adapter.check()
        jobs = adapter.config.concurrency

    for outcome in run_ordered(lambda s: _through_channel(s, cfg, adapter), seeds, jobs=jobs):
        stats.seeds += 1
        if outcome.ok:
            stats.written += 1
            yield outcome.value
        elif isinstance(outcome.error, AdapterCallFailed):
            stats.skipped.append(outcome.item.id)
            log.warning("Skipping seed %s: %s", outcome.item.id, outcome.error)
        else:
            raise outcome.error

    if stats.seeds == 0:
        raise NoSeeds("no seed pairs to augment")
    if stats.skipped:
        log.info("Augmented %d of %d seed(s); %d skipped", stats.written, stats.seeds, len(stats.skipped))


def run_augmentation(
    seeds: Sequence[SeedPair],
    cfg: ChannelConfig,
    adapter: Optional[ChannelAdapter] = None,
    jobs: int = 1,
    stats: Optional[AugmentStats] = None,
) -> List[AugmentedRecord]:
    if not seeds:
        raise NoSeeds("no seed pairs to augment")
    return list(iter_augmentation(seeds, cfg, adapter, jobs, stats))


def meta_path(out: Path) -> Path:
    return out.with_name(out.name + ".meta.json")


def write_meta(out: Path, cfg: ChannelConfig, stats: AugmentStats, adapter_target: Optional[str] = None) -> Path:
    """Sidecar with the effective channel settings and per-run counts."""
    payload = {
        "version": __version__,
        "record_format": RECORD_FORMAT_VERSION,
        "channel": cfg.to_dict(),
        "adapter": adapter_target,
        "seeds": stats.seeds,
        "written": stats.written,
        "skipped": stats.skipped,
    }
    path = meta_path(out)
    with atomic_write(path) as f:
        f.write(json.dumps(payload, ensure_ascii=False, indent=2) + "\n")
    return path

# -*- coding: utf-8 -*-
"""``augment``: seed pairs through a simulated or external speech channel."""
from __future__ import annotations
import argparse
from pathlib import Path

from app.cli.config import PipelineConfig
from app.cli.streaming import counted
from app.core.augment import (
    AdapterConfig,
    AugmentStats,
    ChannelConfig,
    ChannelMode,
    default_confusions,
    iter_augmentation,
    load_confusions,
    make_adapter,
    read_seeds,
    write_meta,
)
from app.core.corpus.records import STDIO, ReadStats, write_records

import logging
log = logging.getLogger(__name__)


def add_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seeds", required=True, help="id<TAB>ungrammatical<TAB>corrected lines")
    p.add_argument("--mode", choices=[m.value for m in ChannelMode], default=ChannelMode.SIMULATED.value)
    p.add_argument("--seed", type=int, default=0, help="Channel seed (default 0)")
    p.add_argument("--sub-rate", type=float, default=0.0, help="Per-token substitution probability")
    p.add_argument("--del-rate", type=float, default=0.0, help="Per-token deletion probability")
    p.add_argument("--ins-rate", type=float, default=0.0, help="Per-token insertion probability")
    p.add_argument("--confusions", default=None, help="Confusion table word<TAB>cand1|cand2 (default: bundled)")
    p.add_argument("--adapter", default=None, help="External channel: command line or http(s) URL")
    p.add_argument("--timeout", type=float, default=30.0, help="Seconds per external call (default 30)")
    p.add_argument("--concurrency", type=int, default=4, help="Parallel external calls (default 4)")
    p.add_argument("--out", default=STDIO, help="Record file (default: stdout)")


def run(args: argparse.Namespace, cfg: PipelineConfig) -> int:
    channel = ChannelConfig(
        mode=ChannelMode(args.mode),
        seed=args.seed,
        sub_rate=args.sub_rate,
        del_rate=args.del_rate,
        ins_rate=args.ins_rate,
        confusion_table=load_confusions(Path(args.confusions)) if args.confusions else default_confusions(),
    )
    adapter = None
    if channel.mode is ChannelMode.EXTERNAL:
        if not args.adapter:
            raise ValueError("--mode external needs --adapter")
        adapter = make_adapter(AdapterConfig(args.adapter, timeout_s=args.timeout, concurrency=args.concurrency))

    stats = AugmentStats()
    seeds = counted(read_seeds(args.seeds, strict=cfg.strict, stats=ReadStats()), cfg, "seeds")
    records = (a.to_record() for a in iter_augmentation(seeds, channel, adapter, jobs=cfg.jobs, stats=stats))
    write_records(args.out, records)
    if args.out != STDIO:
        log.info("Run metadata written to %s", write_meta(Path(args.out), channel, stats, args.adapter))
    log.info("Augmented %d record(s), skipped %d", stats.written, len(stats.skipped))
    return 0

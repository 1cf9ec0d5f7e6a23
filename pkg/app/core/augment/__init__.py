# -*- coding: utf-8 -*-
"""GEC-seeded data augmentation through a speech channel."""
from app.core.augment.adapters import (
    AdapterCallFailed,
    AdapterConfig,
    AdapterUnavailable,
    HttpAdapter,
    SubprocessAdapter,
    make_adapter,
)
from app.core.augment.channel import (
    ChannelConfig,
    ChannelMode,
    ChannelTrace,
    ConfusionTableError,
    default_confusions,
    load_confusions,
    simulate_channel,
    simulate_channel_traced,
)
from app.core.augment.pipeline import (
    AugmentedRecord,
    AugmentStats,
    NoSeeds,
    SeedPair,
    iter_augmentation,
    read_seeds,
    run_augmentation,
    write_meta,
)
from app.core.augment.spoken import spoken_form

__all__ = [
    "AdapterCallFailed", "AdapterConfig", "AdapterUnavailable", "HttpAdapter", "SubprocessAdapter", "make_adapter",
    "ChannelConfig", "ChannelMode", "ChannelTrace", "ConfusionTableError", "default_confusions",
    "load_confusions", "simulate_channel", "simulate_channel_traced",
    "AugmentedRecord", "AugmentStats", "NoSeeds", "SeedPair", "iter_augmentation", "read_seeds", "run_augmentation",
    "write_meta", "spoken_form",
]

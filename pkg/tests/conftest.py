# -*- coding: utf-8 -*-
from __future__ import annotations
from pathlib import Path
from typing import List
import random

import pytest

from app.core.corpus.records import TranscriptRecord, write_records

WORKED_EXAMPLE = (
    "and < uh > < you know > wash your clothes wherever you are /. "
    "and [ you ] * you really get used to the outdoors ./"
)
# Same conversation as laid out in the corpus files, wrapped across lines.
WORKED_BLOCK = (
    "and < uh > < you know > wash your clothes \n"
    "wherever you are /. and [ you ] * you \n"
    "really get used to the outdoors ./\n"
)
WORKED_SENTENCES = (
    "And wash your clothes wherever you are.",
    "And you really get used to the outdoors.",
)


@pytest.fixture
def worked_example() -> str:
    return WORKED_EXAMPLE


@pytest.fixture
def make_corpus():
    """Synthetic records: ``records_per_conv`` records in each of ``conversations`` conversations."""
    def _make(conversations: int, records_per_conv: int, seed: int = 0) -> List[TranscriptRecord]:
        rng = random.Random(seed)
        words = ["we", "went", "to", "the", "park", "and", "it", "was", "nice", "today"]
        out = []
        for c in range(conversations):
            for r in range(records_per_conv):
                text = " ".join(rng.choice(words) for _ in range(rng.randint(3, 8)))
                out.append(TranscriptRecord(f"c{c:03d}-{r:04d}", f"conv{c:03d}", text, text.capitalize() + "."))
        return out
    return _make


@pytest.fixture
def records_file(tmp_path: Path):
    def _write(records, name: str = "records.tsv") -> Path:
        path = tmp_path / name
        write_records(path, records)
        return path
    return _write

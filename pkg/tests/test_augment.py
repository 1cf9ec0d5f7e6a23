# -*- coding: utf-8 -*-
from __future__ import annotations
import json
import random
import shutil

import numpy as np
import pytest
import requests

from app.core.augment import (
    AdapterCallFailed,
    AdapterConfig,
    AdapterUnavailable,
    AugmentStats,
    ChannelConfig,
    ChannelMode,
    ConfusionTableError,
    HttpAdapter,
    NoSeeds,
    SeedPair,
    SubprocessAdapter,
    default_confusions,
    load_confusions,
    make_adapter,
    read_seeds,
    run_augmentation,
    simulate_channel,
    simulate_channel_traced,
    spoken_form,
    write_meta,
)
from app.core.augment.channel import _perturb_chars
from app.core.corpus.records import ReadStats

VOCAB = ["she", "go", "to", "their", "school", "a", "then", "we", "went", "home", "it", "rained"]


@pytest.mark.parametrize("text, expected", [
    ("I am going home.", "i am going home"),
    ("", ""),
    ("Don't stop, please!", "don't stop please"),
    ("  Well -- it's   'quoted' ", "well it's quoted"),
    ("Don’t", "don't"),
    ("snake_case and 3.5", "snake case and 3 5"),
])
def test_spoken_form(text, expected):
    assert spoken_form(text) == expected


def _seeds(n: int, seed: int = 0):
    rng = random.Random(seed)
    return [
        SeedPair(f"s{i:04d}", " ".join(rng.choice(VOCAB) for _ in range(rng.randint(3, 12))).capitalize() + ".",
                 f"Corrected sentence {i}.")
        for i in range(n)
    ]


def test_zero_noise_is_spoken_form():
    cfg = ChannelConfig(seed=42)
    for seed in _seeds(50):
        assert simulate_channel(seed.ungrammatical, cfg, seed.id) == spoken_form(seed.ungrammatical)


def test_channel_is_deterministic_per_record():
    cfg = ChannelConfig(seed=7, sub_rate=0.1, del_rate=0.05, ins_rate=0.05)
    text = "She go to their school then we went home and it rained"
    assert simulate_channel(text, cfg, "r1") == simulate_channel(text, cfg, "r1")
    outputs = {simulate_channel(text, ChannelConfig(seed=s, sub_rate=0.3, del_rate=0.1, ins_rate=0.1), "r1")
               for s in range(10)}
    assert len(outputs) > 1


def test_channel_rates_are_calibrated():
    cfg = ChannelConfig(seed=3, sub_rate=0.1, del_rate=0.05, ins_rate=0.05)
    rng = random.Random(1)
    tokens = subs = dels = ins = 0
    for i in range(400):
        text = " ".join(rng.choice(VOCAB) for _ in range(100))
        trace = simulate_channel_traced(text, cfg, f"r{i}")
        tokens += trace.tokens
        subs += trace.substitutions
        dels += trace.deletions
        ins += trace.insertions
    assert tokens == 40_000
    assert abs(subs / tokens - 0.1) < 0.01
    assert abs(dels / tokens - 0.05) < 0.005
    assert abs(ins / tokens - 0.05) < 0.005


def test_substitution_uses_confusion_table():
    cfg = ChannelConfig(seed=0, sub_rate=0.5)
    out = simulate_channel(" ".join(["their"] * 300), cfg, "r").split()
    assert set(out) <= {"their", "there", "they're"}
    assert {"there", "they're"} & set(out)


def test_char_perturbation_always_changes_word():
    rng = np.random.default_rng(0)
    for word in ["a", "aa", "ab", "school", "zzz", "it's"] * 50:
        out = _perturb_chars(word, rng)
        assert out and out != word


def test_channel_config_validation():
    with pytest.raises(ValueError):
        ChannelConfig(sub_rate=0.6)
    with pytest.raises(ValueError):
        ChannelConfig(ins_rate=-0.1)
    with pytest.raises(ValueError):
        ChannelConfig(seed=-1)
    with pytest.raises(ValueError):
        simulate_channel("x", ChannelConfig(mode=ChannelMode.EXTERNAL))


def test_confusion_tables(tmp_path):
    assert default_confusions()["their"] == ("there", "they're")
    assert default_confusions()["pose"][0] == "a post"
    good = tmp_path / "conf.tsv"
    good.write_text("# c\nTo\ttoo|two|to\n", encoding="utf-8")
    assert dict(load_confusions(good)) == {"to": ("too", "two")}
    bad = tmp_path / "bad.tsv"
    bad.write_text("to too two\n", encoding="utf-8")
    with pytest.raises(ConfusionTableError):
        load_confusions(bad)


def test_seed_pair_validation():
    with pytest.raises(ValueError):
        SeedPair("s1", " ", "x")
    with pytest.raises(ValueError):
        SeedPair("", "x", "y")


# ---- pipeline ----

def test_simulated_zero_noise_run():
    seeds = _seeds(100)
    out = run_augmentation(seeds, ChannelConfig(seed=1))
    assert len(out) == 100
    for seed, rec in zip(seeds, out):
        assert rec.id == seed.id
        assert rec.source == spoken_form(seed.ungrammatical)
        assert rec.target == seed.corrected


def test_grammar_error_seed_pair():
    seeds = [SeedPair("s1", "She go to school yesterday.", "She went to school yesterday.")]
    rec = run_augmentation(seeds, ChannelConfig())[0]
    assert (rec.source, rec.target) == ("she go to school yesterday", "She went to school yesterday.")
    record = rec.to_record()
    assert record.conversation_id == "s1"


def test_parallel_run_is_identical():
    seeds = _seeds(300, seed=4)
    cfg = ChannelConfig(seed=9, sub_rate=0.1, del_rate=0.05, ins_rate=0.05)
    assert run_augmentation(seeds, cfg, jobs=1) == run_augmentation(seeds, cfg, jobs=8)


def test_empty_seed_list():
    with pytest.raises(NoSeeds):
        run_augmentation([], ChannelConfig())


class FakeAdapter:
    def __init__(self, fail_on=(), reachable=True):
        self.config = AdapterConfig("fake-adapter", concurrency=3)
        self.fail_on = set(fail_on)
        self.reachable = reachable

    def check(self):
        if not self.reachable:
            raise AdapterUnavailable("down")

    def transcribe(self, text):
        if text in self.fail_on:
            raise AdapterCallFailed("synthetic failure")
        return text.upper() + " !"


def test_external_failures_are_skipped():
    seeds = [SeedPair(f"s{i:03d}", f"Sentence number {i} goes here.", f"Sentence {i}.") for i in range(100)]
    failing = {seeds[3].ungrammatical, seeds[50].ungrammatical, seeds[99].ungrammatical}
    stats = AugmentStats()
    out = run_augmentation(seeds, ChannelConfig(mode=ChannelMode.EXTERNAL), FakeAdapter(failing), stats=stats)
    expected = [s for s in seeds if s.ungrammatical not in failing]
    assert len(out) == len(expected) == 97
    assert [r.id for r in out] == [s.id for s in expected]
    assert all(r.source == spoken_form(s.ungrammatical) for r, s in zip(out, expected))
    assert stats.seeds == 100 and stats.written == len(out)
    assert sorted(stats.skipped) == sorted(s.id for s in seeds if s.ungrammatical in failing)


def test_external_adapter_unreachable():
    with pytest.raises(AdapterUnavailable):
        run_augmentation(_seeds(3), ChannelConfig(mode=ChannelMode.EXTERNAL), FakeAdapter(reachable=False))
    with pytest.raises(ValueError):
        run_augmentation(_seeds(3), ChannelConfig(mode=ChannelMode.EXTERNAL))


def test_read_seeds(tmp_path):
    path = tmp_path / "seeds.tsv"
    path.write_text("s1\tShe go.\tShe goes.\nbad\tline\ns2\tx\t \ns3\tThey is.\tThey are.\n", encoding="utf-8")
    stats = ReadStats()
    seeds = list(read_seeds(path, stats=stats))
    assert [s.id for s in seeds] == ["s1", "s3"]
    assert stats.malformed == 2


def test_write_meta(tmp_path):
    out = tmp_path / "aug.tsv"
    stats = AugmentStats(seeds=3, written=2, skipped=["s2"])
    path = write_meta(out, ChannelConfig(seed=5, sub_rate=0.1), stats)
    assert path.name == "aug.tsv.meta.json"
    meta = json.loads(path.read_text(encoding="utf-8"))
    assert meta["channel"]["seed"] == 5 and meta["channel"]["sub_rate"] == 0.1
    assert meta["skipped"] == ["s2"] and meta["written"] == 2


# ---- adapters ----

def test_make_adapter_picks_transport():
    assert isinstance(make_adapter(AdapterConfig("http://localhost:9/asr")), HttpAdapter)
    assert isinstance(make_adapter(AdapterConfig("my-asr --beam 5")), SubprocessAdapter)
    with pytest.raises(ValueError):
        AdapterConfig("  ")
    with pytest.raises(ValueError):
        AdapterConfig("x", concurrency=0)


@pytest.mark.skipif(shutil.which("cat") is None, reason="needs cat")
def test_subprocess_adapter_roundtrip():
    adapter = make_adapter(AdapterConfig("cat"))
    adapter.check()
    assert adapter.transcribe("hello world") == "hello world"


@pytest.mark.skipif(shutil.which("false") is None, reason="needs false")
def test_subprocess_adapter_failure():
    adapter = make_adapter(AdapterConfig("false"))
    with pytest.raises(AdapterCallFailed):
        adapter.transcribe("x")


def test_subprocess_adapter_missing_command():
    with pytest.raises(AdapterUnavailable):
        make_adapter(AdapterConfig("no-such-channel-binary-7f3a")).check()


class _Response:
    def __init__(self, payload=None, text="", status=200):
        self._payload = payload
        self.text = text
        self.status_code = status

    def raise_for_status(self):
        if self.status_code >= 400:
            raise requests.exceptions.HTTPError(f"{self.status_code}")

    def json(self):
        if self._payload is None:
            raise ValueError("not json")
        return self._payload


def test_http_adapter(monkeypatch):
    adapter = make_adapter(AdapterConfig("http://asr.invalid/transcribe"))
    sent = {}

    def fake_post(url, json=None, timeout=None):
        sent.update(url=url, json=json, timeout=timeout)
        return _Response({"text": "she go to school\n"})

    monkeypatch.setattr(adapter.session, "post", fake_post)
    assert adapter.transcribe("She go to school.") == "she go to school"
    assert sent["json"] == {"text": "She go to school."} and sent["timeout"] == 30.0

    monkeypatch.setattr(adapter.session, "post", lambda *a, **k: _Response(text="\nplain line\nmore"))
    assert adapter.transcribe("x") == "plain line"

    monkeypatch.setattr(adapter.session, "post", lambda *a, **k: _Response({"text": "x"}, status=500))
    with pytest.raises(AdapterCallFailed):
        adapter.transcribe("x")


def test_http_adapter_unreachable(monkeypatch):
    adapter = make_adapter(AdapterConfig("http://asr.invalid/transcribe"))

    def refuse(*args, **kwargs):
        raise requests.exceptions.ConnectionError("refused")

    monkeypatch.setattr(adapter.session, "get", refuse)
    with pytest.raises(AdapterUnavailable):
        adapter.check()

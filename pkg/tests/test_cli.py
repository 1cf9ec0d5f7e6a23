# -*- coding: utf-8 -*-
from __future__ import annotations
from pathlib import Path
import json
import random

import pytest

from app.core.corpus.records import TranscriptRecord, read_records, write_records
from app.main import dispatch

from conftest import WORKED_BLOCK, WORKED_EXAMPLE, WORKED_SENTENCES


def _kv(text: str) -> dict:
    return dict(line.split("=", 1) for line in text.strip().splitlines())


def test_make_targets_worked_example(tmp_path, capsys):
    src = tmp_path / "annotated.txt"
    src.write_text(WORKED_EXAMPLE + "\n", encoding="utf-8")
    assert dispatch(["make-targets", "--in", str(src), "-q"]) == 0
    assert capsys.readouterr().out == "\n".join(WORKED_SENTENCES) + "\n"


def test_make_targets_reads_file_as_one_conversation(tmp_path, capsys):
    src = tmp_path / "annotated.txt"
    src.write_text(WORKED_BLOCK, encoding="utf-8")
    assert dispatch(["make-targets", "--in", str(src), "-q"]) == 0
    assert capsys.readouterr().out == "\n".join(WORKED_SENTENCES) + "\n"


def test_markup_may_span_lines(tmp_path, capsys):
    src = tmp_path / "annotated.txt"
    src.write_text("and <\nuh > wash /.\n", encoding="utf-8")
    assert dispatch(["make-targets", "--in", str(src), "-q"]) == 0
    assert capsys.readouterr().out == "And wash.\n"


def test_parse_emits_json(tmp_path, capsys):
    src = tmp_path / "annotated.txt"
    src.write_text(WORKED_BLOCK + "hello /?\n", encoding="utf-8")
    assert dispatch(["parse", "--in", str(src)]) == 0
    (line,) = capsys.readouterr().out.splitlines()
    parsed = json.loads(line)
    assert parsed["tokens"][:2] == ["and", "uh"]
    assert parsed["boundaries"] == [
        {"position": 10, "kind": "statement"},
        {"position": 19, "kind": "statement"},
        {"position": 20, "kind": "question"},
    ]


@pytest.mark.parametrize("text, line_col", [
    ("fine /.\nwe < went\nhome /.\n", ":2: malformed line: column 4:"),
    ("fine /.\n\n  so ] there /.\n", ":3: malformed line: column 6:"),
])
def test_markup_error_names_line_and_column(tmp_path, caplog, text, line_col):
    src = tmp_path / "annotated.txt"
    src.write_text(text, encoding="utf-8")
    assert dispatch(["make-targets", "--in", str(src)]) == 1
    assert line_col in caplog.text


def test_usage_errors(capsys):
    assert dispatch(["no-such-command"]) == 2
    assert "usage" in capsys.readouterr().err
    assert dispatch([]) == 2
    assert dispatch(["score", "--refs", "x.tsv"]) == 2


def test_version(capsys):
    assert dispatch(["--version"]) == 0
    out = capsys.readouterr().out
    assert "readtransor" in out and "record format 1" in out


def test_missing_input_is_data_error(tmp_path):
    assert dispatch(["score", "--refs", str(tmp_path / "none.tsv"), "--hyps", str(tmp_path / "none.tsv")]) == 1


def _records_file(tmp_path: Path, name: str, records) -> Path:
    path = tmp_path / name
    write_records(path, records)
    return path


def test_score_identical_files(tmp_path, capsys):
    refs = _records_file(tmp_path, "test.tsv", [
        TranscriptRecord("r1", "c1", "and uh wash", "And wash your clothes."),
        TranscriptRecord("r2", "c2", "it's it's fine", "It's fine."),
    ])
    breakdown = tmp_path / "breakdown.tsv"
    assert dispatch(["score", "--refs", str(refs), "--hyps", str(refs), "--breakdown", str(breakdown)]) == 0
    report = _kv(capsys.readouterr().out)
    assert report["ra_wer"] == "0.000000" and report["bleu"] == "100.000000"
    assert breakdown.read_text(encoding="utf-8") == "r1\t0\t0\t0\t4\nr2\t0\t0\t0\t2\n"


def test_score_source_field_and_pdf(tmp_path, capsys):
    refs = _records_file(tmp_path, "test.tsv", [TranscriptRecord("r1", "c1", "we went home", "We went home.")])
    pdf = tmp_path / "report.pdf"
    assert dispatch(["score", "--refs", str(refs), "--hyps", str(refs), "--hyp-field", "source", "--pdf", str(pdf)]) == 0
    assert _kv(capsys.readouterr().out)["ra_wer"] == "0.666667"
    assert pdf.read_bytes().startswith(b"%PDF")


def test_score_id_mismatch(tmp_path):
    refs = _records_file(tmp_path, "refs.tsv", [TranscriptRecord("r1", "c", "a", "A."), TranscriptRecord("r2", "c", "b", "B.")])
    hyps = _records_file(tmp_path, "hyps.tsv", [TranscriptRecord("r1", "c", "a", "A.")])
    assert dispatch(["score", "--refs", str(refs), "--hyps", str(hyps)]) == 1


def test_malformed_records_default_and_strict(tmp_path, capsys):
    path = tmp_path / "mixed.tsv"
    path.write_text("r1\tc1\ta\tA.\nnot a record\nr2\tc1\tb\tB.\n", encoding="utf-8")
    assert dispatch(["score", "--refs", str(path), "--hyps", str(path)]) == 0
    assert _kv(capsys.readouterr().out)["sentences"] == "2"
    assert dispatch(["score", "--refs", str(path), "--hyps", str(path), "--strict"]) == 1


def test_baseline_with_stages(tmp_path):
    records = _records_file(tmp_path, "in.tsv", [
        TranscriptRecord("r1", "c1", "uh i'm i'm not a big vegetable eater", "I'm not a big vegetable eater."),
        TranscriptRecord("r2", "c1", "it's it's fine", "It's fine."),
    ])
    out, stages = tmp_path / "out.tsv", tmp_path / "stages.txt"
    assert dispatch(["baseline", "--in", str(records), "--out", str(out), "--stages-out", str(stages), "--jobs", "2"]) == 0
    assert [r.target for r in read_records(out)] == ["I'm not a big vegetable eater.", "It's fine."]
    table = stages.read_text(encoding="utf-8")
    assert "rm_disfluencies" in table and "lm_rescoring (skipped)" in table


def test_baseline_bad_repeat_ngram_is_usage_error(tmp_path):
    records = _records_file(tmp_path, "in.tsv", [TranscriptRecord("r1", "c1", "a", "A.")])
    assert dispatch(["baseline", "--in", str(records), "--max-repeat-ngram", "9"]) == 2


def test_build(tmp_path):
    segments = tmp_path / "segments.tsv"
    segments.write_text(f"s1\tsw01\t{WORKED_EXAMPLE}\ns2\tsw02\tyes [ we ] * we did /.\n", encoding="utf-8")
    sources = tmp_path / "asr.tsv"
    sources.write_text("s2\tyes we we did\ns1\tand uh you know wash your clothes\n", encoding="utf-8")
    out, lines = tmp_path / "records.tsv", tmp_path / "lines.tsv"
    assert dispatch(["build", "--annotated", str(segments), "--sources", str(sources),
                     "--out", str(out), "--lines-out", str(lines)]) == 0
    records = read_records(out)
    assert [r.id for r in records] == ["s2", "s1"]
    assert records[1].target == " ".join(WORKED_SENTENCES)
    assert lines.read_text(encoding="utf-8").splitlines()[1] == "s1\t" + "\\n".join(WORKED_SENTENCES)


def test_build_missing_target(tmp_path):
    segments = tmp_path / "segments.tsv"
    segments.write_text("s1\tsw01\thello /.\n", encoding="utf-8")
    sources = tmp_path / "asr.tsv"
    sources.write_text("s1\thello\ns9\tstray\n", encoding="utf-8")
    assert dispatch(["build", "--annotated", str(segments), "--sources", str(sources),
                     "--out", str(tmp_path / "r.tsv")]) == 1


def test_split_is_reproducible(tmp_path, make_corpus):
    records = _records_file(tmp_path, "all.tsv", make_corpus(20, 10))
    for run in ("a", "b"):
        assert dispatch(["split", "--in", str(records), "--valid", "20", "--test", "20",
                         "--seed", "4", "--out-dir", str(tmp_path / run), "--parallel"]) == 0
    for name in ("manifest.tsv", "train.tsv", "valid.tsv", "test.tsv", "test.src", "test.tgt"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_split_too_few_conversations(tmp_path, make_corpus):
    records = _records_file(tmp_path, "all.tsv", make_corpus(2, 10))
    assert dispatch(["split", "--in", str(records), "--valid", "2", "--test", "2", "--out-dir", str(tmp_path / "o")]) == 1


def _seed_file(tmp_path: Path, n: int = 200) -> Path:
    rng = random.Random(0)
    words = ["we", "went", "to", "the", "park", "their", "dog", "was", "happy", "today"]
    lines = []
    for i in range(n):
        body = [rng.choice(words) for _ in range(rng.randint(4, 10))]
        lines.append(f"s{i:04d}\t{' '.join(body).capitalize()}.\t{' '.join(body).capitalize()}!")
    path = tmp_path / "seeds.tsv"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def test_augment_is_identical_across_jobs(tmp_path):
    seeds = _seed_file(tmp_path)
    outs = []
    for jobs in ("1", "8"):
        out = tmp_path / f"aug{jobs}.tsv"
        assert dispatch(["augment", "--seeds", str(seeds), "--mode", "simulated", "--seed", "11",
                         "--sub-rate", "0.1", "--del-rate", "0.05", "--ins-rate", "0.05",
                         "--out", str(out), "--jobs", jobs]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
    meta = json.loads((tmp_path / "aug8.tsv.meta.json").read_text(encoding="utf-8"))
    assert meta["channel"]["seed"] == 11 and meta["written"] == 200


def test_augment_bad_rate_and_missing_adapter(tmp_path):
    seeds = _seed_file(tmp_path, 3)
    assert dispatch(["augment", "--seeds", str(seeds), "--sub-rate", "0.9", "--out", str(tmp_path / "o.tsv")]) == 2
    assert dispatch(["augment", "--seeds", str(seeds), "--mode", "external", "--out", str(tmp_path / "o.tsv")]) == 2
    assert dispatch(["augment", "--seeds", str(seeds), "--mode", "external",
                     "--adapter", "no-such-channel-binary-7f3a", "--out", str(tmp_path / "o.tsv")]) == 1


def test_augment_empty_seed_file_is_data_error(tmp_path, capsys):
    seeds = tmp_path / "seeds.tsv"
    seeds.write_text("\n", encoding="utf-8")
    out = tmp_path / "o.tsv"
    assert dispatch(["augment", "--seeds", str(seeds), "--out", str(out)]) == 1
    assert "usage" not in capsys.readouterr().err
    assert not out.exists()


def test_effective_config_logged_even_when_quiet(tmp_path, caplog):
    seeds = _seed_file(tmp_path, 3)
    assert dispatch(["augment", "--seeds", str(seeds), "--seed", "17", "--out", str(tmp_path / "o.tsv"), "-q"]) == 0
    (line,) = [r.getMessage() for r in caplog.records if r.getMessage().startswith("Effective config: ")]
    logged = json.loads(line[len("Effective config: "):])
    assert logged["subcommand"] == "augment" and logged["settings"]["seed"] == 17


def test_abtest(tmp_path, capsys):
    votes = tmp_path / "votes.tsv"
    votes.write_text("".join(f"c{i}\tA\tA\tB\n" for i in range(70)) + "".join(f"d{i}\tB\tA\tB\n" for i in range(30)),
                     encoding="utf-8")
    assert dispatch(["abtest", "--votes", str(votes)]) == 0
    result = _kv(capsys.readouterr().out)
    assert result["wins_a"] == "70" and result["win_rate_a"] == "0.700000"
    assert float(result["p_value"]) < 0.01


def test_ab_sheet(tmp_path):
    base = [TranscriptRecord(f"r{i}", f"c{i}", " ".join(["w"] * 25), "T.") for i in range(10)]
    records = _records_file(tmp_path, "records.tsv", base)
    hyps_a = _records_file(tmp_path, "a.tsv", [TranscriptRecord(r.id, "c", "x", f"A {r.id}") for r in base])
    hyps_b = _records_file(tmp_path, "b.tsv", [TranscriptRecord(r.id, "c", "x", f"B {r.id}") for r in base])
    sheet, key = tmp_path / "sheet.tsv", tmp_path / "key.tsv"
    assert dispatch(["ab-sheet", "--records", str(records), "--hyps-a", str(hyps_a), "--hyps-b", str(hyps_b),
                     "--n", "5", "--seed", "1", "--out", str(sheet), "--key-out", str(key)]) == 0
    rows = [line.split("\t") for line in sheet.read_text(encoding="utf-8").splitlines()]
    keys = dict(line.split("\t") for line in key.read_text(encoding="utf-8").splitlines())
    assert len(rows) == 5 and set(keys) == {r[0] for r in rows}
    for case_id, _, first, _ in rows:
        assert first.startswith(keys[case_id])


def test_end_to_end_dry_run(tmp_path, capsys):
    rng = random.Random(21)
    words = ["we", "went", "to", "the", "park", "their", "dog", "was", "happy", "today"]
    lines = []
    for i in range(1000):
        body = [rng.choice(words) for _ in range(rng.randint(4, 9))]
        noisy = list(body)
        noisy.insert(rng.randrange(len(noisy) + 1), rng.choice(["uh", "um"]))
        k = rng.randrange(len(noisy))
        noisy.insert(k, noisy[k])
        lines.append(f"s{i:04d}\t{' '.join(noisy)}\t{' '.join(body).capitalize()}.")
    seeds = tmp_path / "seeds.tsv"
    seeds.write_text("\n".join(lines) + "\n", encoding="utf-8")

    corpus, split_dir = tmp_path / "corpus.tsv", tmp_path / "split"
    assert dispatch(["augment", "--seeds", str(seeds), "--out", str(corpus), "-q"]) == 0
    assert dispatch(["split", "--in", str(corpus), "--valid", "100", "--test", "100",
                     "--out-dir", str(split_dir), "-q"]) == 0
    test_tsv, hyps = split_dir / "test.tsv", tmp_path / "baseline.tsv"
    assert dispatch(["baseline", "--in", str(test_tsv), "--out", str(hyps), "-q"]) == 0
    capsys.readouterr()

    assert dispatch(["score", "--refs", str(test_tsv), "--hyps", str(test_tsv), "--hyp-field", "source", "-q"]) == 0
    raw = _kv(capsys.readouterr().out)
    assert dispatch(["score", "--refs", str(test_tsv), "--hyps", str(hyps), "-q"]) == 0
    cleaned = _kv(capsys.readouterr().out)
    assert float(cleaned["ra_wer"]) < float(raw["ra_wer"])
    assert float(cleaned["bleu"]) > float(raw["bleu"])

import csv
import io
import json
import subprocess
import sys

import pytest

from conftest import DATA, NALI_ARABIC, NALI_LATIN
from oracles import FAR_TEN, romanize_weights
from kurdmeter.cli import build_parser, main


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


def test_nali_latin(cli):
    code, out, _ = cli(["classify", "--format", "latin"], NALI_LATIN + "\n" + NALI_LATIN)
    assert code == 0
    assert out.splitlines()[0] == "Quantitative (فاعلاتن فاعلاتن فاعلاتن فاعلن)"
    assert "pattern rank 1" in out


def test_nali_arabic(cli):
    code, out, _ = cli(["classify"], NALI_ARABIC)
    assert code == 0
    assert out.startswith("Quantitative (فاعلاتن فاعلاتن فاعلاتن فاعلن)")


def test_syllabic_ten(cli):
    poem = "\n".join(romanize_weights(s) for s in FAR_TEN + FAR_TEN[:1])
    code, out, _ = cli(["classify", "--format", "latin"], poem)
    assert code == 0
    assert out.strip() == "Syllabic (10-syllabic)"


def test_empty_stdin(cli):
    code, _, err = cli(["classify"], "")
    assert code == 2
    assert "empty" in err


def test_only_non_kurdish_lines(cli):
    code, _, _ = cli(["classify"], "hello world\nsecond line\n")
    assert code == 2


def test_missing_file(cli, tmp_path):
    code, _, _ = cli(["classify", str(tmp_path / "nope.txt")])
    assert code == 2


def test_json_golden(cli):
    code, out, _ = cli(["classify", "--format", "latin", "--output", "json"], NALI_LATIN)
    assert code == 0
    expected = json.loads((DATA / "nali_classify.json").read_text(encoding="utf-8"))
    assert json.loads(out) == expected


def test_explain_agrees_with_classify(cli):
    _, plain, _ = cli(["classify", "--format", "latin"], NALI_LATIN)
    code, detail, _ = cli(["explain", "--format", "latin"], NALI_LATIN)
    assert code == 0
    assert detail.startswith(plain.strip())
    assert "ger ne.bex.şê mer.he.mî wes.lî + bi.rî.nim ka.rî.ye +" in detail
    assert "candidates 32" in detail
    assert "distances 864" in detail
    assert "rank  1 d=0" in detail


def test_threshold_flags(cli):
    poem = "\n".join([NALI_LATIN] * 3 + [romanize_weights(FAR_TEN[0])])
    _, strict, _ = cli(["classify", "--format", "latin"], poem)
    _, loose, _ = cli(["classify", "--format", "latin", "--quant-fraction", "0.7",
                       "--max-distance", "6", "--syllabic-fraction", "0.5"], poem)
    assert not strict.startswith("Quantitative")
    assert not loose.startswith("Quantitative")  # residual line still too far
    with pytest.raises(SystemExit):
        build_parser().parse_args(["classify", "--quant-fraction", "2"])


def test_eval_report(cli, tmp_path):
    code, out, err = cli(["eval", str(DATA / "fixture_corpus.jsonl"),
                          "--csv", str(tmp_path / "csv"), "--figures", str(tmp_path / "fig")])
    assert code == 0
    assert "overall (micro)" in out
    micro = [l for l in out.splitlines() if l.startswith("overall (micro)")]
    assert all(l.split()[-3:] == ["100.0"] * 3 for l in micro)
    with open(tmp_path / "csv" / "confusion_type.csv", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["gold\\predicted", "quantitative", "syllabic", "free"]
    assert sum(int(v) for r in rows[1:] for v in r[1:]) == 20
    for name in ("confusion_type", "confusion_pattern", "scores_type", "scores_pattern"):
        png = tmp_path / "fig" / f"{name}.png"
        assert png.read_bytes()[:4] == b"\x89PNG"


def test_eval_json(cli):
    code, out, _ = cli(["eval", str(DATA / "fixture_corpus.jsonl"), "--output", "json"])
    assert code == 0
    d = json.loads(out)
    assert d["records"] == 20
    assert d["type"]["micro"]["f1"] == 100.0


def test_eval_malformed(cli, tmp_path):
    lines = (DATA / "fixture_corpus.jsonl").read_text(encoding="utf-8").splitlines()
    bad = json.loads(lines[2])
    del bad["poet"]
    lines[2] = json.dumps(bad, ensure_ascii=False)
    f = tmp_path / "bad.jsonl"
    f.write_text("\n".join(lines), encoding="utf-8")
    code, _, err = cli(["eval", str(f)])
    assert code == 2
    assert "record 2" in err and "poet" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kurdmeter", "classify", "--format", "latin"],
                          input=NALI_LATIN, capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    assert proc.stdout.startswith("Quantitative")

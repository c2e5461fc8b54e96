import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from kurdmeter.corpus import compute_metrics, evaluate, load_corpus, parse_record, predict
from kurdmeter.errors import ParseError, SchemaError
from kurdmeter.matcher import FREE, QUANTITATIVE, SYLLABIC
from kurdmeter.scansion import ScanConfig


def rec(**kw):
    base = {"id": "x", "poet": "p", "type": "syllabic", "pattern": "10-syllabic",
            "lines": [{"text": "بەبەبەبە", "non_kurdish": False}]}
    base.update(kw)
    return base


def test_toy_two_class_metrics():
    m = compute_metrics(["A", "A", "A", "B"], ["A", "A", "B", "A"])
    a = m.by_label()["A"]
    assert a.precision == pytest.approx(200 / 3)
    assert a.recall == pytest.approx(200 / 3)
    assert m.confusion == [[2, 1], [1, 0]]


def test_perfect_predictions():
    m = compute_metrics(list("ABCA"), list("ABCA"))
    assert all(c.precision == c.recall == c.f1 == 100.0 for c in m.classes)
    assert m.micro == (100.0, 100.0, 100.0)


@settings(max_examples=200)
@given(st.lists(st.tuples(st.sampled_from("ABCD"), st.sampled_from("ABCDE")), min_size=1, max_size=40))
def test_metric_invariants(pairs):
    gold, pred = [g for g, _ in pairs], [p for _, p in pairs]
    m = compute_metrics(gold, pred)
    p, r, f = m.micro
    assert p == pytest.approx(r) == pytest.approx(f) == pytest.approx(m.accuracy)
    assert sum(c.support for c in m.classes) == len(pairs)
    assert sum(c.predicted for c in m.classes) == len(pairs)
    for c in m.classes:
        for v in (c.precision, c.recall, c.f1):
            assert 0.0 <= v <= 100.0
        if c.precision + c.recall:
            assert c.f1 == pytest.approx(2 * c.precision * c.recall / (c.precision + c.recall))


def test_parse_record_normalizes_labels():
    r = parse_record(rec(pattern=10), 0)
    assert r.gold_label == "10-syllabic"
    r = parse_record(rec(type="quantitative", pattern=1), 0)
    assert r.gold_type == QUANTITATIVE
    assert r.gold_pattern == "فاعلاتن فاعلاتن فاعلاتن فاعلن"
    r = parse_record(rec(type="free", pattern=None), 0)
    assert r.gold_type == FREE and r.gold_label == "free verse"


@pytest.mark.parametrize("bad", [
    rec(pattern="فاعلاتن فاعلاتن فاعلاتن فاعلن"),          # syllabic with a quantitative pattern
    rec(type="quantitative", pattern="10-syllabic"),
    rec(type="quantitative", pattern="فلان فلان"),
    rec(type="free", pattern="10-syllabic"),
    rec(type="sonnet"),
    rec(lines=[]),
    rec(script="cyrillic"),
])
def test_schema_violations(bad):
    with pytest.raises(SchemaError):
        parse_record(bad, 4)


def test_missing_fields_listed():
    bad = rec()
    del bad["poet"], bad["lines"]
    with pytest.raises(SchemaError) as exc:
        parse_record(bad, 7)
    assert "poet" in str(exc.value) and "lines" in str(exc.value)
    assert exc.value.index == 7
    assert str(exc.value).startswith("record 7")


def test_empty_file(tmp_path):
    f = tmp_path / "empty.jsonl"
    f.write_text("")
    with pytest.raises(ParseError):
        load_corpus(f)


def test_bad_json_reports_index(tmp_path):
    f = tmp_path / "c.jsonl"
    f.write_text(json.dumps(rec()) + "\n{oops\n")
    with pytest.raises(ParseError) as exc:
        load_corpus(f)
    assert exc.value.index == 1


def test_load_fixture(fixture_corpus_path):
    records = load_corpus(fixture_corpus_path)
    assert len(records) == 20
    kinds = [r.gold_type for r in records]
    assert kinds.count(QUANTITATIVE) == 12
    assert kinds.count(SYLLABIC) == 5
    assert kinds.count(FREE) == 3
    assert any(any(r.non_kurdish) for r in records)


def test_fixture_evaluates_perfectly(fixture_corpus_path):
    ev = evaluate(load_corpus(fixture_corpus_path))
    assert ev.types.micro == (100.0, 100.0, 100.0)
    assert ev.patterns.micro == (100.0, 100.0, 100.0)
    assert not ev.errors
    assert all(m.micro[2] == 100.0 for m in ev.poets.values())
    assert sum(m.total for m in ev.poets.values()) == 20


def test_evaluation_is_deterministic(fixture_corpus_path):
    records = load_corpus(fixture_corpus_path)
    a = evaluate(records).to_dict()
    b = evaluate(list(records)).to_dict()
    assert a == b


def test_parallel_matches_serial(fixture_corpus_path):
    records = load_corpus(fixture_corpus_path)[:6]
    assert evaluate(records, jobs=2).to_dict() == evaluate(records).to_dict()


def test_predict_error_label():
    r = parse_record(rec(lines=[{"text": "hello world", "non_kurdish": False}]), 0)
    p = predict(r)
    assert p.pred_label == "error" and p.error

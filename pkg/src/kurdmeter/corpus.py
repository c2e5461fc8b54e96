"""Labeled-corpus loading and precision/recall/F1 evaluation.

Corpus format: UTF-8 JSON Lines, one poem per line::

    {"id": "nali-001", "poet": "Nalî", "type": "quantitative",
     "pattern": "فاعلاتن فاعلاتن فاعلاتن فاعلن",
     "lines": [{"text": "...", "non_kurdish": false}, ...],
     "script": "arabic"}

``pattern`` is a pattern title (or lexicon rank) for quantitative poems, an
``"N-syllabic"`` label (or integer N) for syllabic poems and null for free
verse.  ``script`` is optional and defaults to ``"arabic"``.
"""
from __future__ import annotations

import json
import re
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .errors import MeterError, ParseError, SchemaError
from .lexicon import FOOT_WEIGHTS, canonical_foot, canonical_title, pattern, pattern_by_title
from .matcher import FREE, FREE_LABEL, METER_TYPES, QUANTITATIVE, SYLLABIC
from .normalize import PoemLine, RawPoem
from .pipeline import ARABIC, LATIN, analyze_poem
from .scansion import ScanConfig

ERROR_LABEL = "error"
REQUIRED = ("id", "poet", "type", "lines")
_SYLLABIC_RE = re.compile(r"^\s*(\d+)\s*-?\s*syllabic\s*$", re.IGNORECASE)
_TYPE_ALIASES = {
    "quantitative": QUANTITATIVE, "arudi": QUANTITATIVE, "aruz": QUANTITATIVE,
    "syllabic": SYLLABIC, "free": FREE, "free verse": FREE,
}


@dataclass(frozen=True)
class CorpusRecord:
    poem_id: str
    poet: str
    gold_type: str
    gold_pattern: str | None
    lines: tuple[str, ...]
    non_kurdish: tuple[bool, ...]
    script: str = ARABIC

    @property
    def gold_label(self) -> str:
        if self.gold_type == FREE:
            return FREE_LABEL
        return self.gold_pattern

    def poem(self) -> RawPoem:
        return RawPoem(tuple(PoemLine(t, nk) for t, nk in zip(self.lines, self.non_kurdish)))


def _gold_pattern(gold_type: str, raw, index: int) -> str | None:
    if gold_type == FREE:
        if raw not in (None, "", FREE_LABEL, FREE):
            raise SchemaError(f"free verse cannot carry pattern {raw!r}", index)
        return None
    if gold_type == SYLLABIC:
        if isinstance(raw, int) and not isinstance(raw, bool) and raw > 0:
            return f"{raw}-syllabic"
        m = _SYLLABIC_RE.match(raw) if isinstance(raw, str) else None
        if not m:
            raise SchemaError(f"syllabic poem needs an N-syllabic pattern, got {raw!r}", index)
        return f"{int(m.group(1))}-syllabic"
    # quantitative
    if isinstance(raw, int) and not isinstance(raw, bool):
        try:
            return pattern(raw).title
        except KeyError:
            raise SchemaError(f"unknown pattern rank {raw}", index) from None
    if not isinstance(raw, str) or not raw.strip():
        raise SchemaError("quantitative poem needs a pattern title", index)
    if _SYLLABIC_RE.match(raw):
        raise SchemaError(f"quantitative poem cannot carry {raw!r}", index)
    feet = raw.split()
    if not all(canonical_foot(f) in FOOT_WEIGHTS for f in feet):
        raise SchemaError(f"pattern title {raw!r} is not made of known feet", index)
    found = pattern_by_title(raw)
    return found.title if found else canonical_title(raw)


def parse_record(obj, index: int) -> CorpusRecord:
    if not isinstance(obj, dict):
        raise SchemaError("record is not a JSON object", index)
    missing = [k for k in REQUIRED if k not in obj]
    if "pattern" not in obj and _TYPE_ALIASES.get(str(obj.get("type", "")).lower()) != FREE:
        missing.append("pattern")
    if missing:
        raise SchemaError(f"missing fields: {', '.join(missing)}", index)
    gold_type = _TYPE_ALIASES.get(str(obj["type"]).strip().lower())
    if gold_type is None:
        raise SchemaError(f"unknown type {obj['type']!r}", index)
    gold_pattern = _gold_pattern(gold_type, obj.get("pattern"), index)
    raw_lines = obj["lines"]
    if not isinstance(raw_lines, list) or not raw_lines:
        raise SchemaError("lines must be a non-empty list", index)
    texts, tags = [], []
    for ln in raw_lines:
        if isinstance(ln, str):
            texts.append(ln)
            tags.append(False)
        elif isinstance(ln, dict) and isinstance(ln.get("text"), str):
            texts.append(ln["text"])
            tags.append(bool(ln.get("non_kurdish", False)))
        else:
            raise SchemaError("each line must be a string or {text, non_kurdish}", index)
    script = obj.get("script", ARABIC)
    if script not in (ARABIC, LATIN):
        raise SchemaError(f"unknown script {script!r}", index)
    return CorpusRecord(str(obj["id"]), str(obj["poet"]), gold_type, gold_pattern,
                        tuple(texts), tuple(tags), script)


def load_corpus(path) -> list[CorpusRecord]:
    text = Path(path).read_text(encoding="utf-8")
    records = []
    index = 0
    for lineno, row in enumerate(text.splitlines(), 1):
        if not row.strip():
            continue
        try:
            obj = json.loads(row)
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {lineno}: invalid JSON ({exc.msg})", index) from None
        records.append(parse_record(obj, index))
        index += 1
    if not records:
        raise ParseError("corpus file has no records")
    return records


@dataclass
class ClassMetrics:
    label: str
    precision: float
    recall: float
    f1: float
    support: int
    predicted: int


@dataclass
class Metrics:
    """Per-class and averaged precision/recall/F1, in percent."""

    classes: list[ClassMetrics]
    labels: list[str]
    confusion: list[list[int]]
    micro: tuple[float, float, float]
    macro: tuple[float, float, float]
    total: int

    def by_label(self) -> dict[str, ClassMetrics]:
        return {c.label: c for c in self.classes}

    @property
    def accuracy(self) -> float:
        correct = sum(self.confusion[i][i] for i in range(len(self.labels)))
        return 100.0 * correct / self.total if self.total else 0.0

    def to_dict(self) -> dict:
        return {
            "classes": [c.__dict__ for c in self.classes],
            "micro": dict(zip(("precision", "recall", "f1"), self.micro)),
            "macro": dict(zip(("precision", "recall", "f1"), self.macro)),
            "total": self.total,
            "labels": self.labels,
            "confusion": self.confusion,
        }


def _f1(p: float, r: float) -> float:
    return 2 * p * r / (p + r) if p + r else 0.0


def compute_metrics(gold: list[str], pred: list[str], labels: list[str] | None = None) -> Metrics:
    """Confusion matrix (rows gold, columns predicted) and derived scores.

    Labels that only occur as predictions are still listed so the matrix rows
    sum to the supports and the columns to the prediction counts.
    """
    if len(gold) != len(pred):
        raise ValueError("gold and pred differ in length")
    if labels is None:
        labels = []
    labels = list(labels) + sorted((set(gold) | set(pred)) - set(labels))
    pos = {l: i for i, l in enumerate(labels)}
    conf = [[0] * len(labels) for _ in labels]
    for g, p in zip(gold, pred):
        conf[pos[g]][pos[p]] += 1
    classes = []
    tp_sum = 0
    for i, l in enumerate(labels):
        tp = conf[i][i]
        support = sum(conf[i])
        predicted = sum(row[i] for row in conf)
        prec = 100.0 * tp / predicted if predicted else 0.0
        rec = 100.0 * tp / support if support else 0.0
        classes.append(ClassMetrics(l, prec, rec, _f1(prec, rec), support, predicted))
        tp_sum += tp
    n = len(gold)
    micro_p = micro_r = 100.0 * tp_sum / n if n else 0.0
    present = [c for c in classes if c.support]
    macro_p = sum(c.precision for c in present) / len(present) if present else 0.0
    macro_r = sum(c.recall for c in present) / len(present) if present else 0.0
    return Metrics(
        classes, labels, conf,
        (micro_p, micro_r, _f1(micro_p, micro_r)),
        (macro_p, macro_r, sum(c.f1 for c in present) / len(present) if present else 0.0),
        n,
    )


@dataclass
class Prediction:
    poem_id: str
    poet: str
    gold_type: str
    gold_label: str
    pred_type: str
    pred_label: str
    error: str | None = None


@dataclass
class Evaluation:
    types: Metrics
    patterns: Metrics
    poets: dict[str, Metrics]
    predictions: list[Prediction] = field(default_factory=list)

    @property
    def errors(self) -> list[Prediction]:
        return [p for p in self.predictions if p.error]

    def to_dict(self) -> dict:
        return {
            "records": len(self.predictions),
            "type": self.types.to_dict(),
            "pattern": self.patterns.to_dict(),
            "poets": {
                poet: {"poems": m.total, "f1": m.micro[2], "macro_f1": m.macro[2]}
                for poet, m in self.poets.items()
            },
            "errors": [{"id": p.poem_id, "error": p.error} for p in self.errors],
        }


def predict(record: CorpusRecord, cfg: ScanConfig = ScanConfig()) -> Prediction:
    try:
        result = analyze_poem(record.poem(), cfg, record.script)
    except MeterError as exc:
        return Prediction(record.poem_id, record.poet, record.gold_type, record.gold_label,
                          ERROR_LABEL, ERROR_LABEL, str(exc))
    return Prediction(record.poem_id, record.poet, record.gold_type, record.gold_label,
                      result.meter_type, result.label)


def _predict_star(args):
    return predict(*args)


def evaluate(records: list[CorpusRecord], cfg: ScanConfig = ScanConfig(), jobs: int = 1) -> Evaluation:
    """Classify every poem and score type- and pattern-level predictions."""
    if not records:
        raise ValueError("evaluate needs at least one record")
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            preds = list(ex.map(_predict_star, [(r, cfg) for r in records], chunksize=8))
    else:
        preds = [predict(r, cfg) for r in records]

    types = compute_metrics([p.gold_type for p in preds], [p.pred_type for p in preds],
                            list(METER_TYPES))
    pattern_order = _pattern_label_order([p.gold_label for p in preds] + [p.pred_label for p in preds])
    patterns = compute_metrics([p.gold_label for p in preds], [p.pred_label for p in preds],
                               pattern_order)
    by_poet: dict[str, list[Prediction]] = defaultdict(list)
    for p in preds:
        by_poet[p.poet].append(p)
    poets = {
        poet: compute_metrics([p.gold_label for p in ps], [p.pred_label for p in ps])
        for poet, ps in by_poet.items()
    }
    return Evaluation(types, patterns, poets, preds)


def _pattern_label_order(labels: list[str]) -> list[str]:
    """Quantitative titles by frequency, then syllabic counts high to low,
    then free verse and errors."""
    counts = Counter(labels)
    quant = [l for l in counts if l not in (FREE_LABEL, ERROR_LABEL) and not _SYLLABIC_RE.match(l)]
    syll = [l for l in counts if _SYLLABIC_RE.match(l)]
    quant.sort(key=lambda l: (-counts[l], l))
    syll.sort(key=lambda l: -int(_SYLLABIC_RE.match(l).group(1)))
    tail = [l for l in (FREE_LABEL, ERROR_LABEL) if l in counts]
    return quant + syll + tail

"""Text, JSON and CSV renderings of classifications and evaluations."""
from __future__ import annotations

import csv
import json
from pathlib import Path

from .corpus import Evaluation, Metrics
from .lexicon import pattern_by_title
from .matcher import PoemClassification
from .scansion import render


def table(rows: list[list], header: list[str]) -> str:
    cells = [[str(h) for h in header]] + [[_fmt(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = []
    for k, r in enumerate(cells):
        lines.append("  ".join(c.ljust(w) if i == 0 else c.rjust(w) for i, (c, w) in enumerate(zip(r, widths))))
        if k == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.1f}"
    return str(v)


def classification_text(result: PoemClassification) -> str:
    out = [result.describe()]
    if result.pattern is not None:
        total, perfect = result.scores[result.pattern.rank]
        out.append(
            f"pattern rank {result.pattern.rank}: {result.pattern.render()} "
            f"(perfect lines {perfect:.0%}, total distance {total})"
        )
    if result.skipped:
        out.append(f"skipped lines: {', '.join(map(str, result.skipped))}")
    return "\n".join(out)


def explain_text(result: PoemClassification, top: int = 3) -> str:
    out = [classification_text(result), ""]
    for a in result.evidence:
        out.append(f"[{a.line_index}] {a.text}")
        out.append(f"    syllables ({a.syllable_count}): {a.syllabified}")
        out.append(f"    natural:   {render(a.natural)}")
        flex = ", ".join(f"{i + 1}:{c}" for i, c in a.flex) or "none"
        out.append(f"    flexible:  {flex}")
        trunc = " (truncated)" if a.truncated else ""
        out.append(
            f"    readings {a.readings}, candidates {a.candidate_count}{trunc}, "
            f"distances {a.computed}, acceptable pairs {len(a.pairs)}"
        )
        best = a.best_pairs()[:top]
        if not best:
            out.append("    no pattern within the distance limit")
        for p in best:
            out.append(f"    rank {p.pattern_rank:>2} d={p.distance}  {render(p.candidate)}")
    return "\n".join(out)


def classification_json(result: PoemClassification) -> str:
    return json.dumps(result.to_dict(), ensure_ascii=False, indent=2)


def _short_label(label: str) -> str:
    p = pattern_by_title(label)
    return f"#{p.rank} {label}" if p else label


def metrics_table(m: Metrics, title: str, label_fn=str) -> str:
    rows = [
        [label_fn(c.label), c.support, c.precision, c.recall, c.f1]
        for c in m.classes
    ]
    rows.append(["overall (micro)", m.total, *m.micro])
    rows.append(["overall (macro)", m.total, *m.macro])
    return f"{title}\n" + table(rows, ["class", "count", "precision %", "recall %", "F1 %"])


def evaluation_text(ev: Evaluation) -> str:
    parts = [
        metrics_table(ev.types, "Poem type classification"),
        metrics_table(ev.patterns, "Meter pattern classification", _short_label),
        "Pattern classification by poet\n"
        + table(
            [[poet, m.total, m.micro[2]] for poet, m in sorted(ev.poets.items(), key=lambda kv: -kv[1].micro[2])],
            ["poet", "poems", "F1 %"],
        ),
    ]
    if ev.errors:
        parts.append("Pipeline errors\n" + "\n".join(f"{p.poem_id}: {p.error}" for p in ev.errors))
    return "\n\n".join(parts)


def evaluation_json(ev: Evaluation) -> str:
    return json.dumps(ev.to_dict(), ensure_ascii=False, indent=2)


def write_confusion_csv(m: Metrics, path) -> Path:
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["gold\\predicted", *m.labels])
        for label, row in zip(m.labels, m.confusion):
            w.writerow([label, *row])
    return path


def write_csv_dir(ev: Evaluation, directory) -> list[Path]:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    return [
        write_confusion_csv(ev.types, d / "confusion_type.csv"),
        write_confusion_csv(ev.patterns, d / "confusion_pattern.csv"),
    ]

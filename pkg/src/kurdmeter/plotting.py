"""Evaluation figures written next to the CSV dumps."""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .corpus import Evaluation, Metrics  # noqa: E402
from .lexicon import pattern_by_title  # noqa: E402


def axis_label(label: str) -> str:
    # matplotlib does not shape Arabic script, so quantitative titles become ranks
    p = pattern_by_title(label)
    return f"rank {p.rank}" if p else label


def plot_confusion(m: Metrics, path, title: str = "") -> Path:
    labels = [axis_label(l) for l in m.labels]
    mat = np.array(m.confusion, dtype=float)
    size = max(4.0, 0.45 * len(labels) + 2)
    fig, ax = plt.subplots(figsize=(size, size))
    ax.imshow(mat, cmap="Blues")
    ax.set_xticks(range(len(labels)))
    ax.set_yticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=90, fontsize=8)
    ax.set_yticklabels(labels, fontsize=8)
    ax.set_xlabel("predicted")
    ax.set_ylabel("gold")
    hi = mat.max() if mat.size else 0
    for i in range(mat.shape[0]):
        for j in range(mat.shape[1]):
            if mat[i, j]:
                ax.text(j, i, int(mat[i, j]), ha="center", va="center", fontsize=7,
                        color="white" if mat[i, j] > hi / 2 else "black")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return Path(path)


def plot_f1(m: Metrics, path, title: str = "") -> Path:
    classes = [c for c in m.classes if c.support]
    labels = [axis_label(c.label) for c in classes]
    x = np.arange(len(classes))
    fig, ax = plt.subplots(figsize=(max(5.0, 0.4 * len(classes) + 2), 4))
    w = 0.27
    ax.bar(x - w, [c.precision for c in classes], w, label="precision")
    ax.bar(x, [c.recall for c in classes], w, label="recall")
    ax.bar(x + w, [c.f1 for c in classes], w, label="F1")
    ax.set_xticks(x)
    ax.set_xticklabels(labels, rotation=90, fontsize=8)
    ax.set_ylim(0, 105)
    ax.set_ylabel("%")
    ax.legend(fontsize=8, loc="lower right")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return Path(path)


def write_figures(ev: Evaluation, directory) -> list[Path]:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    return [
        plot_confusion(ev.types, d / "confusion_type.png", "Poem type"),
        plot_confusion(ev.patterns, d / "confusion_pattern.png", "Meter pattern"),
        plot_f1(ev.types, d / "scores_type.png", "Poem type"),
        plot_f1(ev.patterns, d / "scores_pattern.png", "Meter pattern"),
    ]

"""Text cleanup for Kurdish Arabic-script poems.

Arabic-specific letters are folded to their Kurdish equivalents, punctuation
becomes the open-juncture mark '+', and anything outside the Kurdish
alphabet is removed.  Lines made mostly of foreign material are dropped.
"""
from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .errors import EmptyLine, EmptyPoem

JUNCTURE = "+"
KURDISH_LETTERS = frozenset("ئابپتجچحخدرڕزژسشعغفڤقکگلڵمنهەوۆیێ")
HAMZA_ALEFS = frozenset("أإآ")
NON_KURDISH_THRESHOLD = 0.3

_DELETE = {"\u200c", "\u200d", "\u0640"}  # ZWNJ, ZWJ, tatweel


@lru_cache(maxsize=None)
def folding_table() -> dict[str, str]:
    text = resources.files("kurdmeter.data").joinpath("letter_folding.tsv").read_text("utf-8")
    table = {}
    for row in text.splitlines():
        if not row.strip() or row.startswith("#"):
            continue
        src, dst = row.split("\t")
        table[src] = dst
    return table


@dataclass(frozen=True)
class PoemLine:
    text: str
    non_kurdish: bool | None = None


@dataclass(frozen=True)
class RawPoem:
    lines: tuple[PoemLine, ...] = field(default_factory=tuple)

    @classmethod
    def from_text(cls, text: str) -> "RawPoem":
        """One verse line per physical line; blank lines are discarded."""
        return cls(tuple(PoemLine(t) for t in text.splitlines() if t.strip()))


@dataclass(frozen=True)
class NormalizedLine:
    text: str

    @property
    def words(self) -> list[str]:
        return [t for t in self.text.split() if t != JUNCTURE]


def _is_punct(ch: str) -> bool:
    return ch == JUNCTURE or unicodedata.category(ch).startswith("P")


def fold_letters(text: str) -> str:
    """Apply compatibility folding and the Arabic->Kurdish letter table."""
    text = unicodedata.normalize("NFKC", text)
    # old-style encoding writes ە as ه + ZWNJ
    text = text.replace("ه\u200c", "ە")
    table = folding_table()
    out = []
    for i, ch in enumerate(text):
        if ch in _DELETE:
            continue
        if ch in HAMZA_ALEFS:
            word_initial = i == 0 or not text[i - 1].isalpha()
            out.append("ئا" if word_initial else "ا")
        else:
            out.append(table.get(ch, ch))
    return "".join(out)


def non_kurdish_fraction(text: str) -> float:
    """Share of letters and digits that are not Kurdish letters, after folding."""
    chars = [c for c in fold_letters(text) if c.isalpha() or c.isdigit()]
    if not chars:
        return 0.0
    return sum(c not in KURDISH_LETTERS for c in chars) / len(chars)


def normalize_line(text: str) -> NormalizedLine:
    folded = fold_letters(text)
    buf = []
    for ch in folded:
        if ch in KURDISH_LETTERS:
            buf.append(ch)
        elif _is_punct(ch):
            buf.append(f" {JUNCTURE} ")
        elif ch.isspace():
            buf.append(" ")
        # diacritics, digits, foreign letters and symbols are dropped
    tokens = "".join(buf).split()
    out: list[str] = []
    for tok in tokens:
        if tok == JUNCTURE and (not out or out[-1] == JUNCTURE):
            continue
        out.append(tok)
    if not any(t != JUNCTURE for t in out):
        raise EmptyLine(f"nothing left of line {text!r}")
    if out[-1] != JUNCTURE:
        out.append(JUNCTURE)
    return NormalizedLine(" ".join(out))


def filter_lines(poem: RawPoem, threshold: float = NON_KURDISH_THRESHOLD) -> list[NormalizedLine]:
    """Drop tagged or mostly foreign lines and normalize the rest, in order."""
    out = []
    for line in poem.lines:
        if line.non_kurdish:
            continue
        if not line.text.strip():
            continue
        if non_kurdish_fraction(line.text) > threshold:
            continue
        try:
            out.append(normalize_line(line.text))
        except EmptyLine:
            continue
    if not out:
        raise EmptyPoem("no Kurdish lines in poem")
    return out

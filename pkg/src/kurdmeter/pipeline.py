"""End-to-end analysis: raw poem text to a meter classification."""
from __future__ import annotations

import logging
import unicodedata
from typing import Iterable, Sequence

from .errors import EmptyLine, EmptyPoem, MeterError
from .lexicon import MeterPattern, all_patterns
from .matcher import LineAnalysis, PoemClassification, classify, match_line
from .normalize import JUNCTURE, NormalizedLine, PoemLine, RawPoem, filter_lines
from .phonemes import PhonemeString, is_vowel, parse_romanized
from .phonemizer import merge_conjunction, phonemize
from .scansion import ScanConfig, scan
from .syllables import syllabify

log = logging.getLogger(__name__)

ARABIC = "arabic"
LATIN = "latin"


def normalize_romanized(text: str) -> str:
    """Punctuation to '+', one trailing juncture; '.' stays a syllable hint."""
    text = unicodedata.normalize("NFC", text).lower()
    out = []
    for i, ch in enumerate(text):
        nxt = text[i + 1] if i + 1 < len(text) else " "
        if ch in ".?" and (nxt.isspace() or nxt == JUNCTURE):
            out.append(f" {JUNCTURE} ")
        elif ch in ".?ʔ" or ch.isalpha() or unicodedata.category(ch) == "Mn":
            out.append(ch)
        elif ch.isspace():
            out.append(" ")
        elif ch == JUNCTURE or unicodedata.category(ch).startswith("P"):
            out.append(f" {JUNCTURE} ")
        else:
            out.append(ch)
    tokens = "".join(out).split()
    if not any(t != JUNCTURE for t in tokens):
        raise EmptyLine(f"nothing left of line {text!r}")
    if tokens[-1] != JUNCTURE:
        tokens.append(JUNCTURE)
    return " ".join(tokens)


def add_glottal_onsets(reading: PhonemeString) -> PhonemeString:
    """Give word-initial vowels the /ʔ/ onset that Arabic script writes as ئ."""
    if not any(w and is_vowel(w[0]) for w in reading.words):
        return reading
    words = tuple(("ʔ",) + w if is_vowel(w[0]) else w for w in reading.words)
    return PhonemeString(words, reading.junctures, None, reading.epenthesis, reading.consonantal)


def romanized_readings(text: str) -> list[PhonemeString]:
    reading = merge_conjunction(parse_romanized(normalize_romanized(text)))
    return [add_glottal_onsets(reading)]


def analyze_readings(
    readings: Sequence[PhonemeString],
    cfg: ScanConfig = ScanConfig(),
    lexicon: Sequence[MeterPattern] | None = None,
    line_index: int = 0,
    text: str = "",
) -> LineAnalysis:
    """Scan every reading, pool the candidates and match them.

    The first reading is the preferred one; it supplies the natural syllable
    count and the displayed syllabification.
    """
    candidates: set[str] = set()
    first = None
    truncated = False
    for rid, reading in enumerate(readings):
        line = syllabify(reading, rid)
        sc = scan(line, cfg)
        candidates |= sc.candidates
        truncated |= sc.truncated
        if first is None:
            first = sc
    analysis = match_line(candidates, lexicon, cfg, line_index, len(first.line))
    analysis.text = text
    analysis.syllabified = first.line.render()
    analysis.natural = first.natural
    analysis.flex = [(f.index, f.clue) for f in first.flex]
    analysis.truncated = truncated
    analysis.readings = len(readings)
    return analysis


def analyze_line(
    line: NormalizedLine | str,
    cfg: ScanConfig = ScanConfig(),
    fmt: str = ARABIC,
    lexicon: Sequence[MeterPattern] | None = None,
    line_index: int = 0,
) -> LineAnalysis:
    if fmt == LATIN:
        readings = romanized_readings(line)
        text = line
    else:
        readings = phonemize(line, cfg.max_readings)
        text = line.text
    return analyze_readings(readings, cfg, lexicon, line_index, text)


def prepare_lines(poem: RawPoem, fmt: str, cfg: ScanConfig) -> list:
    if fmt == LATIN:
        lines = [l.text for l in poem.lines if not l.non_kurdish and l.text.strip()]
        if not lines:
            raise EmptyPoem("no lines in poem")
        return lines
    return filter_lines(poem, cfg.non_kurdish_threshold)


def analyze_poem(
    poem: RawPoem | str | Iterable[str],
    cfg: ScanConfig = ScanConfig(),
    fmt: str = ARABIC,
    lexicon: Sequence[MeterPattern] | None = None,
) -> PoemClassification:
    """Classify a poem given as text, a list of lines or a RawPoem."""
    if isinstance(poem, str):
        poem = RawPoem.from_text(poem)
    elif not isinstance(poem, RawPoem):
        poem = RawPoem(tuple(PoemLine(t) for t in poem if t.strip()))
    lexicon = all_patterns() if lexicon is None else lexicon
    analyses: list[LineAnalysis] = []
    skipped: list[int] = []
    for i, line in enumerate(prepare_lines(poem, fmt, cfg)):
        try:
            analyses.append(analyze_line(line, cfg, fmt, lexicon, i))
        except MeterError as exc:
            log.warning("line %d skipped: %s", i, exc)
            skipped.append(i)
    if not analyses:
        raise EmptyPoem("no line of the poem could be syllabified")
    result = classify(analyses, lexicon, cfg)
    result.skipped = skipped
    return result

"""Grapheme-to-phoneme conversion for Kurdish Arabic script.

The script under-determines pronunciation in three places: ی is /y/ or /î/,
و is /w/ or /u/ (and وو is /û/, /uw/, /wu/ or /ww/), and the short vowel /i/
is never written.  Readings are enumerated word by word, unwritten /i/ is
inserted where a word could not otherwise be syllabified, and the surviving
line readings are ranked by (epenthetic /i/ count, consonantal readings of
و/ی).
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass

from .errors import NoLegalParse, TooManyReadings, Unsyllabifiable
from .normalize import JUNCTURE, NormalizedLine
from .phonemes import CONSONANTS, PhonemeString, is_vowel
from .syllables import is_syllabifiable, syllabify

# fixed letter -> phoneme
LETTER_PHONEMES = {
    "ئ": "ʔ", "ا": "a", "ب": "b", "پ": "p", "ت": "t", "ج": "c", "چ": "ç",
    "ح": "ḧ", "خ": "x", "د": "d", "ر": "r", "ڕ": "ř", "ز": "z", "ژ": "j",
    "س": "s", "ش": "ş", "ع": "ɛ", "غ": "ẍ", "ف": "f", "ڤ": "v", "ق": "q",
    "ک": "k", "گ": "g", "ل": "l", "ڵ": "ł", "م": "m", "ن": "n", "ه": "h",
    "ە": "e", "ۆ": "o", "ێ": "ê",
}
# ambiguous spellings: (phonemes, consonantal-reading count)
AMBIGUOUS = {
    "ی": [(("y",), 1), (("î",), 0)],
    "و": [(("w",), 1), (("u",), 0)],
    "وو": [(("û",), 0), (("u", "w"), 1), (("w", "u"), 1), (("w", "w"), 2)],
}
CONJUNCTION = "و"
CONJ_FORMS = {("û",), ("u",), ("w",)}
VOWEL_LETTERS = frozenset("اەێۆ")

MAX_READINGS = 64
MAX_WORD_COMBOS = 4096


@dataclass(frozen=True)
class WordReading:
    phonemes: tuple[str, ...]
    epenthesis: int = 0
    consonantal: int = 0

    @property
    def key(self) -> tuple[int, int]:
        return (self.epenthesis, self.consonantal)


def letter_options(word: str) -> list[list[tuple[tuple[str, ...], int]]]:
    """Per-letter choices for a word; وو is read as one unit."""
    slots = []
    i = 0
    while i < len(word):
        if word.startswith("وو", i):
            slots.append(AMBIGUOUS["وو"])
            i += 2
            continue
        ch = word[i]
        if ch in AMBIGUOUS:
            slots.append(AMBIGUOUS[ch])
        elif ch in LETTER_PHONEMES:
            slots.append([((LETTER_PHONEMES[ch],), 0)])
        else:
            raise ValueError(f"letter {ch!r} outside the Kurdish alphabet")
        i += 1
    return slots


def letter_readings(word: str) -> list[tuple[tuple[str, ...], int]]:
    """Every reading of the letters of ``word`` with its consonantal count,
    before any /i/ epenthesis."""
    slots = letter_options(word)
    n = 1
    for s in slots:
        n *= len(s)
    if n > MAX_WORD_COMBOS:
        raise TooManyReadings(f"{word}: {n} letter readings")
    out = []
    for combo in itertools.product(*slots):
        phon = tuple(p for ph, _ in combo for p in ph)
        cons = sum(c for _, c in combo)
        if word[0] in VOWEL_LETTERS:
            phon = ("ʔ",) + phon
        out.append((phon, cons))
    return out


def insert_epenthetic_i(phonemes) -> list[tuple[int, ...]]:
    """Return the minimal sets of /i/ insertion points that make a word
    syllabifiable, rightmost-first.

    A point ``p`` means /i/ goes before ``phonemes[p]``; only gaps between
    two consonants are candidates.
    """
    phonemes = tuple(phonemes)
    gaps = [
        p for p in range(1, len(phonemes))
        if phonemes[p - 1] in CONSONANTS and phonemes[p] in CONSONANTS
    ]
    for k in range(len(gaps) + 1):
        found = [
            combo for combo in itertools.combinations(gaps, k)
            if is_syllabifiable(apply_insertions(phonemes, combo))
        ]
        if found:
            return sorted(found, key=lambda c: tuple(reversed(c)), reverse=True)
    raise NoLegalParse("".join(phonemes))


def apply_insertions(phonemes, points) -> tuple[str, ...]:
    out = list(phonemes)
    for p in sorted(points, reverse=True):
        out.insert(p, "i")
    return tuple(out)


def word_readings(word: str) -> list[WordReading]:
    """Syllabifiable readings of one written word with the fewest epenthetic
    /i/, ordered by consonantal-reading count."""
    if word == CONJUNCTION:
        return [WordReading(("û",))]
    best: list[WordReading] = []
    for phon, cons in letter_readings(word):
        try:
            solutions = insert_epenthetic_i(phon)
        except NoLegalParse:
            continue
        for pts in solutions:
            best.append(WordReading(apply_insertions(phon, pts), len(pts), cons))
    if not best:
        raise NoLegalParse(word)
    fewest = min(r.epenthesis for r in best)
    seen = {}
    for r in sorted(best, key=lambda r: r.key):
        if r.epenthesis == fewest and r.phonemes not in seen:
            seen[r.phonemes] = r
    return list(seen.values())


def greedy_word_reading(word: str) -> WordReading:
    """Single fallback reading: vowel readings between consonants, otherwise
    consonantal; وو as /û/."""
    if word == CONJUNCTION:
        return WordReading(("û",))
    phon: list[str] = ["ʔ"] if word[0] in VOWEL_LETTERS else []
    i = 0
    while i < len(word):
        if word.startswith("وو", i):
            phon.append("û")
            i += 2
            continue
        ch = word[i]
        if ch in AMBIGUOUS:
            prev_c = bool(phon) and not is_vowel(phon[-1])
            nxt = word[i + 1] if i + 1 < len(word) else ""
            next_c = nxt in LETTER_PHONEMES and not is_vowel(LETTER_PHONEMES[nxt])
            vowel = "î" if ch == "ی" else "u"
            cons = "y" if ch == "ی" else "w"
            phon.append(vowel if prev_c and (next_c or not nxt) else cons)
        else:
            phon.append(LETTER_PHONEMES[ch])
        i += 1
    try:
        pts = insert_epenthetic_i(phon)[0]
    except NoLegalParse:
        return WordReading(tuple(phon))
    return WordReading(apply_insertions(phon, pts), len(pts))


def _split_tokens(line: NormalizedLine) -> tuple[list[str], set[int]]:
    words: list[str] = []
    junctures: set[int] = set()
    for tok in line.text.split():
        if tok == JUNCTURE:
            if words:
                junctures.add(len(words) - 1)
        else:
            words.append(tok)
    return words, junctures


def _k_best(per_word: list[list[WordReading]], cap: int):
    """Top ``cap`` combinations by summed (epenthesis, consonantal) key."""
    beam: list[tuple[tuple[int, int], tuple[WordReading, ...]]] = [((0, 0), ())]
    for options in per_word:
        grown = (
            ((k[0] + r.epenthesis, k[1] + r.consonantal), combo + (r,))
            for k, combo in beam
            for r in options
        )
        beam = heapq.nsmallest(cap, grown, key=lambda t: t[0])
    return beam


def expand_script_ambiguities(line: NormalizedLine, cap: int = MAX_READINGS) -> list[PhonemeString]:
    """Ranked line readings (at most ``cap``), before conjunction merging."""
    words, junctures = _split_tokens(line)
    per_word = [word_readings(w) for w in words]
    out = []
    for (ep, cons), combo in _k_best(per_word, cap):
        out.append(
            PhonemeString(
                tuple(r.phonemes for r in combo),
                frozenset(junctures),
                epenthesis=ep,
                consonantal=cons,
            )
        )
    return out


def greedy_reading(line: NormalizedLine) -> PhonemeString:
    words, junctures = _split_tokens(line)
    readings = [greedy_word_reading(w) for w in words]
    return PhonemeString(
        tuple(r.phonemes for r in readings),
        frozenset(junctures),
        epenthesis=sum(r.epenthesis for r in readings),
        consonantal=sum(r.consonantal for r in readings),
    )


def merge_conjunction(reading: PhonemeString) -> PhonemeString:
    """Attach a standalone 'and' to the preceding word: /û/ after a consonant,
    /w/ after a vowel."""
    if not any(w in CONJ_FORMS for w in reading.words):
        return reading
    words: list[tuple[str, ...]] = []
    junctures: set[int] = set()
    for i, w in enumerate(reading.words):
        host_ok = words and (len(words) - 1) not in junctures
        if w in CONJ_FORMS and host_ok:
            host = words[-1]
            words[-1] = host + (("w",) if is_vowel(host[-1]) else ("û",))
        elif w in CONJ_FORMS:
            words.append(("ʔ", "û"))
        else:
            words.append(w)
        if i in reading.junctures:
            junctures.add(len(words) - 1)
    return PhonemeString(
        tuple(words),
        frozenset(junctures),
        epenthesis=reading.epenthesis,
        consonantal=reading.consonantal,
    )


def phonemize(line: NormalizedLine, cap: int = MAX_READINGS) -> list[PhonemeString]:
    """Syllabifiable, conjunction-merged readings of a line, best first.

    Falls back to a single greedy reading when the enumeration is too large
    or yields nothing.
    """
    try:
        readings = expand_script_ambiguities(line, cap)
    except (TooManyReadings, NoLegalParse):
        readings = []
    out = []
    seen = set()
    for r in readings:
        merged = merge_conjunction(r)
        if merged in seen:
            continue
        try:
            syllabify(merged)
        except Unsyllabifiable:
            continue
        seen.add(merged)
        out.append(merged)
    if not out:
        fallback = merge_conjunction(greedy_reading(line))
        syllabify(fallback)  # raises Unsyllabifiable for hopeless lines
        out.append(fallback)
    return out

"""Central Kurdish phoneme inventory and the romanized phoneme-string type.

The romanization follows the Hawar-based transcription with the Sorani
additions (ř, ł, ḧ, ɛ, ẍ, ʔ).  A few visually similar alternatives are
accepted on input and folded to the canonical symbol.
"""
from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from enum import IntEnum

from .errors import EmptyLine, UnknownSymbol


class Sonority(IntEnum):
    STOP = 1
    AFFRICATE = 2
    FRICATIVE = 3
    NASAL = 4
    LIQUID = 5
    APPROXIMANT = 6
    VOWEL = 7


@dataclass(frozen=True)
class Phoneme:
    symbol: str
    category: str  # "vowel" | "consonant"
    sonority: Sonority
    vowel_length: str | None = None  # "long" | "short" for vowels

    @property
    def is_vowel(self) -> bool:
        return self.category == "vowel"

    @property
    def consonant_class(self) -> str | None:
        if self.is_vowel:
            return None
        if self.sonority == Sonority.APPROXIMANT:
            return "approximant"
        if self.sonority <= Sonority.FRICATIVE:
            return "obstruent"
        return "other"


_CONSONANTS = {
    Sonority.STOP: "ʔ b p t d q k g",
    Sonority.AFFRICATE: "c ç",
    Sonority.FRICATIVE: "ḧ x z j s ş ɛ ẍ f v h",
    Sonority.NASAL: "m n",
    Sonority.LIQUID: "r ř l ł",
    Sonority.APPROXIMANT: "w y",
}
LONG_VOWELS = frozenset("î ê a o û".split())
SHORT_VOWELS = frozenset("u e i".split())

INVENTORY: dict[str, Phoneme] = {}
for _son, _syms in _CONSONANTS.items():
    for _s in _syms.split():
        INVENTORY[_s] = Phoneme(_s, "consonant", _son)
for _s in sorted(LONG_VOWELS):
    INVENTORY[_s] = Phoneme(_s, "vowel", Sonority.VOWEL, "long")
for _s in sorted(SHORT_VOWELS):
    INVENTORY[_s] = Phoneme(_s, "vowel", Sonority.VOWEL, "short")

VOWELS = LONG_VOWELS | SHORT_VOWELS
CONSONANTS = frozenset(s for s, p in INVENTORY.items() if not p.is_vowel)

# input spellings folded to canonical symbols (after NFC + lowercasing)
ALIASES = {
    "?": "ʔ",
    "ħ̄": "ḧ",
    "ħ": "ḧ",
    "ĥ": "ḧ",
    "ʕ": "ɛ",
    "ğ": "ẍ",
    "ɣ": "ẍ",
    "l̄": "ł",
    "ɫ": "ł",
    "ŕ": "ř",
}
_SPELLINGS = sorted(set(INVENTORY) | set(ALIASES), key=len, reverse=True)


def is_vowel(symbol: str) -> bool:
    return symbol in VOWELS


def sonority(symbol: str) -> int:
    return INVENTORY[symbol].sonority


@dataclass(frozen=True)
class PhonemeString:
    """A line reading: phoneme symbols grouped into words.

    ``junctures`` holds the indices of words followed by an open juncture
    ('+').  ``hints`` optionally carries, per word, the phoneme offsets at
    which a '.' syllable break was written on input.
    """

    words: tuple[tuple[str, ...], ...]
    junctures: frozenset[int] = frozenset()
    hints: tuple[tuple[int, ...], ...] | None = field(default=None, compare=False)
    epenthesis: int = field(default=0, compare=False)
    consonantal: int = field(default=0, compare=False)

    @property
    def units(self) -> tuple[str, ...]:
        return tuple(p for w in self.words for p in w)

    @property
    def word_ends(self) -> list[int]:
        """Offsets (into ``units``) just past the end of every word."""
        ends, pos = [], 0
        for w in self.words:
            pos += len(w)
            ends.append(pos)
        return ends

    @property
    def juncture_ends(self) -> list[int]:
        ends = self.word_ends
        return [ends[i] for i in sorted(self.junctures)]

    def render(self) -> str:
        out = []
        for i, w in enumerate(self.words):
            out.append("".join(w))
            if i in self.junctures:
                out.append("+")
        return " ".join(out)

    def __str__(self) -> str:
        return self.render()


def tokenize_word(text: str, offset: int = 0) -> tuple[list[str], list[int]]:
    """Split one romanized word into phoneme symbols and '.' hint offsets."""
    symbols: list[str] = []
    hints: list[int] = []
    i = 0
    while i < len(text):
        if text[i] == ".":
            if symbols:
                hints.append(len(symbols))
            i += 1
            continue
        for sp in _SPELLINGS:
            if text.startswith(sp, i):
                symbols.append(ALIASES.get(sp, sp))
                i += len(sp)
                break
        else:
            raise UnknownSymbol(text[i], offset + i)
    return symbols, hints


def parse_romanized(text: str) -> PhonemeString:
    """Parse romanized text: space separates words, '+' marks a juncture,
    '.' is an optional syllable-break hint."""
    text = unicodedata.normalize("NFC", text).lower()
    if not text.strip():
        raise EmptyLine("empty romanized line")
    words: list[tuple[str, ...]] = []
    hints: list[tuple[int, ...]] = []
    junctures: set[int] = set()
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "+":
            if words:
                junctures.add(len(words) - 1)
            i += 1
            continue
        j = i
        while j < n and not text[j].isspace() and text[j] != "+":
            j += 1
        syms, h = tokenize_word(text[i:j], i)
        if syms:
            words.append(tuple(syms))
            hints.append(tuple(h))
        i = j
    if not words:
        raise EmptyLine("no phonemes in romanized line")
    return PhonemeString(tuple(words), frozenset(junctures), tuple(hints))

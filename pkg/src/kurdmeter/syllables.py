"""Syllabification under the Central Kurdish syllable typology.

Every syllable has a one- or two-consonant onset, a single vowel nucleus and
at most two coda consonants.  A two-consonant onset must be an obstruent
followed by /w/ or /y/; a two-consonant coda must fall in sonority.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import Unsyllabifiable
from .phonemes import INVENTORY, LONG_VOWELS, PhonemeString, is_vowel

HEAVY = "H"
LIGHT = "L"


def legal_onset(cluster) -> bool:
    if len(cluster) == 1:
        return True
    if len(cluster) == 2:
        first, second = cluster
        return second in ("w", "y") and INVENTORY[first].consonant_class == "obstruent"
    return False


def legal_coda(cluster) -> bool:
    if len(cluster) <= 1:
        return True
    if len(cluster) == 2:
        return INVENTORY[cluster[0]].sonority > INVENTORY[cluster[1]].sonority
    return False


@dataclass(frozen=True)
class Syllable:
    onset: tuple[str, ...]
    nucleus: str
    coda: tuple[str, ...] = ()
    word_index: int = 0
    word_final: bool = False
    pre_juncture: bool = False

    @property
    def phonemes(self) -> tuple[str, ...]:
        return self.onset + (self.nucleus,) + self.coda

    @property
    def long_nucleus(self) -> bool:
        return self.nucleus in LONG_VOWELS

    @property
    def is_open(self) -> bool:
        return not self.coda

    @property
    def natural_weight(self) -> str:
        return natural_weight(self)

    def __str__(self) -> str:
        return "".join(self.phonemes)


def natural_weight(s: Syllable) -> str:
    """Light only for a single-consonant onset, short vowel and no coda."""
    if len(s.onset) == 1 and not s.long_nucleus and not s.coda:
        return LIGHT
    return HEAVY


@dataclass(frozen=True)
class SyllabifiedLine:
    syllables: tuple[Syllable, ...]
    reading: PhonemeString | None = None
    reading_id: int = 0

    def __len__(self) -> int:
        return len(self.syllables)

    @property
    def natural_weights(self) -> str:
        return "".join(s.natural_weight for s in self.syllables)

    @property
    def phonemes(self) -> tuple[str, ...]:
        return tuple(p for s in self.syllables for p in s.phonemes)

    def render(self) -> str:
        """Dot notation: '.' inside words, spaces between words, '+' at junctures."""
        out: list[str] = []
        word: list[str] = []
        for s in self.syllables:
            word.append(str(s))
            if s.word_final:
                out.append(".".join(word))
                word = []
                if s.pre_juncture:
                    out.append("+")
        if word:
            out.append(".".join(word))
        return " ".join(out)


def syllabify_word(word, offset: int = 0) -> list[tuple[tuple[str, ...], str, tuple[str, ...]]]:
    """Maximal-onset parse of one word into (onset, nucleus, coda) triples."""
    nuclei = [i for i, p in enumerate(word) if is_vowel(p)]
    if not nuclei:
        raise Unsyllabifiable(offset, "word has no vowel")
    first = tuple(word[: nuclei[0]])
    if not first:
        raise Unsyllabifiable(offset + nuclei[0], "syllable without onset")
    if not legal_onset(first):
        raise Unsyllabifiable(offset, f"illegal onset {''.join(first)}")

    onsets = [first]
    codas = []
    for a, b in zip(nuclei, nuclei[1:]):
        cluster = tuple(word[a + 1 : b])
        if not cluster:
            raise Unsyllabifiable(offset + b, "syllable without onset")
        for k in range(min(2, len(cluster)), 0, -1):
            coda, onset = cluster[:-k], cluster[-k:]
            if legal_onset(onset) and legal_coda(coda):
                break
        else:
            raise Unsyllabifiable(offset + a + 1, f"cannot split {''.join(cluster)}")
        codas.append(coda)
        onsets.append(onset)
    last = tuple(word[nuclei[-1] + 1 :])
    if not legal_coda(last):
        raise Unsyllabifiable(offset + nuclei[-1] + 1, f"illegal coda {''.join(last)}")
    codas.append(last)
    return [(o, word[n], c) for o, n, c in zip(onsets, nuclei, codas)]


def syllabify(reading: PhonemeString, reading_id: int = 0) -> SyllabifiedLine:
    sylls: list[Syllable] = []
    offset = 0
    for wi, word in enumerate(reading.words):
        parts = syllabify_word(word, offset)
        for k, (onset, nucleus, coda) in enumerate(parts):
            final = k == len(parts) - 1
            sylls.append(
                Syllable(
                    onset,
                    nucleus,
                    coda,
                    word_index=wi,
                    word_final=final,
                    pre_juncture=final and wi in reading.junctures,
                )
            )
        offset += len(word)
    return SyllabifiedLine(tuple(sylls), reading, reading_id)


def is_syllabifiable(word) -> bool:
    try:
        syllabify_word(word)
    except Unsyllabifiable:
        return False
    return True


def count_syllables(line: SyllabifiedLine) -> int:
    return len(line.syllables)

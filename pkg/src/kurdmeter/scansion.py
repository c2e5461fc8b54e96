"""Weight-sequence candidates for a syllabified line.

Five poetic-license clues mark syllables whose weight may differ from the
natural one:

A  word-final open syllable with a long vowel may be read light
B  open short syllable before a juncture may be read heavy
C  a line-initial short closed syllable followed by a light one may be read
   light (the line could open on a foot that starts with two lights)
D  open /î/ before /y/ may be read light
E  a two-consonant onset may be split, turning one heavy into two lights
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .syllables import HEAVY, LIGHT, SyllabifiedLine

TOGGLE = "toggle"
SPLIT = "split"

# truncation freezes clues in this order; D is never frozen
FREEZE_ORDER = ("E", "C", "B", "A")

RENDER = {HEAVY: "−", LIGHT: "˘"}


def render(weights: str) -> str:
    return "".join(RENDER[w] for w in weights)


def parse_weights(text: str) -> str:
    """Accept 'HL', '−˘', '-v' style weight strings; separators are ignored."""
    table = {"H": HEAVY, "L": LIGHT, "−": HEAVY, "-": HEAVY, "ˉ": HEAVY, "˘": LIGHT, "v": LIGHT, "u": LIGHT}
    out = []
    for ch in text:
        if ch in table:
            out.append(table[ch])
        elif ch in " /|.":
            continue
        else:
            raise ValueError(f"bad weight symbol {ch!r}")
    if not out:
        raise ValueError("empty weight sequence")
    return "".join(out)


@dataclass(frozen=True)
class ScanConfig:
    max_flex: int = 12
    max_distance: int = 4
    quant_fraction: float = 0.9
    residual_distance: int = 1
    syllabic_fraction: float = 0.8
    anceps: bool = False
    # clue A only shortens these word-final vowels (the unstressed enclitic -î)
    shortenable_vowels: frozenset[str] = frozenset({"î"})
    max_readings: int = 64
    non_kurdish_threshold: float = 0.3

    def __post_init__(self):
        if self.max_flex < 0 or self.max_distance < 0 or self.residual_distance < 0:
            raise ValueError("max_flex, max_distance and residual_distance must be >= 0")
        for name in ("quant_fraction", "syllabic_fraction", "non_kurdish_threshold"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {v}")


@dataclass(frozen=True)
class FlexPosition:
    index: int
    clue: str
    effect: str = TOGGLE


def mark_flex_positions(line: SyllabifiedLine, cfg: ScanConfig = ScanConfig()) -> list[FlexPosition]:
    sylls = line.syllables
    out: list[FlexPosition] = []
    for i, s in enumerate(sylls):
        nxt = sylls[i + 1] if i + 1 < len(sylls) else None
        single = len(s.onset) == 1
        if single and s.is_open and s.word_final and s.nucleus in cfg.shortenable_vowels:
            out.append(FlexPosition(i, "A"))
        elif single and s.is_open and not s.long_nucleus and s.pre_juncture:
            out.append(FlexPosition(i, "B"))
        elif (
            i == 0 and single and not s.long_nucleus and len(s.coda) == 1
            and nxt is not None and nxt.natural_weight == LIGHT
        ):
            out.append(FlexPosition(i, "C"))
        elif (
            single and s.is_open and s.nucleus == "î" and nxt is not None
            and not s.word_final and nxt.onset[0] == "y"
        ):
            out.append(FlexPosition(i, "D"))
        if len(s.onset) == 2:
            out.append(FlexPosition(i, "E", SPLIT))
    return out


def _freeze(flex: list[FlexPosition], max_flex: int) -> tuple[list[FlexPosition], list[FlexPosition]]:
    if len(flex) <= max_flex:
        return flex, []
    excess = len(flex) - max_flex
    frozen: list[FlexPosition] = []
    for clue in FREEZE_ORDER:
        for f in sorted((f for f in flex if f.clue == clue), key=lambda f: -f.index):
            if len(frozen) == excess:
                break
            frozen.append(f)
    active = [f for f in flex if f not in frozen]
    return active, frozen


@dataclass(frozen=True)
class Scansion:
    line: SyllabifiedLine
    flex: tuple[FlexPosition, ...]
    frozen: tuple[FlexPosition, ...] = ()
    candidates: frozenset[str] = field(default_factory=frozenset)

    @property
    def natural(self) -> str:
        return self.line.natural_weights

    @property
    def truncated(self) -> bool:
        return bool(self.frozen)


def scan(line: SyllabifiedLine, cfg: ScanConfig = ScanConfig()) -> Scansion:
    flex = mark_flex_positions(line, cfg)
    active, frozen = _freeze(flex, cfg.max_flex)
    options = [[s.natural_weight] for s in line.syllables]
    for f in active:
        w = options[f.index][0]
        if f.effect == SPLIT:
            options[f.index].append(LIGHT + LIGHT)
        else:
            options[f.index].append(LIGHT if w == HEAVY else HEAVY)
    cands = frozenset("".join(c) for c in itertools.product(*options))
    return Scansion(line, tuple(active), tuple(frozen), cands)


def generate_candidates(line: SyllabifiedLine, cfg: ScanConfig = ScanConfig()) -> frozenset[str]:
    return scan(line, cfg).candidates

"""Foot lexicon, quantitative meter patterns and syllabic verse types."""
from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import UnknownFoot
from .scansion import parse_weights, render

FOOT_WEIGHTS = {
    "فاعلاتن": "HLHH",
    "مفاعیلن": "LHHH",
    "فعولن": "LHH",
    "فاعلن": "HLH",
    "مفعول": "HHL",
    "مفاعیل": "LHHL",
    "فعلاتن": "LLHH",
    "فعلن": "LLH",
    "مفاعلن": "LHLH",
    "مستفعلن": "HHLH",
    "مفتعلن": "HLLH",
    "متفاعلن": "LLHLH",
    "فاعلات": "HLHL",
    # catalectic pattern-final feet
    "فعل": "LH",
    "فعول": "LH",
}

# misspellings seen in published pattern titles
FOOT_ALIASES = {
    "مقتعلن": "مفتعلن",
    "مستقلن": "مستفعلن",
    "فععلن": "فعلن",
}


def canonical_foot(name: str) -> str:
    """Fold Arabic letter variants and short-vowel marks out of a foot name."""
    name = unicodedata.normalize("NFKC", name)
    name = "".join(c for c in name if unicodedata.category(c) != "Mn")
    name = name.replace("ي", "ی").replace("ك", "ک").replace("ى", "ی")
    return FOOT_ALIASES.get(name, name)


def foot_weights(name: str) -> str:
    try:
        return FOOT_WEIGHTS[canonical_foot(name)]
    except KeyError:
        raise UnknownFoot(name) from None


def canonical_title(title: str) -> str:
    return " ".join(canonical_foot(f) for f in title.split())


@dataclass(frozen=True)
class MeterPattern:
    rank: int
    title: str
    weights: str
    corpus_freq: int
    corpus_pct: float

    @property
    def feet(self) -> list[str]:
        return self.title.split()

    def __len__(self) -> int:
        return len(self.weights)

    def render(self) -> str:
        return "/".join(render(foot_weights(f)) for f in self.feet)


@dataclass(frozen=True)
class SyllabicType:
    count: int
    feet_orders: tuple[tuple[int, ...], ...]
    corpus_freq: int

    @property
    def label(self) -> str:
        return f"{self.count}-syllabic"


SYLLABIC_TYPES = (
    SyllabicType(5, ((5,),), 0),
    SyllabicType(6, ((3, 3),), 0),
    SyllabicType(7, ((4, 3),), 34),
    SyllabicType(8, ((4, 4),), 159),
    SyllabicType(9, ((3, 3, 3),), 0),
    SyllabicType(10, ((5, 5),), 2020),
    SyllabicType(11, ((4, 4, 3),), 60),
    SyllabicType(12, ((4, 4, 4), (3, 3, 3, 3)), 14),
    SyllabicType(13, ((4, 4, 5),), 23),
    SyllabicType(14, ((4, 3, 4, 3),), 31),
    SyllabicType(15, ((5, 5, 5), (4, 4, 4, 3)), 17),
    SyllabicType(16, ((4, 4, 4, 4),), 19),
)


def syllabic_types() -> list[SyllabicType]:
    return list(SYLLABIC_TYPES)


def syllabic_type(count: int) -> SyllabicType | None:
    for t in SYLLABIC_TYPES:
        if t.count == count:
            return t
    return None


def parse_patterns(text: str) -> list[MeterPattern]:
    out = []
    for lineno, row in enumerate(text.splitlines(), 1):
        if not row.strip() or row.startswith("#"):
            continue
        fields = row.split("\t")
        if len(fields) not in (4, 5):
            raise ValueError(f"patterns line {lineno}: expected 4 or 5 fields")
        rank, title, weights, freq = fields[:4]
        pct = float(fields[4]) if len(fields) == 5 else 0.0
        title = canonical_title(title)
        weights = parse_weights(weights)
        expected = "".join(foot_weights(f) for f in title.split())
        if weights != expected:
            raise ValueError(
                f"patterns line {lineno}: weights {render(weights)} do not match "
                f"feet of {title} ({render(expected)})"
            )
        out.append(MeterPattern(int(rank), title, weights, int(freq), pct))
    ranks = [p.rank for p in out]
    if len(set(ranks)) != len(ranks):
        raise ValueError("duplicate pattern ranks")
    return sorted(out, key=lambda p: p.rank)


@lru_cache(maxsize=None)
def _default_patterns() -> tuple[MeterPattern, ...]:
    text = resources.files("kurdmeter.data").joinpath("patterns.tsv").read_text("utf-8")
    return tuple(parse_patterns(text))


def all_patterns() -> list[MeterPattern]:
    return list(_default_patterns())


def pattern(rank: int) -> MeterPattern:
    for p in _default_patterns():
        if p.rank == rank:
            return p
    raise KeyError(rank)


def pattern_by_title(title: str) -> MeterPattern | None:
    key = canonical_title(title)
    for p in _default_patterns():
        if p.title == key:
            return p
    return None

"""Edit-distance matching of weight candidates and poem-level classification."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .lexicon import MeterPattern, all_patterns
from .scansion import ScanConfig, render

QUANTITATIVE = "quantitative"
SYLLABIC = "syllabic"
FREE = "free"
METER_TYPES = (QUANTITATIVE, SYLLABIC, FREE)
FREE_LABEL = "free verse"


@lru_cache(maxsize=1 << 18)
def edit_distance(a: str, b: str) -> int:
    """Unit-cost Levenshtein distance (bit-parallel, Myers/Hyyrö)."""
    if len(a) < len(b):
        a, b = b, a
    m = len(b)
    if m == 0:
        return len(a)
    peq: dict[str, int] = {}
    for i, ch in enumerate(b):
        peq[ch] = peq.get(ch, 0) | (1 << i)
    mask = (1 << m) - 1
    top = 1 << (m - 1)
    pv, mv, score = mask, 0, m
    for ch in a:
        eq = peq.get(ch, 0)
        xv = eq | mv
        xh = (((eq & pv) + pv) ^ pv) | eq
        ph = mv | (~(xh | pv) & mask)
        mh = pv & xh
        if ph & top:
            score += 1
        elif mh & top:
            score -= 1
        ph = ((ph << 1) | 1) & mask
        mh = (mh << 1) & mask
        pv = mh | (~(xv | ph) & mask)
        mv = ph & xv
    return score


def _distance(candidate: str, pattern: MeterPattern, cfg: ScanConfig) -> int:
    d = edit_distance(candidate, pattern.weights)
    if cfg.anceps and d:
        w = pattern.weights
        alt = w[:-1] + ("L" if w[-1] == "H" else "H")
        d = min(d, edit_distance(candidate, alt))
    return d


@dataclass(frozen=True)
class MatchPair:
    line_index: int
    candidate: str
    pattern_rank: int
    distance: int


@dataclass
class LineAnalysis:
    line_index: int
    syllable_count: int
    candidate_count: int
    pairs: list[MatchPair] = field(default_factory=list)
    best_distance: dict[int, int] = field(default_factory=dict)
    computed: int = 0
    within_max: int = 0
    text: str = ""
    syllabified: str = ""
    natural: str = ""
    flex: list[tuple[int, str]] = field(default_factory=list)
    truncated: bool = False
    readings: int = 1

    def best_pairs(self) -> list[MatchPair]:
        """Pairs achieving each pattern's minimum, best patterns first."""
        if not self.best_distance:
            return []
        seen = set()
        out = []
        for p in sorted(self.pairs, key=lambda p: (p.distance, p.pattern_rank, p.candidate)):
            if p.distance == self.best_distance[p.pattern_rank] and p.pattern_rank not in seen:
                seen.add(p.pattern_rank)
                out.append(p)
        return out

    def to_dict(self, max_pairs: int = 3) -> dict:
        return {
            "index": self.line_index,
            "text": self.text,
            "syllables": self.syllabified,
            "syllable_count": self.syllable_count,
            "natural_weights": render(self.natural) if self.natural else "",
            "flex": [{"index": i, "clue": c} for i, c in self.flex],
            "readings": self.readings,
            "candidate_count": self.candidate_count,
            "distances_computed": self.computed,
            "acceptable_pairs": len(self.pairs),
            "pairs_within_max": self.within_max,
            "truncated": self.truncated,
            "best_pairs": [
                {"pattern_rank": p.pattern_rank, "candidate": render(p.candidate), "distance": p.distance}
                for p in self.best_pairs()[:max_pairs]
            ],
        }


def match_line(
    candidates,
    lexicon: Sequence[MeterPattern] | None = None,
    cfg: ScanConfig = ScanConfig(),
    line_index: int = 0,
    syllable_count: int | None = None,
) -> LineAnalysis:
    if not candidates:
        raise ValueError("match_line needs at least one candidate")
    lexicon = all_patterns() if lexicon is None else lexicon
    cands = sorted(candidates)
    # per pattern keep only the candidates at its smallest distance
    pairs = []
    best: dict[int, int] = {}
    within = 0
    for p in lexicon:
        dists = [(_distance(c, p, cfg), c) for c in cands]
        within += sum(d <= cfg.max_distance for d, _ in dists)
        m = min(d for d, _ in dists)
        if m > cfg.max_distance:
            continue
        best[p.rank] = m
        pairs.extend(MatchPair(line_index, c, p.rank, d) for d, c in dists if d == m)
    if syllable_count is None:
        syllable_count = min(len(c) for c in cands)
    return LineAnalysis(
        line_index,
        syllable_count,
        len(cands),
        pairs,
        best,
        computed=len(cands) * len(lexicon),
        within_max=within,
    )


@dataclass
class PoemClassification:
    meter_type: str
    pattern: MeterPattern | None = None
    syllable_count: int | None = None
    scores: dict[int, tuple[int, float]] = field(default_factory=dict)
    evidence: list[LineAnalysis] = field(default_factory=list)
    skipped: list[int] = field(default_factory=list)

    @property
    def pattern_rank(self) -> int | None:
        return self.pattern.rank if self.pattern else None

    @property
    def label(self) -> str:
        if self.meter_type == QUANTITATIVE:
            return self.pattern.title
        if self.meter_type == SYLLABIC:
            return f"{self.syllable_count}-syllabic"
        return FREE_LABEL

    def describe(self) -> str:
        if self.meter_type == QUANTITATIVE:
            return f"Quantitative ({self.pattern.title})"
        if self.meter_type == SYLLABIC:
            return f"Syllabic ({self.syllable_count}-syllabic)"
        return "Free verse"

    def to_dict(self) -> dict:
        ranked = sorted(self.scores.items(), key=lambda kv: (-kv[1][1], kv[1][0], kv[0]))
        return {
            "type": self.meter_type,
            "label": self.label,
            "pattern_rank": self.pattern_rank,
            "pattern_title": self.pattern.title if self.pattern else None,
            "syllable_count": self.syllable_count,
            "scores": [
                {"pattern_rank": r, "total_distance": t, "perfect_fraction": round(f, 6)}
                for r, (t, f) in ranked
            ],
            "lines": [a.to_dict() for a in self.evidence],
            "skipped_lines": list(self.skipped),
        }


def pattern_scores(
    analyses: Sequence[LineAnalysis], lexicon: Sequence[MeterPattern], cfg: ScanConfig
) -> dict[int, tuple[int, float]]:
    """rank -> (total min distance, fraction of lines at distance 0).

    A line with no pair for a pattern contributes max_distance + 1.
    """
    miss = cfg.max_distance + 1
    n = len(analyses)
    scores = {}
    for p in lexicon:
        dists = [a.best_distance.get(p.rank, miss) for a in analyses]
        scores[p.rank] = (sum(dists), sum(d == 0 for d in dists) / n)
    return scores


def classify(
    analyses: Sequence[LineAnalysis],
    lexicon: Sequence[MeterPattern] | None = None,
    cfg: ScanConfig = ScanConfig(),
) -> PoemClassification:
    if not analyses:
        raise ValueError("classify needs at least one line")
    lexicon = all_patterns() if lexicon is None else lexicon
    scores = pattern_scores(analyses, lexicon, cfg)
    miss = cfg.max_distance + 1

    def key(p: MeterPattern):
        total, perfect = scores[p.rank]
        return (perfect, -total, p.corpus_freq, -p.rank)

    best = max(lexicon, key=key)
    total, perfect = scores[best.rank]
    residual_ok = all(a.best_distance.get(best.rank, miss) <= cfg.residual_distance for a in analyses)
    if perfect > 0 and perfect >= cfg.quant_fraction and residual_ok:
        return PoemClassification(QUANTITATIVE, best, None, scores, list(analyses))

    counts = Counter(a.syllable_count for a in analyses)
    modal, freq = min(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    if freq / len(analyses) >= cfg.syllabic_fraction:
        return PoemClassification(SYLLABIC, None, modal, scores, list(analyses))
    return PoemClassification(FREE, None, None, scores, list(analyses))

"""Meter classification for Central Kurdish poetry."""

from .errors import MeterError
from .lexicon import all_patterns, pattern, syllabic_types
from .matcher import PoemClassification, classify, edit_distance, match_line
from .normalize import RawPoem, filter_lines, normalize_line
from .phonemes import PhonemeString, parse_romanized
from .phonemizer import merge_conjunction, phonemize
from .pipeline import analyze_line, analyze_poem
from .scansion import ScanConfig, generate_candidates, mark_flex_positions, scan
from .syllables import count_syllables, syllabify

__version__ = "0.1.0"

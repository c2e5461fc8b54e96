"""Independent reference implementations used by the tests."""
from functools import lru_cache


def lev_naive(a: str, b: str) -> int:
    """Textbook recursive Levenshtein distance, memoized on suffix offsets."""

    @lru_cache(maxsize=None)
    def go(i: int, j: int) -> int:
        if i == len(a):
            return len(b) - j
        if j == len(b):
            return len(a) - i
        if a[i] == b[j]:
            return go(i + 1, j + 1)
        return 1 + min(go(i + 1, j), go(i, j + 1), go(i + 1, j + 1))

    return go(0, 0)


# length-10 weight strings at distance >= 5 from every lexicon pattern
FAR_TEN = ("HLHLLLLLLL", "LHLLLLLHLL", "HLLLLHLLLL", "LLLLLLLLHL", "HLLLLLLLLL")


def romanize_weights(weights: str) -> str:
    """A one-word romanized line whose natural weights are ``weights``."""
    return "".join("ban" if w == "H" else "be" for w in weights)

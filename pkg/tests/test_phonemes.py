import pytest

from kurdmeter.errors import EmptyLine, UnknownSymbol
from kurdmeter.phonemes import CONSONANTS, INVENTORY, LONG_VOWELS, SHORT_VOWELS, parse_romanized


def test_inventory_sizes():
    assert len(INVENTORY) == 37
    assert len(CONSONANTS) == 29
    assert LONG_VOWELS == {"î", "ê", "a", "o", "û"}
    assert SHORT_VOWELS == {"u", "e", "i"}


def test_only_glides_are_approximants():
    approx = {s for s, p in INVENTORY.items() if p.consonant_class == "approximant"}
    assert approx == {"w", "y"}
    assert all(p.vowel_length for p in INVENTORY.values() if p.is_vowel)
    assert not any(p.vowel_length for p in INVENTORY.values() if not p.is_vowel)


def test_parse_with_hints():
    ps = parse_romanized("ger ne.bex.şê")
    assert len(ps.units) == 10
    assert ps.word_ends == [3, 10]
    assert ps.hints == ((), (2, 5))
    assert ps.junctures == frozenset()


def test_junctures_attach_to_previous_word():
    ps = parse_romanized("weslî + birînim karîye+")
    assert ps.junctures == {0, 2}
    assert ps.juncture_ends == [5, 18]
    assert ps.render() == "weslî + birînim karîye +"


def test_aliases_fold_to_canonical():
    assert parse_romanized("?a.sin").words == (("ʔ", "a", "s", "i", "n"),)
    assert parse_romanized("sal̄").words == (("s", "a", "ł"),)
    assert parse_romanized("Ĥerîq").words[0][0] == "ḧ"


def test_empty():
    with pytest.raises(EmptyLine):
        parse_romanized("")
    with pytest.raises(EmptyLine):
        parse_romanized("  + ")


def test_unknown_symbol():
    with pytest.raises(UnknownSymbol) as exc:
        parse_romanized("q!x")
    assert exc.value.symbol == "!"
    assert exc.value.offset == 1

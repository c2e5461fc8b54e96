import pytest
from hypothesis import given, strategies as st

from kurdmeter.errors import EmptyLine, EmptyPoem
from kurdmeter.normalize import (
    JUNCTURE,
    KURDISH_LETTERS,
    PoemLine,
    RawPoem,
    filter_lines,
    non_kurdish_fraction,
    normalize_line,
)


def test_appends_final_juncture():
    assert normalize_line("برینم کارییە").text == "برینم کارییە +"


def test_nali_line_normalization():
    out = normalize_line("گەر نەبەخشێ مەرهەمی وەصلی، برینم کارییە")
    assert out.text == "گەر نەبەخشێ مەرهەمی وەسلی + برینم کارییە +"


@pytest.mark.parametrize("arabic, kurdish", [("ث", "س"), ("ص", "س"), ("ذ", "ز"), ("ض", "ز"),
                                             ("ظ", "ز"), ("ط", "ت"), ("ة", "ە"), ("ك", "ک"), ("ي", "ی")])
def test_letter_folding(arabic, kurdish):
    assert normalize_line(f"ب{arabic}ر").text == f"ب{kurdish}ر +"


def test_hamza_alef_is_contextual():
    assert normalize_line("أمان").text == "ئامان +"
    assert normalize_line("سأل").text == "سال +"


def test_punctuation_becomes_one_juncture():
    assert normalize_line("ب، د.").text == "ب + د +"
    assert normalize_line("ب ،!؟ د").text == "ب + د +"
    assert normalize_line("«ب» (د) \u2014 ن").text == "ب + د + ن +"


def test_deletes_tatweel_zwnj_digits_and_latin():
    assert normalize_line("بـــەرد‌ 12 ٣ abc").text == "بەرد +"


def test_leading_juncture_dropped():
    assert normalize_line("، بەرد").text == "بەرد +"


def test_empty_line():
    with pytest.raises(EmptyLine):
        normalize_line("  ،. ")
    with pytest.raises(EmptyLine):
        normalize_line("hello")


kurdish_text = st.text(
    alphabet=st.sampled_from(sorted(KURDISH_LETTERS) + list(" ،.!?:؛ثصكيةأـ") + ["‌"]),
    min_size=1,
    max_size=40,
)


@given(kurdish_text)
def test_idempotent_and_closed(text):
    try:
        once = normalize_line(text)
    except EmptyLine:
        return
    assert normalize_line(once.text) == once
    assert set(once.text) <= KURDISH_LETTERS | {" ", JUNCTURE}
    assert once.text.endswith(" +") and not once.text.endswith("+ +")
    assert "+ +" not in once.text


def test_non_kurdish_fraction():
    assert non_kurdish_fraction("hello world") == 1.0
    assert non_kurdish_fraction("بەرد") == 0.0
    # digits count as foreign material
    assert non_kurdish_fraction("بەرد 1") == pytest.approx(0.2)


def test_filter_drops_tagged_lines():
    poem = RawPoem((PoemLine("بەرد"), PoemLine("الا يا ايها", True), PoemLine("دەست")))
    assert [l.text for l in filter_lines(poem)] == ["بەرد +", "دەست +"]


def test_filter_drops_latin_line():
    poem = RawPoem((PoemLine("بەرد"), PoemLine("just some english")))
    assert [l.text for l in filter_lines(poem)] == ["بەرد +"]


def test_filter_keeps_order():
    words = ["بەرد", "دەست", "گوڵ", "شەو"]
    poem = RawPoem.from_text("\n".join(words) + "\n\n")
    assert [l.text for l in filter_lines(poem)] == [w + " +" for w in words]


def test_filter_threshold_configurable():
    poem = RawPoem((PoemLine("بەرد ab"),))  # 2 of 6 letters foreign
    assert filter_lines(poem, threshold=0.5)
    with pytest.raises(EmptyPoem):
        filter_lines(poem, threshold=0.3)


def test_empty_poem():
    with pytest.raises(EmptyPoem):
        filter_lines(RawPoem((PoemLine("x y z"),)))

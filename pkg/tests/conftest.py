from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"

NALI_LATIN = "ger nebexşê merhemî weslî + birînim karîye +"
NALI_ARABIC = "گەر نەبەخشێ مەرهەمی وەصلی، برینم کارییە"
NALI_SYLLABLES = "ger ne.bex.şê mer.he.mî wes.lî + bi.rî.nim ka.rî.ye +"
QANI_LATIN = "le ba tî min bi lêm bul bul ne xwê nê qet be mil gul da"
PIRAMERD_LATIN = "çend sał gu lî hî way ʔê me pê pest bû ta ku par"


@pytest.fixture
def fixture_corpus_path():
    return DATA / "fixture_corpus.jsonl"

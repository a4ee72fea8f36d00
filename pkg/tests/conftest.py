import pytest

from sentrank import SegmentationRules, build_document


@pytest.fixture
def two_sentence_doc():
    """The worked example: sentences ['a b', 'a c']."""
    return build_document("worked", "a b. a c.")


@pytest.fixture
def stopword_rules():
    return SegmentationRules(stopwords=frozenset({"the", "a", "an"}))

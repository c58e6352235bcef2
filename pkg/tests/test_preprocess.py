import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satira import (
    LabeledCorpus,
    Label,
    NgramFrequency,
    NormalizationConfig,
    StopPhraseList,
    apply_stop_phrases,
    make_document,
    ngram_frequency,
    normalize,
    tokenize,
    top_fraction,
)

any_text = st.text(
    alphabet=st.characters(codec="utf-8", exclude_categories=("Cs",)), max_size=80
)
norm_configs = st.builds(
    NormalizationConfig,
    strip_diacritics=st.booleans(),
    strip_latin=st.booleans(),
    strip_special=st.booleans(),
    collapse_whitespace=st.booleans(),
)


class TestNormalize:
    def test_diacritics_removed(self):
        assert normalize("مُحَمَّد") == "محمد"

    def test_latin_and_punctuation_removed(self):
        assert normalize("BBC خبر عاجل!") == "خبر عاجل"

    def test_empty(self):
        assert normalize("") == ""

    def test_flags_independent(self):
        cfg = NormalizationConfig(strip_diacritics=False)
        assert "ُ" in normalize("مُحمد", cfg)
        cfg = NormalizationConfig(strip_latin=False, strip_special=False)
        assert normalize("BBC!", cfg) == "BBC!"

    def test_digits_kept(self):
        assert normalize("عام 2020 و٣ أيام") == "عام 2020 و٣ أيام"

    @given(text=any_text, cfg=norm_configs)
    @settings(max_examples=300, deadline=None)
    def test_idempotent(self, text, cfg):
        once = normalize(text, cfg)
        assert normalize(once, cfg) == once


class TestTokenize:
    def test_basic(self):
        assert tokenize("قال الناطق") == ["قال", "الناطق"]

    def test_surrounding_whitespace(self):
        assert tokenize("  خبر  ") == ["خبر"]

    def test_empty(self):
        assert tokenize("") == []


def corpus_of(*token_lists):
    docs = tuple(
        make_document(f"d{i}", " ".join(tokens), Label.FAKE)
        for i, tokens in enumerate(token_lists)
    )
    return LabeledCorpus(docs)


class TestNgramFrequency:
    def test_unigrams(self):
        freq = ngram_frequency(corpus_of(["a", "b", "a"]), 1)
        assert freq.counts == {"a": 2, "b": 1}

    def test_bigrams(self):
        freq = ngram_frequency(corpus_of(["a", "b", "a"]), 2)
        assert freq.counts == {"a b": 1, "b a": 1}

    def test_no_cross_document_windows(self):
        freq = ngram_frequency(corpus_of(["a"], ["b"]), 2)
        assert freq.counts == {}

    def test_bad_n(self):
        with pytest.raises(ValueError):
            ngram_frequency(corpus_of(["a"]), 4)

    @given(
        token_lists=st.lists(
            st.lists(st.sampled_from("abcdef"), max_size=12), min_size=1, max_size=6
        )
    )
    @settings(max_examples=100, deadline=None)
    def test_unigram_total_equals_token_total(self, token_lists):
        corpus = corpus_of(*token_lists)
        freq = ngram_frequency(corpus, 1)
        assert sum(freq.counts.values()) == sum(len(t) for t in token_lists)


class TestTopFraction:
    def test_ten_keys_tenth(self):
        counts = {f"k{i}": i + 1 for i in range(10)}
        top = top_fraction(NgramFrequency(1, counts), 0.1)
        assert top == [("k9", 10)]

    def test_tie_broken_lexicographically(self):
        freq = NgramFrequency(1, {"a": 5, "b": 5, "c": 1})
        assert top_fraction(freq, 0.67) == [("a", 5), ("b", 5)]

    def test_empty_dictionary(self):
        assert top_fraction(NgramFrequency(1, {}), 0.5) == []

    def test_full_fraction_returns_everything(self):
        freq = NgramFrequency(1, {"a": 2, "b": 1})
        assert top_fraction(freq, 1.0) == [("a", 2), ("b", 1)]

    def test_small_fraction_still_yields_top_entry(self):
        freq = NgramFrequency(1, {"a": 9, "b": 1, "c": 1})
        assert top_fraction(freq, 0.01) == [("a", 9)]

    def test_fraction_out_of_range(self):
        freq = NgramFrequency(1, {"a": 1})
        for bad in (0.0, -0.1, 1.5):
            with pytest.raises(ValueError):
                top_fraction(freq, bad)


class TestApplyStopPhrases:
    def test_multiword_phrase_removed(self):
        doc = make_document("d", "خاص للحدود خبر")
        out = apply_stop_phrases(doc, StopPhraseList(("خاص للحدود",)))
        assert out.tokens == ("خبر",)

    def test_empty_list_is_identity(self):
        doc = make_document("d", "a b c")
        out = apply_stop_phrases(doc, StopPhraseList(()))
        assert out.tokens == ("a", "b", "c")
        assert out is doc

    def test_non_overlapping_matches(self):
        doc = make_document("d", "a a a")
        out = apply_stop_phrases(doc, StopPhraseList(("a a",)))
        assert out.tokens == ("a",)

    def test_longest_phrase_wins(self):
        doc = make_document("d", "a b c d")
        out = apply_stop_phrases(doc, StopPhraseList(("a", "a b c")))
        assert out.tokens == ("d",)

    def test_original_document_unmodified(self):
        doc = make_document("d", "a b")
        apply_stop_phrases(doc, StopPhraseList(("a b",)))
        assert doc.tokens == ("a", "b")

    def test_duplicate_phrase_rejected(self):
        with pytest.raises(ValueError):
            StopPhraseList(("a", "a"))

    def test_too_long_phrase_rejected(self):
        with pytest.raises(ValueError):
            StopPhraseList(("a b c d",))

    @given(
        tokens=st.lists(st.sampled_from("abc"), max_size=15),
        phrases=st.sets(
            st.sampled_from(["a", "b", "a b", "b c", "a b c", "c"]), max_size=4
        ),
    )
    @settings(max_examples=150, deadline=None)
    def test_never_grows_and_noop_without_occurrences(self, tokens, phrases):
        doc = make_document("d", " ".join(tokens))
        out = apply_stop_phrases(doc, StopPhraseList(tuple(sorted(phrases))))
        assert out.size <= doc.size
        joined = " ".join(tokens)
        if not any(p in joined for p in phrases):
            assert out.tokens == doc.tokens


class TestPhraseFile:
    def test_comments_and_blanks_ignored(self, tmp_path):
        path = tmp_path / "stops.txt"
        path.write_text("# comment\n\nخاص للحدود\nالحدود\n", encoding="utf-8")
        stops = StopPhraseList.from_file(path)
        assert stops.phrases == ("خاص للحدود", "الحدود")


class TestNgramFrequencyInvariants:
    def test_wrong_arity_key_rejected(self):
        with pytest.raises(ValueError, match="gram"):
            NgramFrequency(2, {"single": 1})

    def test_zero_count_rejected(self):
        with pytest.raises(ValueError, match="count"):
            NgramFrequency(1, {"a": 0})

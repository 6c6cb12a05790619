import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import make_sentence
from textrank_variants.errors import EmptyDocumentError
from textrank_variants.graph_rank import RankVector
from textrank_variants.similarity import SimilarityConfig
from textrank_variants.summarizer import (SummaryConfig, baseline_lead, ratio_count, select_top,
                                          summarize)
from textrank_variants.text_pipeline import preprocess


def doc(n, words_each=3):
    return [make_sentence([f"s{i}w{k}" for k in range(words_each)], i) for i in range(n)]


class TestSelectTop:
    def test_ratio_forced_order(self):
        sentences = doc(10)
        ranks = RankVector({i: 10.0 - i for i in range(10)})
        assert select_top(ranks, sentences, SummaryConfig(ratio=0.2)).selected == (0, 1)

    def test_tie_goes_to_earlier_index(self):
        sentences = doc(5)
        ranks = RankVector({0: 1.0, 1: 3.0, 2: 2.0, 3: 1.0, 4: 2.0})
        assert select_top(ranks, sentences, SummaryConfig(ratio=0.4)).selected == (1, 2)

    def test_word_budget_greedy(self):
        sentences = [make_sentence(["x"] * k, i) for i, k in enumerate([4, 3, 2])]
        ranks = RankVector({0: 3.0, 1: 2.0, 2: 1.0})
        assert select_top(ranks, sentences, SummaryConfig.words(5)).selected == (0,)

    def test_word_budget_always_one(self):
        sentences = [make_sentence(["x"] * 9, 0), make_sentence(["y"], 1)]
        ranks = RankVector({0: 2.0, 1: 1.0})
        assert select_top(ranks, sentences, SummaryConfig.words(3)).selected == (0,)

    def test_output_in_document_order(self):
        sentences = doc(6)
        ranks = RankVector({0: 1.0, 1: 2.0, 2: 3.0, 3: 4.0, 4: 5.0, 5: 6.0})
        summary = select_top(ranks, sentences, SummaryConfig(ratio=0.5))
        assert summary.selected == (3, 4, 5)
        assert summary.text == " ".join(sentences[i].raw for i in (3, 4, 5))

    def test_non_graph_sentences_count_toward_n(self):
        sentences = doc(10)
        ranks = RankVector({i: float(i) for i in range(0, 10, 2)})
        # ceil(0.5 * 10) = 5 but only 5 rankable sentences exist
        assert select_top(ranks, sentences, SummaryConfig(ratio=0.5)).selected == (0, 2, 4, 6, 8)
        assert len(select_top(ranks, sentences, SummaryConfig(ratio=0.9)).selected) == 5

    def test_empty_ranks(self):
        with pytest.raises(EmptyDocumentError):
            select_top(RankVector({}), doc(2))

    def test_float_noise_in_ratio(self):
        assert ratio_count(0.1, 30) == 3
        assert ratio_count(0.2, 11) == 3

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.integers(0, 5), min_size=1, max_size=15), st.floats(0.01, 1.0), st.floats(0.01, 1.0))
    def test_size_law_and_monotonicity(self, raw_scores, r1, r2):
        sentences = doc(len(raw_scores))
        ranks = RankVector({i: float(s) for i, s in enumerate(raw_scores)})
        lo, hi = sorted((r1, r2))
        small = select_top(ranks, sentences, SummaryConfig(ratio=lo))
        big = select_top(ranks, sentences, SummaryConfig(ratio=hi))
        assert len(small.selected) == min(ratio_count(lo, len(sentences)), len(sentences))
        assert set(small.selected) <= set(big.selected)
        assert list(big.selected) == sorted(set(big.selected))

    @pytest.mark.parametrize("kw", [{"ratio": 0}, {"ratio": 1.5}, {"mode": "word_budget"}, {"mode": "x"}])
    def test_config_validation(self, kw):
        with pytest.raises(ValueError):
            SummaryConfig(**kw)


class TestSummarize:
    def test_single_sentence(self):
        for ratio in (0.01, 0.5, 1.0):
            assert summarize("Only one sentence here.", sum_cfg=SummaryConfig(ratio=ratio)).selected == (0,)

    def test_identical_sentences_pick_earliest(self):
        text = " ".join(["Stocks fell sharply today."] * 7)
        assert summarize(text, sum_cfg=SummaryConfig(ratio=0.3)).selected == (0, 1, 2)

    def test_core_sentences_match_dense_oracle(self):
        text = ("Central bank raises interest rates again. "
                "The weather stayed sunny. "
                "Interest rates rise as central bank acts. "
                "A cat slept outside. "
                "Traffic was light downtown. "
                "Children played football.")
        summary = summarize(text, sum_cfg=SummaryConfig(ratio=0.3))
        sentences = preprocess(text)
        toks = [list(s.tokens) for s in sentences]
        w = np.array([[oracles.overlap(a, b) if i != j else 0.0 for j, b in enumerate(toks)]
                      for i, a in enumerate(toks)])
        scores = oracles.pagerank_fixed_point(w)
        expected = tuple(sorted(sorted(range(6), key=lambda i: (-scores[i], i))[:2]))
        assert expected == (0, 2)
        assert summary.selected == expected

    def test_deterministic(self):
        text = open(__file__.replace("test_summarizer.py", "data/fixture30.txt")).read()
        for variant in ("overlap", "lcs", "cosine_tfidf", "bm25", "bm25_plus"):
            cfg = SimilarityConfig(variant)
            assert summarize(text, sim_cfg=cfg) == summarize(text, sim_cfg=cfg)

    def test_summary_is_subsequence(self):
        text = open(__file__.replace("test_summarizer.py", "data/fixture30.txt")).read()
        sentences = preprocess(text)
        summary = summarize(text, sim_cfg=SimilarityConfig("bm25"))
        assert len(summary.selected) == 6
        assert summary.sentences == tuple(sentences[i].text for i in summary.selected)

    def test_no_content(self):
        with pytest.raises(EmptyDocumentError):
            summarize("It was what it was. And so it is.")
        with pytest.raises(EmptyDocumentError):
            summarize("   ")


class TestLead:
    def test_ratio(self):
        text = " ".join(f"Sentence number {i} here." for i in range(10))
        assert baseline_lead(text, sum_cfg=SummaryConfig(ratio=0.2)).selected == (0, 1)

    def test_whole_document(self):
        text = "One here. Two here. Three here."
        assert baseline_lead(text, sum_cfg=SummaryConfig(ratio=1.0)).selected == (0, 1, 2)

    def test_tiny_budget(self):
        text = "This first sentence is long enough. Short one."
        assert baseline_lead(text, sum_cfg=SummaryConfig.words(2)).selected == (0,)

    def test_budget_prefix(self):
        text = "One two three. Four five. Six seven eight nine."
        assert baseline_lead(text, sum_cfg=SummaryConfig.words(5)).selected == (0, 1)

    def test_lines(self):
        summary = baseline_lead("A b\nc. D e. F g.", sum_cfg=SummaryConfig(ratio=0.6))
        assert summary.lines() == "A b c.\nD e.\n"
        assert summary.text == "A b c. D e."

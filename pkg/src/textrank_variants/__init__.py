"""TextRank extractive summarization with pluggable sentence similarity."""

from .errors import (CorpusIOError, CorruptedStatsError, EmptyDocumentError, StatsUnavailableError,
                     TextRankError, UndefinedScoreError)
from .graph_rank import RankConfig, RankVector, SentenceGraph, build_graph, pagerank, rank_sentences
from .rouge_eval import EvalConfig, MetricScore, RougeScore, score_summary
from .similarity import CorpusStats, SimilarityConfig, build_corpus_stats, pairwise_weight
from .summarizer import Summary, SummaryConfig, baseline_lead, select_top, summarize
from .text_pipeline import PipelineConfig, RawDocument, Sentence, preprocess, split_sentences

__version__ = "0.1.0"

__all__ = [
    "CorpusIOError", "CorruptedStatsError", "EmptyDocumentError", "StatsUnavailableError",
    "TextRankError", "UndefinedScoreError",
    "RankConfig", "RankVector", "SentenceGraph", "build_graph", "pagerank", "rank_sentences",
    "EvalConfig", "MetricScore", "RougeScore", "score_summary",
    "CorpusStats", "SimilarityConfig", "build_corpus_stats", "pairwise_weight",
    "Summary", "SummaryConfig", "baseline_lead", "select_top", "summarize",
    "PipelineConfig", "RawDocument", "Sentence", "preprocess", "split_sentences",
]

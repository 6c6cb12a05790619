"""Edge-weight functions between sentence pairs.

Five variants are available: the original TextRank word overlap, longest
common substring, TF-IDF cosine, BM25 and BM25+. The IDF-based ones work
against :class:`CorpusStats` computed over the sentences of the document
being summarized, so every sentence plays the role of a "document".

All logarithms are natural logarithms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Sequence

import numpy as np

from .errors import CorruptedStatsError, StatsUnavailableError
from .text_pipeline import Sentence

VARIANTS = ("overlap", "lcs", "cosine_tfidf", "bm25", "bm25_plus")
IDF_MODES = ("corrected", "naive", "zero_floor", "raw")

# CLI spellings accepted in addition to the canonical names
VARIANT_ALIASES = {"cosine": "cosine_tfidf", "bm25plus": "bm25_plus", "bm25+": "bm25_plus"}
IDF_ALIASES = {"zero": "zero_floor"}


@dataclass(frozen=True)
class SimilarityConfig:
    """Variant selector plus BM25 parameters.

    ``idf_mode`` applies to the BM25 family only:

    * ``corrected``: standard BM25 IDF, replaced by ``epsilon * avg_idf`` for
      terms present in more than half of the sentences.
    * ``naive``: ``log(N / n)``.
    * ``zero_floor``: standard IDF clamped below at zero.
    * ``raw``: standard IDF, negative values kept.
    """

    variant: str = "overlap"
    k1: float = 1.2
    b: float = 0.75
    delta: float = 1.0
    epsilon: float = 0.25
    idf_mode: str = "corrected"

    def __post_init__(self):
        object.__setattr__(self, "variant", VARIANT_ALIASES.get(self.variant, self.variant))
        object.__setattr__(self, "idf_mode", IDF_ALIASES.get(self.idf_mode, self.idf_mode))
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown similarity variant {self.variant!r}")
        if self.idf_mode not in IDF_MODES:
            raise ValueError(f"unknown idf mode {self.idf_mode!r}")
        if self.k1 < 0:
            raise ValueError("k1 must be >= 0")
        if not 0 <= self.b <= 1:
            raise ValueError("b must lie in [0, 1]")
        if self.epsilon < 0:
            raise ValueError("epsilon must be >= 0")
        if self.delta < 0:
            raise ValueError("delta must be >= 0")


def standard_idf(n_sentences: int, df: int) -> float:
    return math.log(n_sentences - df + 0.5) - math.log(df + 0.5)


@dataclass(frozen=True)
class CorpusStats:
    n_sentences: int
    doc_freq: Mapping[str, int]
    avg_dl: float
    avg_idf: float


def build_corpus_stats(sentences: Iterable[Sentence]) -> CorpusStats:
    """Collect sentence-level document frequencies over non-empty sentences.

    ``avg_idf`` is the mean of the uncorrected standard IDF over all distinct
    terms, negative values included.
    """
    doc_freq: Dict[str, int] = {}
    n = 0
    total_len = 0
    for s in sentences:
        if not s.tokens:
            continue
        n += 1
        total_len += len(s.tokens)
        for term in s.distinct_terms:
            doc_freq[term] = doc_freq.get(term, 0) + 1
    if n == 0:
        raise StatsUnavailableError("no sentence with at least one token")
    avg_idf = math.fsum(standard_idf(n, df) for df in doc_freq.values()) / len(doc_freq)
    return CorpusStats(n_sentences=n, doc_freq=doc_freq, avg_dl=total_len / n, avg_idf=avg_idf)


def term_idf(term: str, stats: CorpusStats, cfg: SimilarityConfig) -> float:
    """IDF of ``term`` under ``cfg.idf_mode``; unknown terms get 0.

    In ``corrected`` mode the floor ``epsilon * avg_idf`` is itself clamped at
    zero, since ``avg_idf`` can be negative when most terms are common.
    """
    df = stats.doc_freq.get(term, 0)
    if df == 0:
        return 0.0
    n = stats.n_sentences
    if df > n:
        raise CorruptedStatsError(f"term {term!r} has doc_freq {df} > N={n}")
    mode = cfg.idf_mode
    if mode == "naive":
        return math.log(n / df)
    idf = standard_idf(n, df)
    if mode == "corrected":
        if 2 * df > n:
            return max(0.0, cfg.epsilon * stats.avg_idf)
        return idf
    if mode == "zero_floor":
        return max(0.0, idf)
    return idf


def overlap_similarity(si: Sentence, sj: Sentence) -> float:
    """Shared distinct tokens over ``log|si| + log|sj|`` (lengths in tokens)."""
    shared = len(set(si.tokens) & set(sj.tokens))
    if shared == 0:
        return 0.0
    denom = math.log(len(si.tokens)) + math.log(len(sj.tokens))
    if denom <= 0:
        return 0.0
    return shared / denom


def _codes(text: str) -> np.ndarray:
    return np.frombuffer(text.encode("utf-32-le"), dtype=np.uint32)


def longest_common_substring(a: str, b: str) -> int:
    """Length of the longest common contiguous substring of ``a`` and ``b``.

    The character match matrix is sheared so every diagonal becomes one
    column; the answer is then the longest run of matches in that layout.
    """
    if not a or not b:
        return 0
    ca, cb = _codes(a), _codes(b)
    n, m = len(ca), len(cb)
    eq = ca[:, None] == cb[None, :]
    if not eq.any():
        return 0
    # row n stays False and separates consecutive diagonals once flattened
    sheared = np.zeros((n + 1, n + m - 1), dtype=bool)
    rows = np.arange(n)[:, None]
    sheared[rows, np.arange(m)[None, :] - rows + (n - 1)] = eq
    flat = np.concatenate(([False], sheared.T.ravel(), [False])).astype(np.int8)
    edges = np.flatnonzero(np.diff(flat))
    return int((edges[1::2] - edges[0::2]).max())


_SEPARATOR = np.uint32(0xFFFFFFFF)  # outside the Unicode range, never matches


def longest_common_substrings(a: str, others: Sequence[str]) -> np.ndarray:
    """Longest common substring length of ``a`` against each of ``others``.

    Runs the classic suffix-length recurrence once over the concatenation of
    ``others`` (separated by a code point that cannot match), so the cost is
    ``len(a)`` vector operations instead of one table per pair.
    """
    out = np.zeros(len(others), dtype=np.int64)
    keep = [k for k, t in enumerate(others) if t]
    if not a or not keep:
        return out
    parts, starts, pos = [], [], 0
    for k in keep:
        codes = _codes(others[k])
        starts.append(pos)
        parts.append(codes)
        parts.append(np.array([_SEPARATOR], dtype=np.uint32))
        pos += len(codes) + 1
    cb = np.concatenate(parts)
    dtype = np.int16 if len(a) < 32000 else np.int32
    prev = np.zeros(len(cb) + 1, dtype=dtype)
    cur = np.zeros_like(prev)
    best = np.zeros(len(cb), dtype=dtype)
    masks = {}
    for ch in _codes(a).tolist():
        match = masks.get(ch)
        if match is None:
            match = masks[ch] = (cb == ch).astype(dtype)
        # cur[j + 1] = (prev[j] + 1) if a-char matches cb[j] else 0
        np.add(prev[:-1], 1, out=cur[1:])
        np.multiply(cur[1:], match, out=cur[1:])
        np.maximum(best, cur[1:], out=best)
        prev, cur = cur, prev
    out[keep] = np.maximum.reduceat(best, starts)
    return out


def lcs_similarity(si: Sentence, sj: Sentence) -> float:
    """Longest common substring length, in characters, of the lowercased text."""
    return float(longest_common_substring(si.text.lower(), sj.text.lower()))


@dataclass(frozen=True)
class TfIdfVector:
    weights: Dict[str, float] = field(default_factory=dict)

    def norm(self) -> float:
        return math.sqrt(math.fsum(w * w for w in self.weights.values()))


def tfidf_vector(s: Sentence, stats: CorpusStats, cfg: SimilarityConfig | None = None) -> TfIdfVector:
    """Raw term count times ``log(N / n)``; zero weights are dropped."""
    weights = {}
    for term, tf in s.term_counts.items():
        df = stats.doc_freq.get(term, 0)
        if df == 0:
            continue
        w = tf * math.log(stats.n_sentences / df)
        if w > 0:
            weights[term] = w
    return TfIdfVector(weights)


def cosine_tfidf_similarity(si: Sentence, sj: Sentence, stats: CorpusStats,
                            cfg: SimilarityConfig | None = None) -> float:
    vi, vj = tfidf_vector(si, stats, cfg), tfidf_vector(sj, stats, cfg)
    ni, nj = vi.norm(), vj.norm()
    if ni == 0 or nj == 0:
        return 0.0
    dot = math.fsum(w * vj.weights[t] for t, w in vi.weights.items() if t in vj.weights)
    # guard the [0, 1] range against rounding
    return min(1.0, dot / (ni * nj))


def _bm25_terms(r: Sentence, s: Sentence, stats: CorpusStats, cfg: SimilarityConfig, delta: float) -> float:
    if stats.avg_dl <= 0:
        raise StatsUnavailableError("avg_dl must be positive")
    counts = r.term_counts
    length_norm = cfg.k1 * (1 - cfg.b + cfg.b * len(r.tokens) / stats.avg_dl)
    parts = []
    for term in s.distinct_terms:
        f = counts.get(term, 0)
        if f == 0:
            continue
        tf_part = f * (cfg.k1 + 1) / (f + length_norm)
        parts.append(term_idf(term, stats, cfg) * (tf_part + delta))
    return math.fsum(parts)


def bm25_score(r: Sentence, s: Sentence, stats: CorpusStats, cfg: SimilarityConfig) -> float:
    """BM25 of ``r`` (the scored document) against query sentence ``s``."""
    return _bm25_terms(r, s, stats, cfg, 0.0)


def bm25_plus_score(r: Sentence, s: Sentence, stats: CorpusStats, cfg: SimilarityConfig) -> float:
    """BM25 with the lower bound ``delta`` added to every matched term."""
    return _bm25_terms(r, s, stats, cfg, cfg.delta)


def pairwise_weight(si: Sentence, sj: Sentence, stats: CorpusStats, cfg: SimilarityConfig) -> float:
    """Symmetric, non-negative edge weight between two sentences.

    BM25 and BM25+ are averaged over both directions.
    """
    v = cfg.variant
    if v == "overlap":
        w = overlap_similarity(si, sj)
    elif v == "lcs":
        w = lcs_similarity(si, sj)
    elif v == "cosine_tfidf":
        w = cosine_tfidf_similarity(si, sj, stats, cfg)
    else:
        score = bm25_score if v == "bm25" else bm25_plus_score
        w = (score(si, sj, stats, cfg) + score(sj, si, stats, cfg)) / 2
    return w if w > 0 else 0.0


def similarity_matrix(sentences: Sequence[Sentence], stats: CorpusStats, cfg: SimilarityConfig) -> np.ndarray:
    """Dense symmetric matrix of ``pairwise_weight``, zero diagonal.

    LCS weights are computed in one batch per row; every other variant calls
    :func:`pairwise_weight` for each unordered pair.
    """
    n = len(sentences)
    out = np.zeros((n, n))
    if cfg.variant == "lcs":
        texts = [s.text.lower() for s in sentences]
        for i in range(n - 1):
            out[i, i + 1:] = longest_common_substrings(texts[i], texts[i + 1:])
        return out + out.T
    for i in range(n):
        for j in range(i + 1, n):
            out[i, j] = out[j, i] = pairwise_weight(sentences[i], sentences[j], stats, cfg)
    return out

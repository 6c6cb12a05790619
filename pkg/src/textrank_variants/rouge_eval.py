"""ROUGE-1, ROUGE-2 and ROUGE-SU4 with clipped counts.

The formulas are implemented directly; output is not meant to be byte
compatible with the ROUGE-1.5.5 perl toolkit.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import UndefinedScoreError
from .text_pipeline import default_stopwords, normalize_tokens, porter_stem, remove_stopwords

MULTI_REF_MODES = ("average", "max")


@dataclass(frozen=True)
class EvalConfig:
    stemming: bool = True
    stopword_removal: bool = False
    su4_skip: int = 4
    multi_ref_mode: str = "average"
    bootstrap_samples: int = 0
    stopwords: frozenset = field(default_factory=default_stopwords)

    def __post_init__(self):
        if self.su4_skip != 4:
            raise ValueError("ROUGE-SU4 uses a skip distance of 4")
        if self.multi_ref_mode not in MULTI_REF_MODES:
            raise ValueError(f"unknown multi-reference mode {self.multi_ref_mode!r}")
        if self.bootstrap_samples < 0:
            raise ValueError("bootstrap_samples must be >= 0")


@dataclass(frozen=True)
class MetricScore:
    recall: float = 0.0
    precision: float = 0.0
    f1: float = 0.0

    @classmethod
    def from_rp(cls, recall: float, precision: float) -> "MetricScore":
        total = recall + precision
        return cls(recall, precision, 0.0 if total == 0 else 2 * recall * precision / total)


@dataclass(frozen=True)
class RougeScore:
    rouge1: MetricScore
    rouge2: MetricScore
    rouge_su4: MetricScore

    @property
    def metric_average(self) -> float:
        """Mean of the three recall values."""
        return (self.rouge1.recall + self.rouge2.recall + self.rouge_su4.recall) / 3

    def as_dict(self) -> Dict[str, object]:
        out = {name: vars(getattr(self, name)).copy() for name in ("rouge1", "rouge2", "rouge_su4")}
        out["metric_average"] = self.metric_average
        return out


def ngram_counts(tokens: Sequence[str], n: int) -> Counter:
    if n < 1:
        raise ValueError("n must be >= 1")
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def skip_bigram_counts(tokens: Sequence[str], max_skip: int = 4) -> Counter:
    """Ordered pairs with at most ``max_skip`` tokens between them."""
    counts = Counter()
    for i, first in enumerate(tokens):
        for j in range(i + 1, min(len(tokens), i + max_skip + 2)):
            counts[(first, tokens[j])] += 1
    return counts


def su4_units(tokens: Sequence[str], max_skip: int = 4) -> Counter:
    units = skip_bigram_counts(tokens, max_skip)
    units.update(ngram_counts(tokens, 1))
    return units


def _clipped_matches(cand: Counter, ref: Counter) -> int:
    return sum(min(c, ref[g]) for g, c in cand.items() if g in ref)


def _combine(cand: Counter, refs: Sequence[Counter], mode: str) -> MetricScore:
    cand_total = sum(cand.values())
    per_ref = []
    for ref in refs:
        ref_total = sum(ref.values())
        if ref_total == 0:
            continue
        hits = _clipped_matches(cand, ref)
        per_ref.append((hits / ref_total, hits / cand_total if cand_total else 0.0))
    if not per_ref:
        raise UndefinedScoreError("every reference is empty")
    if mode == "max":
        recall, precision = max(per_ref, key=lambda rp: (rp[0], MetricScore.from_rp(*rp).f1))
    else:
        recall = sum(r for r, _ in per_ref) / len(per_ref)
        precision = sum(p for _, p in per_ref) / len(per_ref)
    return MetricScore.from_rp(recall, precision)


def rouge_n(candidate: Sequence[str], references: Sequence[Sequence[str]], n: int,
            cfg: Optional[EvalConfig] = None) -> MetricScore:
    """ROUGE-N over pre-tokenized text.

    References without any n-gram are skipped. With ``average`` the recall
    and precision are averaged over references; ``max`` keeps the reference
    with the highest recall. F1 is always the harmonic mean of the combined
    recall and precision.
    """
    cfg = cfg or EvalConfig()
    if not references:
        raise UndefinedScoreError("at least one reference is required")
    return _combine(ngram_counts(candidate, n), [ngram_counts(r, n) for r in references], cfg.multi_ref_mode)


def rouge_su4(candidate: Sequence[str], references: Sequence[Sequence[str]],
              cfg: Optional[EvalConfig] = None) -> MetricScore:
    """Skip-bigrams (gap <= 4) plus unigrams, clipped counting."""
    cfg = cfg or EvalConfig()
    if not references:
        raise UndefinedScoreError("at least one reference is required")
    return _combine(su4_units(candidate, cfg.su4_skip),
                    [su4_units(r, cfg.su4_skip) for r in references], cfg.multi_ref_mode)


def rouge_tokens(text: str, cfg: Optional[EvalConfig] = None) -> List[str]:
    cfg = cfg or EvalConfig()
    tokens = normalize_tokens(text)
    if cfg.stopword_removal:
        tokens = remove_stopwords(tokens, cfg.stopwords)
    if cfg.stemming:
        tokens = [porter_stem(t) for t in tokens]
    return tokens


def _or_zero(metric, *args) -> MetricScore:
    try:
        return metric(*args)
    except UndefinedScoreError:
        return MetricScore()


def score_summary(candidate: str, references: Sequence[str], cfg: Optional[EvalConfig] = None) -> RougeScore:
    """Tokenize (and optionally stem) candidate and references, then score.

    Raises UndefinedScoreError when no reference has a single token. A metric
    that is undefined only because the references are too short for its
    units (ROUGE-2 on one-word references) scores zero instead.
    """
    cfg = cfg or EvalConfig()
    cand = rouge_tokens(candidate, cfg)
    refs = [rouge_tokens(r, cfg) for r in references]
    if not any(refs):
        raise UndefinedScoreError("every reference is empty")
    return RougeScore(
        rouge1=rouge_n(cand, refs, 1, cfg),
        rouge2=_or_zero(rouge_n, cand, refs, 2, cfg),
        rouge_su4=rouge_su4(cand, refs, cfg),
    )


def bootstrap_interval(values: Sequence[float], samples: int = 1000, confidence: float = 0.95,
                       seed: int = 0) -> Tuple[float, float]:
    """Percentile bootstrap interval for the mean of per-document scores."""
    data = np.asarray(values, dtype=float)
    if data.size == 0:
        raise ValueError("no values to resample")
    rng = np.random.default_rng(seed)
    means = data[rng.integers(0, data.size, size=(samples, data.size))].mean(axis=1)
    alpha = (1 - confidence) / 2
    lo, hi = np.quantile(means, [alpha, 1 - alpha])
    return float(lo), float(hi)

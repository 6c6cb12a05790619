"""Summary assembly and the lead-sentence baseline."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import EmptyDocumentError
from .graph_rank import RankConfig, RankVector, rank_sentences
from .similarity import SimilarityConfig
from .text_pipeline import PipelineConfig, Sentence, graph_sentences, preprocess


@dataclass(frozen=True)
class SummaryConfig:
    """Summary size, either a fraction of the sentence count or a word budget."""

    mode: str = "ratio"
    ratio: float = 0.2
    word_budget: Optional[int] = None

    def __post_init__(self):
        if self.mode == "ratio":
            if not 0 < self.ratio <= 1:
                raise ValueError("ratio must lie in (0, 1]")
        elif self.mode == "word_budget":
            if self.word_budget is None or self.word_budget < 0:
                raise ValueError("word_budget mode needs a non-negative word_budget")
        else:
            raise ValueError(f"unknown summary mode {self.mode!r}")

    @classmethod
    def words(cls, budget: int) -> "SummaryConfig":
        return cls(mode="word_budget", word_budget=budget)


@dataclass(frozen=True)
class Summary:
    selected: Tuple[int, ...]
    text: str
    sentences: Tuple[str, ...] = ()

    def lines(self) -> str:
        return "".join(s + "\n" for s in self.sentences)


def ratio_count(ratio: float, n: int) -> int:
    """``ceil(ratio * n)``, ignoring float noise such as ``0.1 * 30``."""
    return math.ceil(ratio * n - 1e-9)


def word_count(sentence: Sentence) -> int:
    return len(sentence.raw_tokens)


def _take(ordered: Sequence[Sentence], n_total: int, cfg: SummaryConfig) -> List[Sentence]:
    if not ordered:
        return []
    if cfg.mode == "ratio":
        return list(ordered[:ratio_count(cfg.ratio, n_total)])
    taken, used = [], 0
    for s in ordered:
        words = word_count(s)
        if taken and used + words > cfg.word_budget:
            break
        taken.append(s)
        used += words
    return taken


def _assemble(chosen: Sequence[Sentence]) -> Summary:
    chosen = sorted(chosen, key=lambda s: s.index)
    texts = tuple(s.text for s in chosen)
    return Summary(selected=tuple(s.index for s in chosen), text=" ".join(texts), sentences=texts)


def select_top(ranks: RankVector, sentences: Sequence[Sentence], cfg: Optional[SummaryConfig] = None) -> Summary:
    """Pick the best-scoring sentences and return them in document order.

    Ties go to the smaller sentence index. In word-budget mode sentences are
    added in score order until the next one would overflow the budget; the
    first one is always admitted.
    """
    if cfg is None:
        cfg = SummaryConfig()
    if not ranks.scores:
        raise EmptyDocumentError("nothing to rank")
    by_index = {s.index: s for s in sentences}
    ordered = [by_index[i] for i, _ in sorted(ranks.scores.items(), key=lambda kv: (-kv[1], kv[0]))]
    return _assemble(_take(ordered, len(sentences), cfg))


def summarize(text: str, pipeline_cfg: Optional[PipelineConfig] = None,
              sim_cfg: Optional[SimilarityConfig] = None, rank_cfg: Optional[RankConfig] = None,
              sum_cfg: Optional[SummaryConfig] = None) -> Summary:
    sentences = preprocess(text, pipeline_cfg)
    if not graph_sentences(sentences):
        raise EmptyDocumentError("no sentence has any content token")
    return select_top(rank_sentences(sentences, sim_cfg, rank_cfg), sentences, sum_cfg)


def baseline_lead(text: str, pipeline_cfg: Optional[PipelineConfig] = None,
                  sum_cfg: Optional[SummaryConfig] = None) -> Summary:
    """The first sentences of the document, sized like :func:`select_top`."""
    sentences = preprocess(text, pipeline_cfg)
    return _assemble(_take(sentences, len(sentences), sum_cfg or SummaryConfig()))

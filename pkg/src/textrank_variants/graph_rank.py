"""Sentence graph construction and weighted PageRank."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .similarity import CorpusStats, SimilarityConfig, build_corpus_stats, similarity_matrix
from .text_pipeline import Sentence, graph_sentences


@dataclass
class SentenceGraph:
    """Weighted undirected graph over sentence indices.

    ``weights`` holds both orientations of every edge and only strictly
    positive weights; nodes without edges still appear in ``node_ids``.
    """

    node_ids: List[int]
    weights: Dict[Tuple[int, int], float] = field(default_factory=dict)

    def add_edge(self, i: int, j: int, w: float) -> None:
        if i == j:
            raise ValueError("self-loops are not allowed")
        if not (w > 0 and math.isfinite(w)):
            raise ValueError(f"edge weight must be finite and > 0, got {w!r}")
        self.weights[(i, j)] = w
        self.weights[(j, i)] = w

    def neighbors(self) -> Dict[int, List[Tuple[int, float]]]:
        adj = {i: [] for i in self.node_ids}
        for (i, j), w in sorted(self.weights.items()):
            adj[i].append((j, w))
        return adj

    def edges(self):
        """Each undirected edge once, as ``(i, j, w)`` with ``i < j``."""
        return [(i, j, w) for (i, j), w in sorted(self.weights.items()) if i < j]

    def scaled(self, c: float) -> "SentenceGraph":
        return SentenceGraph(list(self.node_ids), {k: w * c for k, w in self.weights.items()})


@dataclass(frozen=True)
class RankConfig:
    damping: float = 0.85
    tolerance: float = 1e-6
    max_iterations: int = 100

    def __post_init__(self):
        if not 0 < self.damping < 1:
            raise ValueError("damping must lie in (0, 1)")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be > 0")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


@dataclass
class RankVector:
    scores: Dict[int, float]
    iterations_used: int = 0
    final_residual: float = 0.0
    converged: bool = True
    residuals: List[float] = field(default_factory=list)


def build_graph(sentences: Sequence[Sentence], stats: Optional[CorpusStats] = None,
                cfg: Optional[SimilarityConfig] = None) -> SentenceGraph:
    """Graph over the graph-eligible sentences, one weight per unordered pair."""
    nodes = graph_sentences(sentences)
    if not nodes:
        raise ValueError("no graph sentences")
    if cfg is None:
        cfg = SimilarityConfig()
    if stats is None:
        stats = build_corpus_stats(nodes)
    matrix = similarity_matrix(nodes, stats, cfg)
    graph = SentenceGraph([s.index for s in nodes])
    for a in range(len(nodes)):
        for b in range(a + 1, len(nodes)):
            w = float(matrix[a, b])
            if w > 0:
                graph.add_edge(nodes[a].index, nodes[b].index, w)
    return graph


def pagerank(graph: SentenceGraph, cfg: Optional[RankConfig] = None) -> RankVector:
    """Weighted PageRank in the unnormalized TextRank form.

    Each sweep computes ``(1 - d) + d * sum_j w(j, i) / out(j) * score(j)``
    from the previous vector. Neighbor sums use ``math.fsum``, which is
    order independent, so relabeling nodes permutes the scores exactly.
    Stops once the L1 change between sweeps is within tolerance; running out
    of iterations returns the last vector with ``converged=False``.
    """
    if cfg is None:
        cfg = RankConfig()
    if not graph.node_ids:
        raise ValueError("graph has no nodes")
    d = cfg.damping
    adj = graph.neighbors()
    out_weight = {j: math.fsum(w for _, w in nbrs) for j, nbrs in adj.items()}
    # incoming transition coefficients per node: w(j, i) / out(j)
    incoming = {i: [(j, w / out_weight[j]) for j, w in nbrs] for i, nbrs in adj.items()}

    scores = {i: 1.0 for i in graph.node_ids}
    residuals = []
    converged = False
    for _ in range(cfg.max_iterations):
        new = {i: (1 - d) + d * math.fsum([c * scores[j] for j, c in incoming[i]])
               for i in graph.node_ids}
        residual = math.fsum(abs(new[i] - scores[i]) for i in graph.node_ids)
        residuals.append(residual)
        scores = new
        if residual <= cfg.tolerance:
            converged = True
            break
    return RankVector(scores=scores, iterations_used=len(residuals),
                      final_residual=residuals[-1], converged=converged, residuals=residuals)


def rank_sentences(sentences: Sequence[Sentence], sim_cfg: Optional[SimilarityConfig] = None,
                   rank_cfg: Optional[RankConfig] = None) -> RankVector:
    nodes = graph_sentences(sentences)
    stats = build_corpus_stats(nodes)
    return pagerank(build_graph(nodes, stats, sim_cfg), rank_cfg)


def format_edge_list(graph: SentenceGraph) -> str:
    """Tab-separated ``i j weight`` lines, weights to 12 significant digits."""
    return "".join(f"{i}\t{j}\t{w:.12g}\n" for i, j, w in graph.edges())


def dump_graph(graph: SentenceGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(graph))

"""Command line entry points: ``summarize``, ``eval`` and ``bench``.

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 empty or degenerate
input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .corpus_bench import (METHODS, REPORT_FORMATS, CorpusLayout, load_corpus, render_report,
                           run_benchmark)
from .errors import CorpusIOError, EmptyDocumentError, StatsUnavailableError, UndefinedScoreError
from .graph_rank import RankConfig, build_graph, dump_graph, pagerank
from .rouge_eval import EvalConfig, score_summary
from .similarity import SimilarityConfig, build_corpus_stats
from .summarizer import SummaryConfig, select_top
from .text_pipeline import PipelineConfig, graph_sentences, load_wordlist, preprocess

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_EMPTY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_pipeline_args(p):
    p.add_argument("--stopwords", type=Path, help="stopword list file (one word per line)")
    p.add_argument("--abbreviations", type=Path, help="abbreviation list file (one per line)")
    p.add_argument("--no-stemming", action="store_true", help="disable Porter stemming of graph tokens")
    p.add_argument("--keep-stopwords", action="store_true", help="do not remove stopwords from graph tokens")


def _add_size_args(p):
    size = p.add_mutually_exclusive_group()
    size.add_argument("--ratio", type=float, default=0.2, help="fraction of sentences to keep (default 0.2)")
    size.add_argument("--words", type=int, help="word budget instead of a ratio")


def _add_rank_args(p):
    p.add_argument("--damping", type=float, default=0.85)
    p.add_argument("--tolerance", type=float, default=1e-6)
    p.add_argument("--max-iterations", type=int, default=100)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="textrank-variants", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("summarize", help="summarize one plain-text document")
    s.add_argument("file", type=Path)
    s.add_argument("--variant", default="overlap", choices=["overlap", "lcs", "cosine", "bm25", "bm25plus"])
    _add_size_args(s)
    s.add_argument("--epsilon", type=float, default=0.25)
    s.add_argument("--idf", default="corrected", choices=["corrected", "naive", "zero", "raw"])
    s.add_argument("--k1", type=float, default=1.2)
    s.add_argument("--b", type=float, default=0.75)
    s.add_argument("--delta", type=float, default=1.0)
    s.add_argument("--output", type=Path)
    s.add_argument("--lines", action="store_true", help="one sentence per line")
    s.add_argument("--dump-graph", type=Path, metavar="PATH", help="write the edge list (i, j, weight)")
    _add_rank_args(s)
    _add_pipeline_args(s)

    e = sub.add_parser("eval", help="ROUGE-score a candidate summary")
    e.add_argument("--candidate", type=Path, required=True)
    e.add_argument("--refs", type=Path, nargs="+", required=True)
    e.add_argument("--no-stemming", action="store_true")
    e.add_argument("--remove-stopwords", action="store_true")
    e.add_argument("--multi-ref", default="average", choices=["average", "max"])
    e.add_argument("--json", action="store_true")

    b = sub.add_parser("bench", help="run every method over a DUC-style corpus")
    b.add_argument("--docs", type=Path, required=True)
    b.add_argument("--refs", type=Path, required=True)
    b.add_argument("--methods", default=",".join(METHODS),
                   help=f"comma-separated subset of: {', '.join(METHODS)}")
    b.add_argument("--reference-method", default="overlap")
    b.add_argument("--format", default="table", choices=REPORT_FORMATS)
    b.add_argument("--parallel", action="store_true")
    b.add_argument("--workers", type=int)
    b.add_argument("--bootstrap", type=int, default=0, metavar="N", help="bootstrap samples for 95%% CIs")
    b.add_argument("--no-stemming", action="store_true", help="disable stemming in ROUGE")
    b.add_argument("--multi-ref", default="average", choices=["average", "max"])
    b.add_argument("--output", type=Path)
    _add_size_args(b)
    _add_rank_args(b)
    return parser


def _pipeline_cfg(args) -> PipelineConfig:
    kw = {"stemming": not args.no_stemming, "stopword_removal": not args.keep_stopwords}
    if args.stopwords:
        kw["stopwords"] = load_wordlist(args.stopwords)
    if args.abbreviations:
        kw["abbreviations"] = load_wordlist(args.abbreviations)
    return PipelineConfig(**kw)


def _summary_cfg(args) -> SummaryConfig:
    if args.words is not None:
        return SummaryConfig.words(args.words)
    return SummaryConfig(ratio=args.ratio)


def _rank_cfg(args) -> RankConfig:
    return RankConfig(damping=args.damping, tolerance=args.tolerance, max_iterations=args.max_iterations)


def _write(text: str, path) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise CorpusIOError(f"cannot read {path}: {exc}") from exc


def cmd_summarize(args) -> int:
    try:
        sim = SimilarityConfig(variant=args.variant, k1=args.k1, b=args.b, delta=args.delta,
                               epsilon=args.epsilon, idf_mode=args.idf)
        rank, size = _rank_cfg(args), _summary_cfg(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    sentences = preprocess(_read(args.file), _pipeline_cfg(args))
    nodes = graph_sentences(sentences)
    if not nodes:
        raise EmptyDocumentError("no sentence has any content token")
    graph = build_graph(nodes, build_corpus_stats(nodes), sim)
    if args.dump_graph:
        dump_graph(graph, args.dump_graph)
    summary = select_top(pagerank(graph, rank), sentences, size)
    _write(summary.lines() if args.lines else summary.text + "\n", args.output)
    return EXIT_OK


def cmd_eval(args) -> int:
    cfg = EvalConfig(stemming=not args.no_stemming, stopword_removal=args.remove_stopwords,
                     multi_ref_mode=args.multi_ref)
    score = score_summary(_read(args.candidate), [_read(p) for p in args.refs], cfg)
    if args.json:
        print(json.dumps(score.as_dict(), indent=2))
        return EXIT_OK
    print(f"{'Metric':<10}{'Recall':>10}{'Precision':>11}{'F1':>9}")
    for label, name in (("ROUGE-1", "rouge1"), ("ROUGE-2", "rouge2"), ("ROUGE-SU4", "rouge_su4")):
        m = getattr(score, name)
        print(f"{label:<10}{m.recall:>10.4f}{m.precision:>11.4f}{m.f1:>9.4f}")
    print(f"Average recall: {score.metric_average:.4f}")
    return EXIT_OK


def cmd_bench(args) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    unknown = [m for m in methods + [args.reference_method] if m not in METHODS]
    if unknown or not methods:
        raise UsageError(f"unknown methods: {', '.join(unknown) or '(none given)'}")
    try:
        size, rank = _summary_cfg(args), _rank_cfg(args)
        eval_cfg = EvalConfig(stemming=not args.no_stemming, multi_ref_mode=args.multi_ref)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    corpus = load_corpus(CorpusLayout(args.docs, args.refs))
    if corpus.skipped:
        print(f"warning: {corpus.skipped} documents skipped (no reference)", file=sys.stderr)
    if not corpus.documents:
        raise EmptyDocumentError("corpus has no document with a reference")
    report = run_benchmark(corpus, methods, reference_method=args.reference_method, rank_cfg=rank,
                           sum_cfg=size, eval_cfg=eval_cfg, parallel=args.parallel,
                           workers=args.workers, bootstrap=args.bootstrap)
    _write(render_report(report, args.format), args.output)
    return EXIT_OK


COMMANDS = {"summarize": cmd_summarize, "eval": cmd_eval, "bench": cmd_bench}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CorpusIOError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (EmptyDocumentError, StatsUnavailableError, UndefinedScoreError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY


if __name__ == "__main__":
    sys.exit(main())

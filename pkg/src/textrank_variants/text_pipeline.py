"""Sentence splitting and token normalization.

Turns a raw document into ordered :class:`Sentence` objects carrying two
token views: ``raw_tokens`` (lowercased words) and ``tokens`` (after
stopword removal and Porter stemming, used for graph similarity).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field, replace
from functools import cached_property, lru_cache
from importlib import resources
from typing import Iterable, List, Optional

from nltk.stem.porter import PorterStemmer

from .errors import EmptyDocumentError

_DATA = resources.files(__package__) / "data"


def parse_wordlist(lines: Iterable[str]) -> frozenset:
    """Parse a one-entry-per-line list, skipping blanks and ``#`` comments."""
    words = set()
    for line in lines:
        entry = line.strip()
        if entry and not entry.startswith("#"):
            words.add(entry.lower())
    return frozenset(words)


def load_wordlist(path) -> frozenset:
    """Read a UTF-8 word list file (stopwords or abbreviations)."""
    with open(path, encoding="utf-8") as fh:
        return parse_wordlist(fh)


@lru_cache(maxsize=None)
def _bundled_list(name: str) -> frozenset:
    return parse_wordlist((_DATA / name).read_text(encoding="utf-8").splitlines())


def default_stopwords() -> frozenset:
    return _bundled_list("stopwords_en.txt")


def default_abbreviations() -> frozenset:
    return _bundled_list("abbreviations_en.txt")


@dataclass(frozen=True)
class RawDocument:
    id: str
    text: str


@dataclass(frozen=True)
class Sentence:
    """One sentence of a document.

    ``raw`` is the verbatim slice ``text[start:end]`` of the source document.
    ``in_graph`` is False for sentences too short to become graph nodes; they
    stay in the list so positions and compression ratios refer to the real
    document.
    """

    index: int
    raw: str
    tokens: tuple = ()
    raw_tokens: tuple = ()
    start: int = 0
    end: int = 0
    in_graph: bool = True

    @property
    def text(self) -> str:
        """``raw`` with internal whitespace runs collapsed to single spaces."""
        return " ".join(self.raw.split())

    @cached_property
    def term_counts(self) -> Counter:
        return Counter(self.tokens)

    @cached_property
    def distinct_terms(self) -> tuple:
        # first-occurrence order keeps float sums reproducible across processes
        return tuple(dict.fromkeys(self.tokens))


@dataclass(frozen=True)
class PipelineConfig:
    stopword_removal: bool = True
    stemming: bool = True
    min_sentence_tokens: int = 1
    stopwords: frozenset = field(default_factory=default_stopwords)
    abbreviations: frozenset = field(default_factory=default_abbreviations)

    def __post_init__(self):
        if self.min_sentence_tokens < 0:
            raise ValueError("min_sentence_tokens must be >= 0")


# A run of terminators, optionally followed by closing quotes/brackets,
# that is itself followed by whitespace or the end of the text.
_TERMINATOR_RE = re.compile(r"[.!?]+[\"'”’)\]]*(?=\s|$)")
_PARAGRAPH_RE = re.compile(r"\n[ \t\r\f\v]*\n")
_LEADING_PUNCT = "\"'(“‘["


def _is_abbreviation(text: str, term_start: int, abbreviations: frozenset) -> bool:
    """True if the period at ``text[term_start]`` belongs to an abbreviation."""
    word_start = term_start
    while word_start > 0 and not text[word_start - 1].isspace():
        word_start -= 1
    word = text[word_start:term_start].lstrip(_LEADING_PUNCT)
    if not word:
        return False
    if word.lower() in abbreviations:
        return True
    # single capital initial, e.g. "J. Smith"
    return len(word) == 1 and word.isupper()


_NEXT_WORD_RE = re.compile(r"\s*[\"'(“‘\[]*(\S)")


def _next_word_is_lowercase(text: str, pos: int) -> bool:
    m = _NEXT_WORD_RE.match(text, pos)
    return bool(m) and m.group(1).islower()


def _boundaries(text: str, abbreviations: frozenset) -> List[int]:
    cuts = set()
    for m in _TERMINATOR_RE.finditer(text):
        run = m.group()
        if run.startswith(".") and run.rstrip("\"'”’)]") == ".":
            if _is_abbreviation(text, m.start(), abbreviations):
                continue
            if _next_word_is_lowercase(text, m.end()):
                continue
        cuts.add(m.end())
    for m in _PARAGRAPH_RE.finditer(text):
        cuts.add(m.start())
    return sorted(cuts)


def split_sentences(text: str, abbreviations: Optional[frozenset] = None) -> List[Sentence]:
    """Split ``text`` into sentences with ``raw``, ``index`` and offsets set.

    Splits after ``.``, ``!`` or ``?`` followed by whitespace, and at blank
    lines. A single period does not split after a listed abbreviation, a
    single capital initial, or when the next word starts in lowercase.

    Raises:
        EmptyDocumentError: if ``text`` is empty or whitespace only.
    """
    if not text or not text.strip():
        raise EmptyDocumentError("document is empty")
    if abbreviations is None:
        abbreviations = default_abbreviations()

    sentences = []
    prev = 0
    for cut in _boundaries(text, abbreviations) + [len(text)]:
        chunk = text[prev:cut]
        stripped = chunk.strip()
        if stripped:
            start = prev + (len(chunk) - len(chunk.lstrip()))
            sentences.append(
                Sentence(index=len(sentences), raw=stripped, start=start, end=start + len(stripped))
            )
        prev = cut
    return sentences


_NON_WORD_RE = re.compile(r"[\W_]+")


def normalize_tokens(raw: str) -> List[str]:
    """Lowercase, turn punctuation (hyphens included) into spaces, split."""
    return _NON_WORD_RE.sub(" ", raw.lower()).split()


_STEMMER = PorterStemmer(PorterStemmer.ORIGINAL_ALGORITHM)


@lru_cache(maxsize=65536)
def porter_stem(token: str) -> str:
    """Stem a lowercase token with the original Porter (1980) algorithm."""
    return _STEMMER.stem(token, to_lowercase=False)


def remove_stopwords(tokens: Iterable[str], stopwords: Iterable[str]) -> List[str]:
    stop = stopwords if isinstance(stopwords, (set, frozenset)) else set(stopwords)
    return [t for t in tokens if t not in stop]


def analyze(raw: str, cfg: PipelineConfig):
    """Return ``(raw_tokens, tokens)`` for one sentence under ``cfg``."""
    raw_tokens = normalize_tokens(raw)
    tokens = raw_tokens
    if cfg.stopword_removal:
        tokens = remove_stopwords(tokens, cfg.stopwords)
    if cfg.stemming:
        tokens = [porter_stem(t) for t in tokens]
    return tuple(raw_tokens), tuple(tokens)


def preprocess(doc: RawDocument | str, cfg: Optional[PipelineConfig] = None) -> List[Sentence]:
    """Split a document and populate both token views of every sentence."""
    if cfg is None:
        cfg = PipelineConfig()
    text = doc.text if isinstance(doc, RawDocument) else doc
    min_tokens = max(1, cfg.min_sentence_tokens)
    out = []
    for s in split_sentences(text, cfg.abbreviations):
        raw_tokens, tokens = analyze(s.raw, cfg)
        out.append(replace(s, raw_tokens=raw_tokens, tokens=tokens, in_graph=len(tokens) >= min_tokens))
    return out


def graph_sentences(sentences: Iterable[Sentence]) -> List[Sentence]:
    return [s for s in sentences if s.in_graph]

import random

import pytest

from textrank_variants.text_pipeline import Sentence

ACCEPTANCE_RESULTS = {}


def make_sentence(tokens, index=0, raw=None):
    tokens = tuple(tokens)
    return Sentence(index=index, raw=raw if raw is not None else " ".join(tokens),
                    tokens=tokens, raw_tokens=tokens)


def random_collection(rng, max_sentences=8, max_vocab=6, max_len=7):
    vocab = [f"w{k}" for k in range(rng.randint(1, max_vocab))]
    n = rng.randint(1, max_sentences)
    return [make_sentence([rng.choice(vocab) for _ in range(rng.randint(1, max_len))], i)
            for i in range(n)]


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion."""

    def record(key, passed, detail="", status=None):
        ACCEPTANCE_RESULTS[key] = (status or ("PASS" if passed else "FAIL"), detail)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        status, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{status:5} {key}  {detail}")


_GENERAL = ("report officials said week market city people government year company "
            "plan group water power group police court bank school price state").split()


def synthetic_document(rng, n_sentences=30, words=(8, 22)):
    """A document whose sentences mix a private topic vocabulary with common words."""
    topic = [f"topic{rng.randint(0, 10**6)}" for _ in range(12)]
    sentences = []
    for _ in range(n_sentences):
        length = rng.randint(*words)
        body = [rng.choice(topic) if rng.random() < 0.4 else rng.choice(_GENERAL) for _ in range(length)]
        sentences.append(" ".join(body).capitalize() + ".")
    reference = " ".join(rng.choice(topic + _GENERAL) for _ in range(60)) + "."
    return " ".join(sentences), reference


def write_synthetic_corpus(root, n_docs, n_sentences=30, seed=0, refs_per_doc=1):
    rng = random.Random(seed)
    docs, refs = root / "docs", root / "refs"
    docs.mkdir(parents=True, exist_ok=True)
    refs.mkdir(parents=True, exist_ok=True)
    for k in range(n_docs):
        text, ref = synthetic_document(rng, n_sentences)
        (docs / f"d{k:03d}.txt").write_text(text, encoding="utf-8")
        for r in range(1, refs_per_doc + 1):
            (refs / f"d{k:03d}.ref{r}.txt").write_text(ref if r == 1 else synthetic_document(rng, 3)[0],
                                                         encoding="utf-8")
    return docs, refs

import numpy as np
import pytest

from satira import Label, LabeledCorpus, make_document


def synthetic_corpus(
    n_per_class: int,
    rng: np.random.Generator,
    vocab_fake=None,
    vocab_real=None,
    doc_len=(15, 30),
) -> LabeledCorpus:
    """Separable corpus: the two classes draw from disjoint vocabularies."""
    if vocab_fake is None:
        vocab_fake = [f"fake{i:03d}" for i in range(30)]
    if vocab_real is None:
        vocab_real = [f"real{i:03d}" for i in range(30)]
    docs = []
    for prefix, vocab, label in (
        ("f", vocab_fake, Label.FAKE),
        ("r", vocab_real, Label.REAL),
    ):
        for i in range(n_per_class):
            n_tok = int(rng.integers(doc_len[0], doc_len[1] + 1))
            tokens = rng.choice(vocab, size=n_tok)
            docs.append(make_document(f"{prefix}{i:04d}", " ".join(tokens), label))
    return LabeledCorpus(tuple(docs))


@pytest.fixture
def separable_corpus() -> LabeledCorpus:
    return synthetic_corpus(200, np.random.default_rng(7))


def write_embedding_file(path, tokens, dim=300, seed=0, scale=0.3):
    """Synthetic pretrained-vector file covering the given tokens."""
    rng = np.random.default_rng(seed)
    lines = [f"{len(tokens)} {dim}"]
    for token in tokens:
        values = rng.normal(0.0, scale, size=dim)
        lines.append(token + " " + " ".join(f"{v:.6f}" for v in values))
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    return path


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    rows = []
    for outcome in ("passed", "failed", "skipped"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance" not in nodeid:
                continue
            if outcome != "skipped" and getattr(report, "when", "call") != "call":
                continue
            rows.append((nodeid, outcome))
    if not rows:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    tag = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}
    for nodeid, outcome in sorted(set(rows)):
        terminalreporter.write_line(f"{tag[outcome]}  {nodeid.split('::')[-1]}")

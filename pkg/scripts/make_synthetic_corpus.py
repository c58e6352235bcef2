#!/usr/bin/env python3
"""Generate a synthetic separable corpus plus matching embedding vectors.

Produces everything needed to exercise the full pipeline offline:
corpus.jsonl (disjoint per-class vocabularies) and vectors.txt in the
word-vector text format. Example:

    python scripts/make_synthetic_corpus.py --out demo --n-per-class 200
    satira train --corpus demo/corpus.jsonl --model nb --out demo/run
    satira evaluate --corpus demo/corpus.jsonl --model-dir demo/run
"""

import argparse
from pathlib import Path

import numpy as np

from satira import Label, LabeledCorpus, make_document, save_corpus


def build_corpus(n_per_class, vocab_size, doc_len, rng):
    docs = []
    for prefix, label in (("f", Label.FAKE), ("r", Label.REAL)):
        vocab = [f"{prefix}tok{i:03d}" for i in range(vocab_size)]
        for i in range(n_per_class):
            n_tok = int(rng.integers(doc_len // 2, doc_len + 1))
            tokens = rng.choice(vocab, size=n_tok)
            docs.append(make_document(f"{prefix}{i:05d}", " ".join(tokens), label))
    return LabeledCorpus(tuple(docs))


def write_vectors(path, tokens, dim, rng):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{len(tokens)} {dim}\n")
        for token in tokens:
            values = rng.normal(0.0, 0.3, size=dim)
            fh.write(token + " " + " ".join(f"{v:.6f}" for v in values) + "\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="demo", help="output directory")
    parser.add_argument("--n-per-class", type=int, default=200)
    parser.add_argument("--vocab-size", type=int, default=30)
    parser.add_argument("--doc-len", type=int, default=30)
    parser.add_argument("--dim", type=int, default=300)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    corpus = build_corpus(args.n_per_class, args.vocab_size, args.doc_len, rng)
    save_corpus(corpus, out / "corpus.jsonl")
    tokens = sorted({t for doc in corpus for t in doc.tokens})
    write_vectors(out / "vectors.txt", tokens, args.dim, rng)
    print(f"wrote {len(corpus)} documents and {len(tokens)} vectors under {out}/")


if __name__ == "__main__":
    main()

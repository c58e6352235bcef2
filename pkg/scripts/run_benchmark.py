#!/usr/bin/env python3
"""Train and score all three classifiers on one corpus; print a summary table.

    python scripts/run_benchmark.py --corpus demo/corpus.jsonl \
        --embeddings demo/vectors.txt --cnn-epochs 3
"""

import argparse
import time

import numpy as np

from satira import Label, SplitConfig, VectorizerConfig, Weighting, evaluate, load_corpus, split
from satira.models import (
    BoostConfig,
    TrainConfig,
    build_token_index,
    cnn_predict,
    cnn_train,
    encode_corpus,
    gbt_fit,
    gbt_predict,
    init_convnet,
    load_embeddings,
    nb_fit,
    nb_predict,
)
from satira.vectorize import fit as fit_vectorizer, transform


def binary(docs):
    return np.array([1 if d.label is Label.FAKE else 0 for d in docs])


def as_labels(values):
    return [Label.FAKE if v == 1 else Label.REAL for v in values]


def report_row(name, report, seconds):
    print(
        f"{name:<28} acc={100 * report.accuracy:6.2f}  "
        f"P={100 * report.macro_precision:6.2f}  R={100 * report.macro_recall:6.2f}  "
        f"F1={100 * report.macro_f1:6.2f}  ({seconds:.1f}s)"
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--corpus", required=True)
    parser.add_argument("--embeddings", help="word-vector file; omit to skip the CNN")
    parser.add_argument("--embed-dim", type=int, default=300)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--test-fraction", type=float, default=0.2)
    parser.add_argument("--cnn-epochs", type=int, default=10)
    parser.add_argument("--max-seq-len", type=int, default=400)
    args = parser.parse_args()

    corpus = load_corpus(args.corpus).labeled_only()
    train_set, test_set = split(
        corpus, SplitConfig(test_fraction=args.test_fraction, seed=args.seed)
    )
    y_train = binary(train_set.documents)
    gold = [d.label for d in test_set.documents]
    print(
        f"{len(train_set)} train / {len(test_set)} test documents "
        f"({corpus.class_counts[Label.FAKE]} fake, {corpus.class_counts[Label.REAL]} real)"
    )

    for weighting in (Weighting.COUNT, Weighting.TFIDF):
        start = time.monotonic()
        cfg = VectorizerConfig(weighting=weighting)
        vocab = fit_vectorizer(train_set.documents, cfg)
        model = nb_fit(transform(train_set.documents, vocab, cfg), y_train)
        labels, _ = nb_predict(model, transform(test_set.documents, vocab, cfg))
        report = evaluate(as_labels(labels), gold)
        report_row(f"naive bayes ({weighting.value})", report, time.monotonic() - start)

    start = time.monotonic()
    cfg = VectorizerConfig()
    vocab = fit_vectorizer(train_set.documents, cfg)
    gbt = gbt_fit(transform(train_set.documents, vocab, cfg).toarray(), y_train, BoostConfig())
    _, labels = gbt_predict(gbt, transform(test_set.documents, vocab, cfg).toarray())
    report_row("boosted trees (count)", evaluate(as_labels(labels), gold),
               time.monotonic() - start)

    if args.embeddings:
        start = time.monotonic()
        index = build_token_index(train_set.documents)
        matrix, coverage = load_embeddings(args.embeddings, index, args.embed_dim)
        print(f"embedding coverage: {100 * coverage:.1f}%")
        model = init_convnet(matrix, max_sequence_length=args.max_seq_len, seed=args.seed)
        trained, _ = cnn_train(
            model,
            encode_corpus(train_set.documents, index, args.max_seq_len),
            y_train.astype(float),
            TrainConfig(epochs=args.cnn_epochs, seed=args.seed),
        )
        _, labels = cnn_predict(
            trained, encode_corpus(test_set.documents, index, args.max_seq_len)
        )
        report_row("conv net (frozen vectors)", evaluate(as_labels(labels), gold),
                   time.monotonic() - start)


if __name__ == "__main__":
    main()

"""Scoring against gold labels and most-informative-feature extraction.

Macro metrics are the unweighted means of the two per-class values. Cells
that would divide by zero yield 0 and set a flag instead of NaN so reports
stay aggregatable.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .corpus_io import Label
from .errors import DataError
from .models.naive_bayes import NaiveBayesModel
from .vectorize import Vocabulary

_CLASSES = (Label.FAKE, Label.REAL)


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float
    zero_division: bool = False


@dataclass(frozen=True)
class EvalReport:
    accuracy: float
    per_class: dict[Label, ClassMetrics]
    macro_precision: float
    macro_recall: float
    macro_f1: float
    confusion: np.ndarray  # rows gold, cols predicted, order [FAKE, REAL]
    n: int


def evaluate(pred: Sequence[Label], gold: Sequence[Label]) -> EvalReport:
    """Accuracy, per-class and macro P/R/F1, and the confusion matrix."""
    if len(pred) != len(gold):
        raise DataError(f"prediction length {len(pred)} != gold length {len(gold)}")
    if len(gold) == 0:
        raise DataError("cannot evaluate zero predictions")

    confusion = np.zeros((2, 2), dtype=np.int64)
    for p, g in zip(pred, gold):
        confusion[_CLASSES.index(g), _CLASSES.index(p)] += 1

    n = len(gold)
    accuracy = float(np.trace(confusion)) / n
    per_class: dict[Label, ClassMetrics] = {}
    for i, label in enumerate(_CLASSES):
        tp = confusion[i, i]
        predicted = confusion[:, i].sum()
        actual = confusion[i, :].sum()
        zero = predicted == 0 or actual == 0
        precision = float(tp / predicted) if predicted else 0.0
        recall = float(tp / actual) if actual else 0.0
        if precision + recall > 0:
            f1 = 2.0 * precision * recall / (precision + recall)
        else:
            f1 = 0.0
            zero = True
        per_class[label] = ClassMetrics(precision, recall, f1, bool(zero))

    macro = lambda attr: sum(getattr(per_class[c], attr) for c in _CLASSES) / 2.0
    return EvalReport(
        accuracy=accuracy,
        per_class=per_class,
        macro_precision=macro("precision"),
        macro_recall=macro("recall"),
        macro_f1=macro("f1"),
        confusion=confusion,
        n=n,
    )


@dataclass(frozen=True)
class FeatureRanking:
    label: Label
    entries: tuple[tuple[str, float], ...]

    def __post_init__(self):
        scores = [s for _, s in self.entries]
        if any(s2 > s1 for s1, s2 in zip(scores, scores[1:])):
            raise ValueError("ranking scores must be non-increasing")


def top_informative_features(
    model: NaiveBayesModel,
    vocab: Vocabulary,
    k: int,
    score: str = "log_ratio",
) -> tuple[FeatureRanking, FeatureRanking]:
    """Top-k most-fake and most-real features of a Naive Bayes model.

    The default "log_ratio" score ranks by the between-class difference of
    log likelihoods, which surfaces genuinely discriminative features; the
    "log_prob" score is the raw per-class log likelihood (dominated by
    overall frequency but available for the literal reading). Ties break
    lexicographically.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if len(vocab) != model.n_features:
        raise DataError(
            f"vocabulary size {len(vocab)} != model features {model.n_features}"
        )
    if score not in ("log_ratio", "log_prob"):
        raise ValueError(f"score must be 'log_ratio' or 'log_prob', got {score!r}")
    if k > len(vocab):
        warnings.warn(
            f"k={k} exceeds vocabulary size {len(vocab)}; clamping", stacklevel=2
        )
        k = len(vocab)

    names = vocab.feature_names()
    log_fake = model.feature_log_prob[0]
    log_real = model.feature_log_prob[1]

    def ranking(label: Label, scores: np.ndarray) -> FeatureRanking:
        order = sorted(range(len(names)), key=lambda j: (-scores[j], names[j]))[:k]
        return FeatureRanking(
            label, tuple((names[j], float(scores[j])) for j in order)
        )

    if score == "log_ratio":
        fake_scores = log_fake - log_real
        real_scores = log_real - log_fake
    else:
        fake_scores = log_fake
        real_scores = log_real
    return ranking(Label.FAKE, fake_scores), ranking(Label.REAL, real_scores)


def ranking_to_tsv(ranking: FeatureRanking) -> str:
    """``rank<TAB>feature<TAB>score`` lines, best first."""
    lines = [
        f"{rank}\t{feature}\t{score!r}"
        for rank, (feature, score) in enumerate(ranking.entries, start=1)
    ]
    return "".join(line + "\n" for line in lines)


def report_to_text(report: EvalReport) -> str:
    """Flat key-value block, one metric per line."""
    lines = [
        f"n {report.n}",
        f"accuracy {report.accuracy!r}",
    ]
    for label in _CLASSES:
        m = report.per_class[label]
        name = label.value
        lines.append(f"precision_{name} {m.precision!r}")
        lines.append(f"recall_{name} {m.recall!r}")
        lines.append(f"f1_{name} {m.f1!r}")
        if m.zero_division:
            lines.append(f"zero_division_{name} true")
    lines.append(f"macro_precision {report.macro_precision!r}")
    lines.append(f"macro_recall {report.macro_recall!r}")
    lines.append(f"macro_f1 {report.macro_f1!r}")
    lines.append(
        "confusion_gold_fake "
        f"{report.confusion[0, 0]} {report.confusion[0, 1]}"
    )
    lines.append(
        "confusion_gold_real "
        f"{report.confusion[1, 0]} {report.confusion[1, 1]}"
    )
    return "".join(line + "\n" for line in lines)


def report_to_json(report: EvalReport) -> str:
    payload = {
        "n": report.n,
        "accuracy": report.accuracy,
        "per_class": {
            label.value: {
                "precision": m.precision,
                "recall": m.recall,
                "f1": m.f1,
                "zero_division": m.zero_division,
            }
            for label, m in report.per_class.items()
        },
        "macro_precision": report.macro_precision,
        "macro_recall": report.macro_recall,
        "macro_f1": report.macro_f1,
        "confusion": report.confusion.tolist(),
    }
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"

"""Gradient-boosted regression trees with the binary logistic objective.

Newton boosting: each round fits a depth-limited tree to the current
gradients g_i = p_i - y_i and hessians h_i = p_i (1 - p_i). Splits are
found by exact search maximizing

    gain = 1/2 * (G_L^2 / (H_L + lambda) + G_R^2 / (H_R + lambda)
                  - G^2 / (H + lambda))

and each leaf takes the Newton step w = -G_leaf / (H_leaf + lambda).
The final prediction is sigmoid(base_score + learning_rate * sum of tree
outputs). Split ties break toward the lowest feature index, then the
lowest threshold, so results do not depend on evaluation order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..errors import DataError
from ..fileio import split_comment_block

GBT_FORMAT = "satira-gbt v1"


def sigmoid(x: np.ndarray) -> np.ndarray:
    out = np.empty_like(x, dtype=np.float64)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    return out


def logistic_loss(margins: np.ndarray, y: np.ndarray) -> float:
    """Mean binary cross-entropy computed stably from raw margins."""
    return float(np.mean(np.logaddexp(0.0, margins) - y * margins))


@dataclass(frozen=True)
class TreeNode:
    is_leaf: bool
    weight: float = 0.0
    feature: int = -1
    threshold: float = 0.0
    left: int = -1
    right: int = -1


@dataclass(frozen=True)
class RegressionTree:
    nodes: tuple[TreeNode, ...]

    def predict(self, X: np.ndarray) -> np.ndarray:
        out = np.empty(len(X), dtype=np.float64)
        stack = [(0, np.arange(len(X)))]
        while stack:
            node_id, rows = stack.pop()
            node = self.nodes[node_id]
            if node.is_leaf:
                out[rows] = node.weight
                continue
            goes_left = X[rows, node.feature] < node.threshold
            stack.append((node.left, rows[goes_left]))
            stack.append((node.right, rows[~goes_left]))
        return out

    def depth(self) -> int:
        def node_depth(node_id: int) -> int:
            node = self.nodes[node_id]
            if node.is_leaf:
                return 0
            return 1 + max(node_depth(node.left), node_depth(node.right))

        return node_depth(0)


@dataclass(frozen=True)
class BoostConfig:
    n_rounds: int = 100
    learning_rate: float = 0.1
    max_depth: int = 3
    reg_lambda: float = 1.0

    def __post_init__(self):
        if self.n_rounds < 1:
            raise ValueError(f"n_rounds must be >= 1, got {self.n_rounds}")
        if self.max_depth < 0:
            raise ValueError(f"max_depth must be >= 0, got {self.max_depth}")


@dataclass(frozen=True)
class BoostedTreesModel:
    trees: tuple[RegressionTree, ...]
    base_score: float
    config: BoostConfig
    train_loss: tuple[float, ...] = field(default=())
    n_features: int | None = None  # None when hand-assembled for testing

    @property
    def learning_rate(self) -> float:
        return self.config.learning_rate


def _best_split(X, g, h, rows, reg_lambda):
    """Exact split search over all features/thresholds for one node.

    Returns (gain, feature, threshold) or None when no split has positive
    gain. Thresholds are midpoints between consecutive distinct values.
    """
    G = g[rows].sum()
    H = h[rows].sum()
    parent = G * G / (H + reg_lambda)
    best = None
    for j in range(X.shape[1]):
        xj = X[rows, j]
        order = np.argsort(xj, kind="stable")
        xs = xj[order]
        gs = np.cumsum(g[rows][order])
        hs = np.cumsum(h[rows][order])
        # split after position i: left = sorted[:i+1]
        cut = np.nonzero(xs[:-1] < xs[1:])[0]
        if len(cut) == 0:
            continue
        G_L = gs[cut]
        H_L = hs[cut]
        G_R = G - G_L
        H_R = H - H_L
        gains = 0.5 * (
            G_L * G_L / (H_L + reg_lambda)
            + G_R * G_R / (H_R + reg_lambda)
            - parent
        )
        i = int(np.argmax(gains))  # first max: lowest threshold wins ties
        if gains[i] > 0 and (best is None or gains[i] > best[0]):
            threshold = 0.5 * (xs[cut[i]] + xs[cut[i] + 1])
            best = (float(gains[i]), j, float(threshold))
    return best


def _grow_tree(X, g, h, cfg: BoostConfig) -> RegressionTree:
    nodes: list[TreeNode] = []

    def build(rows: np.ndarray, depth: int) -> int:
        node_id = len(nodes)
        nodes.append(TreeNode(is_leaf=True))  # placeholder
        G = g[rows].sum()
        H = h[rows].sum()
        split = None
        if depth < cfg.max_depth and len(rows) >= 2:
            split = _best_split(X, g, h, rows, cfg.reg_lambda)
        if split is None:
            nodes[node_id] = TreeNode(is_leaf=True, weight=float(-G / (H + cfg.reg_lambda)))
            return node_id
        _, feature, threshold = split
        goes_left = X[rows, feature] < threshold
        left = build(rows[goes_left], depth + 1)
        right = build(rows[~goes_left], depth + 1)
        nodes[node_id] = TreeNode(
            is_leaf=False, feature=feature, threshold=threshold, left=left, right=right
        )
        return node_id

    build(np.arange(len(g)), 0)
    return RegressionTree(tuple(nodes))


def gbt_fit(X, y, config: BoostConfig = BoostConfig()) -> BoostedTreesModel:
    """Boost ``n_rounds`` trees on the logistic loss.

    ``base_score`` is the log-odds of the base rate (clipped so degenerate
    single-class labels stay finite). The per-round mean training loss is
    recorded on the returned model.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if X.ndim != 2:
        raise DataError("X must be a 2-D feature matrix")
    if len(y) != len(X):
        raise DataError(f"labels length {len(y)} != matrix rows {len(X)}")
    if not set(np.unique(y)) <= {0.0, 1.0}:
        raise DataError("labels must be binary 0/1 (1 = fake)")
    if not np.isfinite(X).all():
        raise DataError("features must be finite")

    p_bar = float(np.clip(y.mean(), 1e-6, 1.0 - 1e-6))
    base_score = float(np.log(p_bar / (1.0 - p_bar)))

    margins = np.full(len(y), base_score, dtype=np.float64)
    tree_sum = np.zeros(len(y), dtype=np.float64)
    trees: list[RegressionTree] = []
    losses: list[float] = []
    for _ in range(config.n_rounds):
        p = sigmoid(margins)
        g = p - y
        h = p * (1.0 - p)
        tree = _grow_tree(X, g, h, config)
        trees.append(tree)
        tree_sum += tree.predict(X)
        margins = base_score + config.learning_rate * tree_sum
        losses.append(logistic_loss(margins, y))
    return BoostedTreesModel(
        tuple(trees), base_score, config, tuple(losses), n_features=X.shape[1]
    )


def gbt_margins(model: BoostedTreesModel, X: np.ndarray) -> np.ndarray:
    X = np.asarray(X, dtype=np.float64)
    total = np.zeros(len(X), dtype=np.float64)
    for tree in model.trees:
        total += tree.predict(X)
    return model.base_score + model.learning_rate * total


def gbt_predict(model: BoostedTreesModel, X) -> tuple[np.ndarray, np.ndarray]:
    """Probabilities of the positive (fake) class and 0/1 labels at 0.5."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2:
        raise DataError("X must be a 2-D feature matrix")
    if model.n_features is not None and X.shape[1] != model.n_features:
        raise DataError(
            f"matrix has {X.shape[1]} features, model expects {model.n_features}"
        )
    proba = sigmoid(gbt_margins(model, X))
    labels = (proba >= 0.5).astype(np.int64)
    return proba, labels


def gbt_to_text(model: BoostedTreesModel) -> str:
    cfg = model.config
    lines = [
        f"# {GBT_FORMAT}",
        f"# n_rounds={cfg.n_rounds} learning_rate={cfg.learning_rate!r} "
        f"max_depth={cfg.max_depth} reg_lambda={cfg.reg_lambda!r} "
        f"base_score={model.base_score!r} n_features={model.n_features}",
    ]
    for i, tree in enumerate(model.trees):
        lines.append(f"tree {i} {len(tree.nodes)}")
        for node_id, node in enumerate(tree.nodes):
            if node.is_leaf:
                lines.append(f"{node_id}\tleaf\t{node.weight!r}")
            else:
                lines.append(
                    f"{node_id}\tsplit\t{node.feature}\t{node.threshold!r}"
                    f"\t{node.left}\t{node.right}"
                )
    return "".join(line + "\n" for line in lines)


def gbt_from_text(text: str) -> BoostedTreesModel:
    meta, body = split_comment_block(text, GBT_FORMAT)
    config = BoostConfig(
        n_rounds=int(meta["n_rounds"]),
        learning_rate=float(meta["learning_rate"]),
        max_depth=int(meta["max_depth"]),
        reg_lambda=float(meta["reg_lambda"]),
    )
    trees: list[RegressionTree] = []
    i = 0
    while i < len(body):
        line = body[i]
        if not line:
            i += 1
            continue
        if not line.startswith("tree "):
            raise DataError(f"model line {i + 1}: expected tree header, got {line!r}")
        n_nodes = int(line.split(" ")[2])
        nodes: list[TreeNode] = []
        for offset in range(1, n_nodes + 1):
            parts = body[i + offset].split("\t")
            if parts[1] == "leaf":
                nodes.append(TreeNode(is_leaf=True, weight=float(parts[2])))
            else:
                nodes.append(
                    TreeNode(
                        is_leaf=False,
                        feature=int(parts[2]),
                        threshold=float(parts[3]),
                        left=int(parts[4]),
                        right=int(parts[5]),
                    )
                )
        trees.append(RegressionTree(tuple(nodes)))
        i += n_nodes + 1
    stored = meta.get("n_features", "None")
    n_features = None if stored == "None" else int(stored)
    return BoostedTreesModel(
        tuple(trees), float(meta["base_score"]), config, n_features=n_features
    )


def save_gbt(model: BoostedTreesModel, path) -> None:
    Path(path).write_text(gbt_to_text(model), encoding="utf-8")


def load_gbt(path) -> BoostedTreesModel:
    return gbt_from_text(Path(path).read_text(encoding="utf-8"))

"""1-D convolutional text classifier over frozen pretrained embeddings.

Architecture: embedding lookup (row 0 = padding/OOV, all zero) -> valid
1-D convolution -> ReLU -> per-filter global max pool -> single dense
sigmoid unit. Trained with mini-batch Adam on binary cross-entropy; the
embedding matrix is never updated. Everything runs in double precision so
finite-difference gradient checks are meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from ..errors import DataError
from ..fileio import split_comment_block
from .boosted_trees import sigmoid

CNN_FORMAT = "satira-cnn v1"

TRAINABLE = ("conv_weights", "conv_bias", "dense_weights", "dense_bias")


@dataclass(frozen=True)
class AdamConfig:
    lr: float = 1e-3
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8


@dataclass(frozen=True)
class TrainConfig:
    epochs: int = 10
    batch_size: int = 10
    adam: AdamConfig = AdamConfig()
    seed: int = 0

    def __post_init__(self):
        if self.epochs < 0:
            raise ValueError(f"epochs must be >= 0, got {self.epochs}")
        if self.batch_size < 1:
            raise ValueError(f"batch_size must be >= 1, got {self.batch_size}")


@dataclass(frozen=True)
class ConvNetModel:
    embedding: np.ndarray  # (V, d) frozen
    conv_weights: np.ndarray  # (n_filters, kernel_size, d)
    conv_bias: np.ndarray  # (n_filters,)
    dense_weights: np.ndarray  # (n_filters,)
    dense_bias: float
    max_sequence_length: int

    @property
    def vocab_size(self) -> int:
        return self.embedding.shape[0]

    @property
    def n_filters(self) -> int:
        return self.conv_weights.shape[0]

    @property
    def kernel_size(self) -> int:
        return self.conv_weights.shape[1]


def init_convnet(
    embedding: np.ndarray,
    n_filters: int = 126,
    kernel_size: int = 5,
    max_sequence_length: int = 400,
    seed: int = 0,
) -> ConvNetModel:
    """Glorot-uniform conv/dense weights, zero biases, frozen embeddings."""
    embedding = np.asarray(embedding, dtype=np.float64)
    if embedding.ndim != 2:
        raise ValueError("embedding must be a 2-D matrix")
    if np.any(embedding[0] != 0.0):
        raise ValueError("embedding row 0 is reserved for padding/OOV and must be zero")
    if max_sequence_length < kernel_size:
        raise ValueError("max_sequence_length must be >= kernel_size")
    d = embedding.shape[1]
    rng = np.random.default_rng(seed)
    conv_limit = np.sqrt(6.0 / (kernel_size * d + n_filters))
    dense_limit = np.sqrt(6.0 / (n_filters + 1))
    return ConvNetModel(
        embedding=embedding,
        conv_weights=rng.uniform(-conv_limit, conv_limit, size=(n_filters, kernel_size, d)),
        conv_bias=np.zeros(n_filters, dtype=np.float64),
        dense_weights=rng.uniform(-dense_limit, dense_limit, size=n_filters),
        dense_bias=0.0,
        max_sequence_length=max_sequence_length,
    )


def _check_ids(model: ConvNetModel, ids: np.ndarray) -> np.ndarray:
    ids = np.asarray(ids, dtype=np.int64)
    if ids.ndim == 1:
        ids = ids[None, :]
    if ids.shape[1] != model.max_sequence_length:
        raise DataError(
            f"sequences must be padded to length {model.max_sequence_length}, "
            f"got {ids.shape[1]}"
        )
    if ids.min() < 0 or ids.max() >= model.vocab_size:
        raise DataError(
            f"token ids must lie in [0, {model.vocab_size}), "
            f"got range [{ids.min()}, {ids.max()}]"
        )
    return ids


def _forward_batch(model: ConvNetModel, ids: np.ndarray):
    """Logits plus the caches backprop needs.

    windows: (B, T, K*d) im2col view of the embedded batch, T = L - K + 1.
    """
    B, L = ids.shape
    K = model.kernel_size
    F = model.n_filters
    d = model.embedding.shape[1]
    T = L - K + 1
    X = model.embedding[ids]  # (B, L, d)
    windows = np.empty((B, T, K * d), dtype=np.float64)
    for j in range(K):
        windows[:, :, j * d : (j + 1) * d] = X[:, j : j + T, :]
    w_flat = model.conv_weights.reshape(F, K * d)
    z = windows @ w_flat.T + model.conv_bias  # (B, T, F)
    activations = np.maximum(z, 0.0)
    arg_top = np.argmax(activations, axis=1)  # (B, F) first max wins
    rows = np.arange(B)[:, None]
    cols = np.arange(F)[None, :]
    pooled = activations[rows, arg_top, cols]  # (B, F)
    z_top = z[rows, arg_top, cols]
    logits = pooled @ model.dense_weights + model.dense_bias
    cache = (windows, z_top, pooled, arg_top)
    return logits, cache


def cnn_forward(model: ConvNetModel, token_ids) -> float:
    """Probability of the positive (fake) class for one padded sequence."""
    ids = _check_ids(model, token_ids)
    logits, _ = _forward_batch(model, ids)
    return float(sigmoid(logits)[0])


def bce_loss(logits: np.ndarray, y: np.ndarray) -> float:
    """Mean binary cross-entropy, evaluated stably from logits."""
    return float(np.mean(np.logaddexp(0.0, logits) - y * logits))


def cnn_gradients(model: ConvNetModel, ids: np.ndarray, y: np.ndarray):
    """Analytic mean-BCE gradients for every trainable parameter."""
    ids = _check_ids(model, ids)
    y = np.asarray(y, dtype=np.float64).reshape(-1)
    logits, (windows, z_top, pooled, arg_top) = _forward_batch(model, ids)
    B, F = pooled.shape
    K = model.kernel_size
    d = model.embedding.shape[1]

    d_logit = (sigmoid(logits) - y) / B  # (B,)
    d_dense_w = pooled.T @ d_logit
    d_dense_b = float(d_logit.sum())

    # max pool routes each filter's gradient to its winning window; the
    # ReLU gate kills it when that window's pre-activation is <= 0
    d_pooled = d_logit[:, None] * model.dense_weights[None, :]  # (B, F)
    gate = (z_top > 0.0).astype(np.float64)
    d_z_top = d_pooled * gate  # (B, F)

    rows = np.arange(B)[:, None]
    win_top = windows[rows, arg_top, :]  # (B, F, K*d)
    d_conv_w = np.einsum("bf,bfk->fk", d_z_top, win_top).reshape(F, K, d)
    d_conv_b = d_z_top.sum(axis=0)

    loss = bce_loss(logits, y)
    grads = {
        "conv_weights": d_conv_w,
        "conv_bias": d_conv_b,
        "dense_weights": d_dense_w,
        "dense_bias": d_dense_b,
    }
    return loss, grads


def grad_check(model: ConvNetModel, token_ids, y, h: float = 1e-5) -> float:
    """Max relative error of analytic vs central-difference gradients."""
    ids = _check_ids(model, token_ids)
    y = np.asarray(y, dtype=np.float64).reshape(-1)
    _, grads = cnn_gradients(model, ids, y)

    def loss_with(name: str, flat: np.ndarray) -> float:
        shape = np.shape(getattr(model, name))
        value = flat.reshape(shape) if shape else float(flat[0])
        logits, _ = _forward_batch(replace(model, **{name: value}), ids)
        return bce_loss(logits, y)

    worst = 0.0
    for name in TRAINABLE:
        base = np.atleast_1d(np.asarray(getattr(model, name), dtype=np.float64)).reshape(-1)
        analytic = np.atleast_1d(np.asarray(grads[name], dtype=np.float64)).reshape(-1)
        numeric = np.empty_like(base)
        for i in range(base.size):
            bumped = base.copy()
            bumped[i] = base[i] + h
            plus = loss_with(name, bumped)
            bumped[i] = base[i] - h
            minus = loss_with(name, bumped)
            numeric[i] = (plus - minus) / (2.0 * h)
        err = np.abs(analytic - numeric)
        scale = np.maximum(np.maximum(np.abs(analytic), np.abs(numeric)), 1e-6)
        worst = max(worst, float((err / scale).max()))
    return worst


def _adam_step(params, grads, state, cfg: AdamConfig):
    state["t"] += 1
    t = state["t"]
    for name in TRAINABLE:
        g = np.asarray(grads[name], dtype=np.float64)
        state["m"][name] = cfg.beta1 * state["m"][name] + (1.0 - cfg.beta1) * g
        state["v"][name] = cfg.beta2 * state["v"][name] + (1.0 - cfg.beta2) * g * g
        m_hat = state["m"][name] / (1.0 - cfg.beta1**t)
        v_hat = state["v"][name] / (1.0 - cfg.beta2**t)
        update = cfg.lr * m_hat / (np.sqrt(v_hat) + cfg.eps)
        if np.shape(params[name]):
            params[name] = params[name] - update
        else:
            params[name] = float(params[name] - update)
    return params


def cnn_train(
    model: ConvNetModel, ids, y, cfg: TrainConfig = TrainConfig()
) -> tuple[ConvNetModel, list[float]]:
    """Mini-batch Adam on BCE; embeddings stay frozen.

    Returns a trained copy of the model (the input is untouched) plus the
    mean training loss per epoch. Deterministic for a fixed seed: the
    shuffle stream is seeded per call.
    """
    ids = _check_ids(model, ids)
    y = np.asarray(y, dtype=np.float64).reshape(-1)
    if len(y) != len(ids):
        raise DataError(f"labels length {len(y)} != sequences {len(ids)}")
    uniq = {float(v) for v in np.unique(y)}
    if not uniq <= {0.0, 1.0}:
        raise DataError("labels must be binary 0/1 (1 = fake)")
    if cfg.epochs > 0 and uniq != {0.0, 1.0}:
        raise DataError("training needs at least one example of each class")

    params = {
        "conv_weights": model.conv_weights.copy(),
        "conv_bias": model.conv_bias.copy(),
        "dense_weights": model.dense_weights.copy(),
        "dense_bias": float(model.dense_bias),
    }
    state = {
        "t": 0,
        "m": {k: np.zeros_like(np.asarray(v, dtype=np.float64)) for k, v in params.items()},
        "v": {k: np.zeros_like(np.asarray(v, dtype=np.float64)) for k, v in params.items()},
    }
    current = replace(model, **params)
    rng = np.random.default_rng(cfg.seed)
    history: list[float] = []
    n = len(y)
    for epoch in range(cfg.epochs):
        perm = rng.permutation(n)
        total = 0.0
        for start in range(0, n, cfg.batch_size):
            batch = perm[start : start + cfg.batch_size]
            loss, grads = cnn_gradients(current, ids[batch], y[batch])
            if np.isnan(loss):
                raise ArithmeticError(
                    f"nan training loss at epoch {epoch}, batch {start // cfg.batch_size}"
                )
            total += loss * len(batch)
            params = _adam_step(params, grads, state, cfg.adam)
            current = replace(current, **params)
        history.append(total / n)
    return current, history


def cnn_predict(model: ConvNetModel, ids) -> tuple[np.ndarray, np.ndarray]:
    """Batch probabilities and 0/1 labels at the 0.5 threshold."""
    ids = _check_ids(model, ids)
    logits, _ = _forward_batch(model, ids)
    proba = sigmoid(logits)
    return proba, (proba >= 0.5).astype(np.int64)


def cnn_to_text(model: ConvNetModel) -> str:
    def matrix_lines(name: str, arr: np.ndarray) -> list[str]:
        arr2 = np.atleast_2d(np.asarray(arr, dtype=np.float64).reshape(arr.shape[0], -1))
        lines = [f"{name} {' '.join(str(s) for s in arr.shape)}"]
        lines.extend(" ".join(repr(float(v)) for v in row) for row in arr2)
        return lines

    lines = [
        f"# {CNN_FORMAT}",
        f"# vocab={model.vocab_size} dim={model.embedding.shape[1]} "
        f"filters={model.n_filters} kernel={model.kernel_size} "
        f"max_len={model.max_sequence_length}",
    ]
    lines.extend(matrix_lines("embedding", model.embedding))
    lines.extend(matrix_lines("conv_weights", model.conv_weights))
    lines.append("conv_bias " + " ".join(repr(float(v)) for v in model.conv_bias))
    lines.append("dense_weights " + " ".join(repr(float(v)) for v in model.dense_weights))
    lines.append(f"dense_bias {model.dense_bias!r}")
    return "".join(line + "\n" for line in lines)


def cnn_from_text(text: str) -> ConvNetModel:
    meta, body = split_comment_block(text, CNN_FORMAT)
    V, d = int(meta["vocab"]), int(meta["dim"])
    F, K = int(meta["filters"]), int(meta["kernel"])

    pos = 0

    def read_matrix(name: str, shape: tuple[int, ...]) -> np.ndarray:
        nonlocal pos
        header = body[pos].split(" ")
        if header[0] != name:
            raise DataError(f"model line {pos + 1}: expected section {name!r}")
        pos += 1
        rows = []
        for _ in range(shape[0]):
            rows.append([float(v) for v in body[pos].split(" ")])
            pos += 1
        return np.array(rows, dtype=np.float64).reshape(shape)

    embedding = read_matrix("embedding", (V, d))
    conv_weights = read_matrix("conv_weights", (F, K, d))
    conv_bias = np.array(
        [float(v) for v in body[pos].split(" ")[1:]], dtype=np.float64
    )
    pos += 1
    dense_weights = np.array(
        [float(v) for v in body[pos].split(" ")[1:]], dtype=np.float64
    )
    pos += 1
    dense_bias = float(body[pos].split(" ")[1])
    return ConvNetModel(
        embedding=embedding,
        conv_weights=conv_weights,
        conv_bias=conv_bias,
        dense_weights=dense_weights,
        dense_bias=dense_bias,
        max_sequence_length=int(meta["max_len"]),
    )


def save_cnn(model: ConvNetModel, path) -> None:
    Path(path).write_text(cnn_to_text(model), encoding="utf-8")


def load_cnn(path) -> ConvNetModel:
    return cnn_from_text(Path(path).read_text(encoding="utf-8"))

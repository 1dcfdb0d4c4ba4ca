import numpy as np

from mfnet.core.estimator.models import Dataset, EstimatorConfig, TrainingRun
from mfnet.core.exceptions import TrainingDivergenceError
from mfnet.core.logging import echo
from mfnet.core.relu_net import Network

Layers = list[tuple[np.ndarray, np.ndarray]]


def init_layers(
    input_dim: int,
    depth: int,
    width: int,
    rng: np.random.Generator,
    scale: float | None = None,
) -> Layers:
    """Draw weights uniformly from [−s, s] with s = √(6 / (fan_in + fan_out)).

    A fixed `scale` replaces s for every layer; biases start at zero.
    """
    sizes = [input_dim, *([width] * depth), 1]
    layers = []
    for fan_in, fan_out in zip(sizes[:-1], sizes[1:], strict=True):
        bound = scale or np.sqrt(6.0 / (fan_in + fan_out))
        layers.append(
            (rng.uniform(-bound, bound, size=(fan_out, fan_in)), np.zeros(fan_out))
        )
    return layers


def _loss(layers: Layers, xs: np.ndarray, ys: np.ndarray) -> float:
    hidden = xs
    for weight, bias in layers[:-1]:
        hidden = np.maximum(hidden @ weight.T + bias, 0.0)
    weight, bias = layers[-1]
    residual = (hidden @ weight.T + bias)[:, 0] - ys
    return float(np.mean(residual**2))


def loss_and_gradient(
    layers: Layers, xs: np.ndarray, ys: np.ndarray
) -> tuple[float, Layers]:
    """Return the mean squared error on (xs, ys) and its gradient per layer.

    The ReLU derivative is taken as 0 at the kink.
    """
    activations = [xs]
    masks = []
    hidden = xs
    for weight, bias in layers[:-1]:
        pre = hidden @ weight.T + bias
        masks.append(pre > 0.0)
        hidden = np.maximum(pre, 0.0)
        activations.append(hidden)
    weight, bias = layers[-1]
    residual = (hidden @ weight.T + bias)[:, 0] - ys
    loss = float(np.mean(residual**2))

    delta = (2.0 / len(ys)) * residual[:, None]
    gradient: Layers = []
    for index in range(len(layers) - 1, -1, -1):
        weight = layers[index][0]
        gradient.append((delta.T @ activations[index], delta.sum(axis=0)))
        if index:
            delta = (delta @ weight) * masks[index - 1]
    gradient.reverse()
    return loss, gradient


def train(data: Dataset, config: EstimatorConfig) -> TrainingRun:
    """Minimize the empirical L₂ risk over F(L_n, r_n) by mini-batch momentum SGD.

    Every epoch visits the sample once in a seeded random order. The iterate with
    the smallest full-sample loss, the initialization included, is returned.

    Raises:
        TrainingDivergenceError: When the loss becomes non-finite
    """
    rng = np.random.default_rng(config.seed)
    xs, ys = np.asarray(data.xs), np.asarray(data.ys)
    layers = init_layers(
        xs.shape[1], config.L_n, config.r_n, rng, config.init_scale
    )
    velocity = [(np.zeros_like(w), np.zeros_like(b)) for w, b in layers]
    batch = min(config.batch_size, data.n)

    best_loss = _loss(layers, xs, ys)
    best = [(w.copy(), b.copy()) for w, b in layers]
    best_epoch = 0
    curve = [best_loss]
    for epoch in range(1, config.epochs + 1):
        order = rng.permutation(data.n)
        for start in range(0, data.n, batch):
            rows = order[start : start + batch]
            _, gradient = loss_and_gradient(layers, xs[rows], ys[rows])
            for index, ((w, b), (gw, gb), (vw, vb)) in enumerate(
                zip(layers, gradient, velocity, strict=True)
            ):
                vw = config.momentum * vw - config.learning_rate * gw
                vb = config.momentum * vb - config.learning_rate * gb
                velocity[index] = (vw, vb)
                layers[index] = (w + vw, b + vb)
        loss = _loss(layers, xs, ys)
        if not np.isfinite(loss):
            raise TrainingDivergenceError(f"loss diverged in epoch {epoch}", config)
        curve.append(loss)
        if loss < best_loss:
            best_loss, best_epoch = loss, epoch
            best = [(w.copy(), b.copy()) for w, b in layers]

    run = TrainingRun(
        net=Network.from_layers(best),
        curve=np.array(curve),
        best_epoch=best_epoch,
        best_loss=best_loss,
    )
    echo(f"[train] {run}")
    return run


def fit_least_squares(data: Dataset, config: EstimatorConfig) -> Network:
    """Return the best iterate of `train`, a network in F(L_n, r_n)."""
    return train(data, config).net

import numpy as np

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.relu_net.models import Network
from mfnet.core.settings import BaseSettings
from mfnet.core.utils import chunked_rows


def forward(net: Network, points: np.ndarray) -> np.ndarray:
    """Push a 2d batch of rows through the network without any checks."""
    hidden = points
    for weight, bias in net.layers[:-1]:
        hidden = np.maximum(hidden @ weight.T + bias, 0.0)
    weight, bias = net.layers[-1]
    return hidden @ weight.T + bias


def evaluate(net: Network, x: np.ndarray | list[float] | float) -> np.ndarray:
    """Evaluate the network at one point or at every row of a batch.

    Args:
        net: Network to evaluate
        x: Vector of length `input_dim`, or array of shape (n, input_dim);
            a bare scalar is accepted for one-dimensional inputs

    Raises:
        ContractViolationError: When shapes do not match or inputs are not finite

    Returns:
        Output vector for a single point, else array of shape (n, output_dim)
    """
    array = np.asarray(x, dtype=np.float64)
    if array.ndim == 0:
        array = array.reshape(1)
    if array.ndim not in (1, 2) or array.shape[-1] != net.arch.input_dim:
        raise ContractViolationError(
            f"input of shape {array.shape}", f"expected input_dim {net.arch.input_dim}"
        )
    if not np.all(np.isfinite(array)):
        raise ContractViolationError("input contains non-finite values")
    if array.ndim == 1:
        return forward(net, array.reshape(1, -1))[0]
    if array.shape[0] == 0:
        return np.empty((0, net.arch.output_dim))
    chunk_size = BaseSettings.get().eval_chunk_size
    return np.vstack([forward(net, block) for block in chunked_rows(array, chunk_size)])


def evaluate_scalar(net: Network, points: np.ndarray) -> np.ndarray:
    """Evaluate a scalar network at every row and return a flat array."""
    if net.arch.output_dim != 1:
        raise ContractViolationError(
            "scalar evaluation of a vector-valued network", str(net.arch)
        )
    array = np.asarray(points, dtype=np.float64)
    if array.ndim == 1:
        array = array.reshape(-1, net.arch.input_dim)
    return evaluate(net, array)[:, 0]

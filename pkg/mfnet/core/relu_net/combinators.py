from collections.abc import Sequence

import numpy as np

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.relu_net.models import Network


def _block_diagonal(blocks: Sequence[np.ndarray]) -> np.ndarray:
    """Stack matrices along the diagonal of a zero matrix."""
    rows = sum(block.shape[0] for block in blocks)
    cols = sum(block.shape[1] for block in blocks)
    result = np.zeros((rows, cols))
    row = col = 0
    for block in blocks:
        result[row : row + block.shape[0], col : col + block.shape[1]] = block
        row += block.shape[0]
        col += block.shape[1]
    return result


def compose(outer: Network, inner: Network) -> Network:
    """Return the network computing `outer(inner(x))`.

    The output layer of `inner` and the first layer of `outer` are merged into one
    affine map, so the result has L_outer + L_inner hidden layers.
    """
    if inner.arch.output_dim != outer.arch.input_dim:
        raise ContractViolationError(
            f"cannot feed {inner.arch} into {outer.arch}", "dimension mismatch"
        )
    inner_weight, inner_bias = inner.layers[-1]
    outer_weight, outer_bias = outer.layers[0]
    merged = (outer_weight @ inner_weight, outer_weight @ inner_bias + outer_bias)
    return Network.from_layers([*inner.layers[:-1], merged, *outer.layers[1:]])


def parallel(nets: Sequence[Network]) -> Network:
    """Return the network computing all `nets` side by side on a shared input.

    Outputs are concatenated in the given order; hidden widths add up per layer.
    """
    if not nets:
        raise ContractViolationError("nothing to parallelize")
    first = nets[0].arch
    for net in nets[1:]:
        if net.arch.depth != first.depth or net.arch.input_dim != first.input_dim:
            raise ContractViolationError(
                f"cannot parallelize {first} with {net.arch}",
                "depth or input dimension mismatch",
            )
    layers = [
        (
            np.vstack([net.weights[0] for net in nets]),
            np.concatenate([net.biases[0] for net in nets]),
        )
    ]
    for index in range(1, first.depth + 1):
        layers.append(
            (
                _block_diagonal([net.weights[index] for net in nets]),
                np.concatenate([net.biases[index] for net in nets]),
            )
        )
    return Network.from_layers(layers)


def pad_depth(net: Network, target_depth: int) -> Network:
    """Append identity layers σ(z) − σ(−z) behind the output until `target_depth`.

    Each padding layer has 2·output_dim neurons and leaves the function unchanged.
    """
    if target_depth < net.arch.depth:
        raise ContractViolationError(
            f"cannot pad {net.arch} down to depth {target_depth}"
        )
    layers = net.layers
    eye = np.eye(net.arch.output_dim)
    for _ in range(target_depth - net.arch.depth):
        weight, bias = layers[-1]
        layers[-1] = (np.vstack([weight, -weight]), np.concatenate([bias, -bias]))
        layers.append((np.hstack([eye, -eye]), np.zeros(net.arch.output_dim)))
    return Network.from_layers(layers)


def linear_combine(
    nets: Sequence[Network], coefficients: Sequence[float], bias: float = 0.0
) -> Network:
    """Return the scalar network computing Σ c_v·net_v(x) + bias.

    All networks must share input dimension and depth and have one output.
    """
    if len(nets) != len(coefficients):
        raise ContractViolationError(
            f"{len(nets)} networks but {len(coefficients)} coefficients"
        )
    for net in nets:
        if net.arch.output_dim != 1:
            raise ContractViolationError("only scalar networks can be combined")
    stacked = parallel(nets)
    layers = stacked.layers
    weight, biases = layers[-1]
    factors = np.asarray(coefficients, dtype=np.float64)
    layers[-1] = (
        (factors @ weight).reshape(1, -1),
        np.array([factors @ biases + bias]),
    )
    return Network.from_layers(layers)


def affine_input(net: Network, matrix: np.ndarray, offset: np.ndarray) -> Network:
    """Return the network computing `net(matrix @ x + offset)`."""
    matrix = np.atleast_2d(np.asarray(matrix, dtype=np.float64))
    if matrix.shape[0] != net.arch.input_dim:
        raise ContractViolationError(
            f"affine map to {matrix.shape[0]} dims feeds {net.arch}"
        )
    layers = net.layers
    weight, bias = layers[0]
    layers[0] = (weight @ matrix, weight @ np.asarray(offset, dtype=np.float64) + bias)
    return Network.from_layers(layers)


def affine_output(net: Network, matrix: np.ndarray, offset: np.ndarray) -> Network:
    """Return the network computing `matrix @ net(x) + offset`."""
    matrix = np.atleast_2d(np.asarray(matrix, dtype=np.float64))
    if matrix.shape[1] != net.arch.output_dim:
        raise ContractViolationError(
            f"affine map from {matrix.shape[1]} dims after {net.arch}"
        )
    layers = net.layers
    weight, bias = layers[-1]
    layers[-1] = (matrix @ weight, matrix @ bias + np.asarray(offset, dtype=np.float64))
    return Network.from_layers(layers)

import numpy as np
import pytest

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.relu_net import (
    Network,
    affine_input,
    affine_output,
    compose,
    evaluate,
    evaluate_scalar,
    linear_combine,
    pad_depth,
    parallel,
)


@pytest.fixture
def relu_net() -> Network:
    """Return x ↦ σ(x) with a one-neuron hidden layer."""
    return Network.from_layers(
        [(np.array([[1.0]]), np.zeros(1)), (np.array([[1.0]]), np.zeros(1))]
    )


@pytest.fixture
def hat_net() -> Network:
    """Return the hat σ(x) − 2σ(x − 1) + σ(x − 2)."""
    return Network.from_layers(
        [
            (np.ones((3, 1)), np.array([0.0, -1.0, -2.0])),
            (np.array([[1.0, -2.0, 1.0]]), np.zeros(1)),
        ]
    )


@pytest.fixture
def points(rng: np.random.Generator) -> np.ndarray:
    return rng.uniform(-3.0, 3.0, size=(200, 1))


def test_compose(relu_net: Network, hat_net: Network, points: np.ndarray) -> None:
    net = compose(hat_net, relu_net)

    assert net.arch.depth == 2
    np.testing.assert_allclose(
        evaluate_scalar(net, points),
        evaluate_scalar(hat_net, np.maximum(points, 0.0)),
        atol=1e-12,
    )


def test_compose_dimension_mismatch(hat_net: Network) -> None:
    wide = Network.from_layers(
        [(np.ones((1, 2)), np.zeros(1)), (np.ones((1, 1)), np.zeros(1))]
    )
    with pytest.raises(ContractViolationError, match="dimension mismatch"):
        compose(wide, hat_net)


def test_parallel(relu_net: Network, hat_net: Network, points: np.ndarray) -> None:
    net = parallel([relu_net, hat_net])

    assert net.arch.hidden_widths == (4,)
    assert net.arch.output_dim == 2
    values = evaluate(net, points)
    np.testing.assert_allclose(values[:, 0], evaluate_scalar(relu_net, points))
    np.testing.assert_allclose(values[:, 1], evaluate_scalar(hat_net, points))


def test_parallel_depth_mismatch(relu_net: Network, hat_net: Network) -> None:
    deep = compose(hat_net, relu_net)
    with pytest.raises(ContractViolationError, match="depth or input dimension"):
        parallel([relu_net, deep])


@pytest.mark.parametrize("target_depth", [1, 2, 5], ids=["same", "one more", "deep"])
def test_pad_depth(hat_net: Network, points: np.ndarray, target_depth: int) -> None:
    net = pad_depth(hat_net, target_depth)

    assert net.arch.depth == target_depth
    np.testing.assert_allclose(
        evaluate_scalar(net, points), evaluate_scalar(hat_net, points), atol=1e-12
    )


def test_pad_depth_cannot_shrink(hat_net: Network) -> None:
    with pytest.raises(ContractViolationError, match="cannot pad"):
        pad_depth(compose(hat_net, hat_net), 1)


def test_linear_combine(
    relu_net: Network, hat_net: Network, points: np.ndarray
) -> None:
    net = linear_combine([relu_net, hat_net], [2.0, -0.5], bias=1.0)

    expected = (
        2.0 * evaluate_scalar(relu_net, points)
        - 0.5 * evaluate_scalar(hat_net, points)
        + 1.0
    )
    np.testing.assert_allclose(evaluate_scalar(net, points), expected, atol=1e-12)


def test_linear_combine_checks_lengths(relu_net: Network) -> None:
    with pytest.raises(ContractViolationError, match="2 coefficients"):
        linear_combine([relu_net], [1.0, 2.0])


def test_affine_input_and_output(hat_net: Network, rng: np.random.Generator) -> None:
    points = rng.uniform(-1.0, 1.0, size=(50, 2))
    shifted = affine_input(hat_net, np.array([[1.0, 2.0]]), np.array([0.5]))
    scaled = affine_output(shifted, np.array([[3.0]]), np.array([-1.0]))

    inner = points @ np.array([1.0, 2.0]) + 0.5
    expected = 3.0 * evaluate_scalar(hat_net, inner.reshape(-1, 1)) - 1.0
    np.testing.assert_allclose(evaluate_scalar(scaled, points), expected, atol=1e-12)
    assert scaled.arch.hidden_widths == hat_net.arch.hidden_widths

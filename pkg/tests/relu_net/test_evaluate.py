import numpy as np
import pytest

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.relu_net import Network, evaluate, evaluate_scalar
from mfnet.core.settings import BaseSettings


@pytest.fixture
def abs_net() -> Network:
    """Return the network (x, y) ↦ (|x|, |x| + y + 1)."""
    return Network.from_layers(
        [
            (np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]]), np.zeros(4)),
            (np.array([[1.0, 1.0, 0.0, 0.0], [1.0, 1.0, 1.0, -1.0]]), np.array([0.0, 1.0])),
        ]
    )


def test_evaluate_single_point(abs_net: Network) -> None:
    np.testing.assert_array_equal(evaluate(abs_net, [-2.0, 3.0]), [2.0, 6.0])


def test_evaluate_batch(abs_net: Network) -> None:
    points = np.array([[-2.0, 3.0], [0.5, -1.0], [0.0, 0.0]])

    values = evaluate(abs_net, points)

    np.testing.assert_array_equal(values, [[2.0, 6.0], [0.5, 0.5], [0.0, 1.0]])


def test_evaluate_scalar_input(tiny_net: Network) -> None:
    np.testing.assert_array_equal(evaluate(tiny_net, -1.5), [-1.5])


def test_evaluate_in_chunks(tiny_net: Network) -> None:
    BaseSettings.get().eval_chunk_size = 3
    points = np.linspace(-1.0, 1.0, 10).reshape(-1, 1)

    np.testing.assert_array_equal(evaluate_scalar(tiny_net, points), points[:, 0])


def test_evaluate_empty_batch(abs_net: Network) -> None:
    assert evaluate(abs_net, np.zeros((0, 2))).shape == (0, 2)


@pytest.mark.parametrize(
    ("x", "message"),
    [
        ([1.0, 2.0, 3.0], "expected input_dim 2"),
        ([1.0, np.nan], "non-finite"),
        (np.zeros((2, 2, 2)), "expected input_dim 2"),
    ],
    ids=["wrong length", "nan", "three dimensions"],
)
def test_evaluate_rejects_bad_input(abs_net: Network, x: object, message: str) -> None:
    with pytest.raises(ContractViolationError, match=message):
        evaluate(abs_net, x)  # type: ignore[arg-type]


def test_evaluate_scalar_rejects_vector_output(abs_net: Network) -> None:
    with pytest.raises(ContractViolationError, match="scalar evaluation"):
        evaluate_scalar(abs_net, np.zeros((1, 2)))

import numpy as np
import pytest

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.relu_net import Network, NetworkArch


def test_arch_class_membership() -> None:
    arch = NetworkArch(input_dim=3, hidden_widths=(4, 6, 2), output_dim=1)

    assert arch.depth == 3
    assert arch.width == 6
    assert arch.layer_sizes == (3, 4, 6, 2, 1)
    assert arch.in_class(3, 6)
    assert arch.in_class(3, 10)
    assert not arch.in_class(3, 5)
    assert not arch.in_class(2, 6)
    assert str(arch) == "F(L=3, r=6) 3->1"


def test_from_layers_infers_arch(tiny_net: Network) -> None:
    assert tiny_net.arch == NetworkArch(input_dim=1, hidden_widths=(2,), output_dim=1)
    assert tiny_net.parameter_count == 2 + 2 + 2 + 1


def test_weights_are_read_only(tiny_net: Network) -> None:
    with pytest.raises(ValueError, match="read-only"):
        tiny_net.weights[0][0, 0] = 5.0


@pytest.mark.parametrize(
    ("layers", "message"),
    [
        ([(np.ones((2, 1)), np.zeros(2))], "at least one hidden layer"),
        (
            [(np.ones((2, 1)), np.zeros(2)), (np.ones((1, 3)), np.zeros(1))],
            "layer count does not match|layer 1 has shape",
        ),
        (
            [(np.full((2, 1), np.inf), np.zeros(2)), (np.ones((1, 2)), np.zeros(1))],
            "non-finite",
        ),
    ],
    ids=["no hidden layer", "shape mismatch", "infinite weight"],
)
def test_invalid_networks(
    layers: list[tuple[np.ndarray, np.ndarray]], message: str
) -> None:
    with pytest.raises(ContractViolationError, match=message):
        Network.from_layers(layers)


def test_network_str_mentions_class(tiny_net: Network) -> None:
    assert str(tiny_net).startswith("Network F(L=1, r=2) 1->1: ")

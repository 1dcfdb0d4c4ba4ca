import numpy as np
import pytest

from mfnet.core.relu_net import Network

pytest_plugins = ("mfnet.core.testing.plugin",)


@pytest.fixture
def tiny_net() -> Network:
    """Return the one-hidden-layer network x ↦ σ(x) − σ(−x) = x on R."""
    return Network.from_layers(
        [
            (np.array([[1.0], [-1.0]]), np.zeros(2)),
            (np.array([[1.0, -1.0]]), np.zeros(1)),
        ]
    )

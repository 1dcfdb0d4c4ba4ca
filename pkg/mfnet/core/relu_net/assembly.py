import numpy as np

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.relu_net.models import Network


class LayerPlan:
    """Rows of one affine layer, collected block by block.

    Every block is an affine function of the previous layer's values; `add` returns
    the slice of neurons it occupies so later layers can address them.
    """

    def __init__(self, in_width: int) -> None:
        """Start an empty layer reading `in_width` values."""
        self.in_width = in_width
        self._weights: list[np.ndarray] = []
        self._biases: list[np.ndarray] = []
        self.width = 0

    def add(self, weight: np.ndarray, bias: np.ndarray | float = 0.0) -> slice:
        """Append neurons computing `weight @ h + bias` of the previous layer `h`."""
        weight = np.atleast_2d(np.asarray(weight, dtype=np.float64))
        if weight.shape[1] != self.in_width:
            raise ContractViolationError(
                f"block reads {weight.shape[1]} values", f"layer has {self.in_width}"
            )
        self._weights.append(weight)
        self._biases.append(np.broadcast_to(bias, (weight.shape[0],)).astype(float))
        start, self.width = self.width, self.width + weight.shape[0]
        return slice(start, self.width)

    def row(self) -> np.ndarray:
        """Return a zero row of the input width, to be filled by the caller."""
        return np.zeros(self.in_width)

    def compile(self) -> tuple[np.ndarray, np.ndarray]:
        """Return the stacked (weight, bias) pair."""
        if not self._weights:
            raise ContractViolationError("layer without neurons")
        return np.vstack(self._weights), np.concatenate(self._biases)


class NetworkAssembler:
    """Build a network layer by layer from neuron blocks."""

    def __init__(self, input_dim: int) -> None:
        """Start a network reading `input_dim` inputs."""
        self.input_dim = input_dim
        self._layers: list[tuple[np.ndarray, np.ndarray]] = []
        self.current_width = input_dim

    @property
    def depth(self) -> int:
        """Number of hidden layers pushed so far."""
        return len(self._layers)

    def layer(self) -> LayerPlan:
        """Open a plan for the next layer."""
        return LayerPlan(self.current_width)

    def push(self, plan: LayerPlan) -> None:
        """Append a planned hidden layer."""
        self._layers.append(plan.compile())
        self.current_width = plan.width

    def finish(self, plan: LayerPlan) -> Network:
        """Append the planned output layer and return the network."""
        return Network.from_layers([*self._layers, plan.compile()])

from typing import Annotated, Self

import numpy as np
from pydantic import Field, PositiveInt, model_validator

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.models import BaseModel
from mfnet.core.types import FrozenArray


class NetworkArch(BaseModel):
    """Architecture (d, k₁..k_L, out) of a fully connected ReLU network."""

    input_dim: PositiveInt
    hidden_widths: Annotated[tuple[PositiveInt, ...], Field(min_length=1)]
    output_dim: PositiveInt

    @property
    def depth(self) -> int:
        """Number of hidden layers L."""
        return len(self.hidden_widths)

    @property
    def width(self) -> int:
        """Largest hidden layer, the r of the class F(L, r)."""
        return max(self.hidden_widths)

    @property
    def layer_sizes(self) -> tuple[int, ...]:
        """Sizes of all layers from input to output."""
        return (self.input_dim, *self.hidden_widths, self.output_dim)

    def in_class(self, depth: int, width: int) -> bool:
        """Return whether the network belongs to F(depth, width)."""
        return self.depth == depth and self.width <= width

    def __str__(self) -> str:
        """Format as the network class this architecture belongs to."""
        return f"F(L={self.depth}, r={self.width}) {self.input_dim}->{self.output_dim}"


class Network(BaseModel):
    """Fully connected network with ReLU after every hidden layer.

    Layer `i` maps the outputs of layer `i-1` through `weights[i] @ h + biases[i]`;
    the last affine map is the output layer and has no activation.
    """

    arch: NetworkArch
    weights: tuple[FrozenArray, ...]
    biases: tuple[FrozenArray, ...]

    @model_validator(mode="after")
    def check_layers(self) -> Self:
        """Check shapes against the architecture and reject non-finite entries."""
        sizes = self.arch.layer_sizes
        if len(self.weights) != len(sizes) - 1 or len(self.biases) != len(sizes) - 1:
            raise ContractViolationError(
                "layer count does not match architecture", str(self.arch)
            )
        for index, (weight, bias) in enumerate(
            zip(self.weights, self.biases, strict=True)
        ):
            expected = (sizes[index + 1], sizes[index])
            if weight.shape != expected or bias.shape != (sizes[index + 1],):
                raise ContractViolationError(
                    f"layer {index} has shape {weight.shape}/{bias.shape}",
                    f"expected {expected}",
                )
            if not (np.all(np.isfinite(weight)) and np.all(np.isfinite(bias))):
                raise ContractViolationError(f"layer {index} has non-finite entries")
        return self

    @classmethod
    def from_layers(cls, layers: list[tuple[np.ndarray, np.ndarray]]) -> "Network":
        """Build a network from (weight, bias) pairs, inferring the architecture."""
        if len(layers) < 2:
            raise ContractViolationError("a network needs at least one hidden layer")
        arch = NetworkArch(
            input_dim=layers[0][0].shape[1],
            hidden_widths=tuple(weight.shape[0] for weight, _ in layers[:-1]),
            output_dim=layers[-1][0].shape[0],
        )
        return cls(
            arch=arch,
            weights=tuple(weight for weight, _ in layers),
            biases=tuple(bias for _, bias in layers),
        )

    @property
    def layers(self) -> list[tuple[np.ndarray, np.ndarray]]:
        """Return the (weight, bias) pairs from input to output."""
        return list(zip(self.weights, self.biases, strict=True))

    @property
    def parameter_count(self) -> int:
        """Total number of weights and biases."""
        return sum(w.size + b.size for w, b in self.layers)

    def __str__(self) -> str:
        """Format with architecture and checksum for logging."""
        return f"Network {self.arch}: {self.checksum()}"

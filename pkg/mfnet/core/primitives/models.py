from typing import Self

import numpy as np
from pydantic import NonNegativeInt, PositiveFloat, PositiveInt, model_validator

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.models import BaseModel
from mfnet.core.relu_net import Network


class Box(BaseModel):
    """Axis-parallel hyper-rectangle Π_i [lower_i, upper_i]; bounds may be infinite."""

    lower: tuple[float, ...]
    upper: tuple[float, ...]

    @model_validator(mode="after")
    def check_bounds(self) -> Self:
        """Ensure both corners have the same dimension and are ordered."""
        if len(self.lower) != len(self.upper):
            raise ContractViolationError("box corners differ in dimension")
        if any(low > high for low, high in zip(self.lower, self.upper, strict=True)):
            raise ContractViolationError("box lower corner exceeds upper corner")
        return self

    @classmethod
    def cube(cls, dim: int, low: float, high: float) -> "Box":
        """Return the cube [low, high]^dim."""
        return cls(lower=(low,) * dim, upper=(high,) * dim)

    @classmethod
    def everywhere(cls, dim: int) -> "Box":
        """Return the whole space R^dim."""
        return cls.cube(dim, -np.inf, np.inf)

    @property
    def dim(self) -> int:
        """Dimension of the box."""
        return len(self.lower)

    def contains(self, points: np.ndarray) -> np.ndarray:
        """Return a boolean mask of the rows of `points` inside the box."""
        points = np.atleast_2d(points)
        return np.all(
            (points >= np.array(self.lower)) & (points <= np.array(self.upper)), axis=1
        )


class ErrorContract(BaseModel):
    """Guaranteed class F(depth, width) and sup-error bound of a primitive network.

    With `scale_input` set, the bound is `sup_error_bound` times the magnitude of
    that input coordinate.
    """

    depth: PositiveInt
    width: PositiveInt
    sup_error_bound: PositiveFloat
    valid_domain: Box
    scale_input: NonNegativeInt | None = None

    def bound_at(self, points: np.ndarray) -> np.ndarray:
        """Return the error bound at every row of `points`."""
        points = np.atleast_2d(points)
        if self.scale_input is None:
            return np.full(len(points), self.sup_error_bound)
        return self.sup_error_bound * np.abs(points[:, self.scale_input])


class Primitive(BaseModel):
    """A constructed network together with the contract it meets."""

    net: Network
    contract: ErrorContract

    @model_validator(mode="after")
    def check_contract(self) -> Self:
        """Ensure the architecture matches the contract exactly."""
        arch = self.net.arch
        if arch.depth != self.contract.depth or arch.width != self.contract.width:
            raise ContractViolationError(
                f"{arch} does not match contract",
                f"F(L={self.contract.depth}, r={self.contract.width})",
            )
        if self.contract.valid_domain.dim != arch.input_dim:
            raise ContractViolationError("contract domain dimension mismatch")
        scale_input = self.contract.scale_input
        if scale_input is not None and scale_input >= arch.input_dim:
            raise ContractViolationError("contract scales by a missing input", scale_input)
        return self

    def __str__(self) -> str:
        """Format with the architecture and error bound for logging."""
        return (
            f"Primitive {self.net.arch} "
            f"error≤{self.contract.sup_error_bound:.3g}: {self.checksum()}"
        )

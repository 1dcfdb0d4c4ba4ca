import math
from abc import abstractmethod
from typing import Annotated

import numpy as np
from pydantic import Field, NonNegativeFloat, PositiveFloat, PositiveInt

from mfnet.core.models import BaseModel
from mfnet.core.taylor.multi_index import multi_indices
from mfnet.core.types import BuiltinTarget, FrozenArray


class SmoothTarget(BaseModel):
    """A (p, C)-smooth function f: R^d → R with partial derivatives up to order q.

    Here p = q + s with s ∈ (0, 1], every partial of order q is Hölder continuous
    with exponent s and constant C, and `cq_norm` bounds all partials of order
    at most q on the region of interest.
    """

    dim: PositiveInt
    p: PositiveFloat
    holder_constant: NonNegativeFloat
    cq_norm: NonNegativeFloat

    @property
    def q(self) -> int:
        """Largest derivative order, ⌈p⌉ − 1."""
        return math.ceil(self.p) - 1

    @property
    def s(self) -> float:
        """Hölder exponent p − q."""
        return self.p - self.q

    @abstractmethod
    def value(self, points: np.ndarray) -> np.ndarray:  # pragma: no cover
        """Evaluate f at the rows of `points`."""

    @abstractmethod
    def partial(
        self, index: tuple[int, ...], points: np.ndarray
    ) -> np.ndarray:  # pragma: no cover
        """Evaluate ∂^index f at the rows of `points`."""

    def __call__(self, points: np.ndarray) -> np.ndarray:
        """Evaluate f at one point or at the rows of a batch."""
        return self.value(np.atleast_2d(points))

    def partials(self, points: np.ndarray, degree: int | None = None) -> np.ndarray:
        """Evaluate all ∂^j f with ‖j‖₁ ≤ degree in graded lexicographic order.

        Returns:
            Array of shape (n, number of multi-indices)
        """
        points = np.atleast_2d(points)
        degree = self.q if degree is None else degree
        return np.column_stack(
            [self.partial(index, points) for index in multi_indices(self.dim, degree)]
        )

    def __str__(self) -> str:
        """Format with smoothness parameters for logging."""
        return (
            f"{self.__class__.__name__} d={self.dim} p={self.p:g} "
            f"C={self.holder_constant:.4g} norm={self.cq_norm:.4g}"
        )


class TargetSpec(BaseModel):
    """Built-in target named in a config file together with its parameters.

    Targets are defined on the native coordinates of the manifold and pulled back
    along its embedding; `q` fixes the smoothness p = q + 1.
    """

    kind: BuiltinTarget
    q: Annotated[int, Field(ge=0)] = 1
    frequencies: tuple[float, ...] = ()
    phase: float = 0.0
    amplitude: float = 1.0


class SmoothnessCheck(BaseModel):
    """Sampled evidence for the smoothness record of a target."""

    max_partial: NonNegativeFloat
    max_holder_ratio: NonNegativeFloat
    norm_ok: bool
    holder_ok: bool


class PhiState(BaseModel):
    """Intermediate values of the recursion computing the piecewise Taylor polynomial.

    Slot arrays have the full capacity ⌈c13·M^{d*}⌉; slots beyond the number N_i
    of fine cubes in the coarse cube of x are zero.
    """

    phi_1_1: FrozenArray
    phi_2_1: FrozenArray
    phi_3_1: FrozenArray
    phi_4_1: FrozenArray
    phi_1_2: FrozenArray
    phi_2_2: FrozenArray
    phi_3_2: FrozenArray
    phi_1_3: float
    coarse_index: tuple[int, ...]
    slot: int
    slot_count: int

    def __str__(self) -> str:
        """Format with the located cube and the final value."""
        return (
            f"PhiState coarse={self.coarse_index} slot={self.slot}/"
            f"{self.slot_count} value={self.phi_1_3:.6g}"
        )

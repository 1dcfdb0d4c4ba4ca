import math
from abc import abstractmethod
from collections.abc import Callable
from itertools import product
from typing import Annotated, Self

import numpy as np
from pydantic import Field, PositiveFloat, PositiveInt, model_validator

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.models import BaseModel
from mfnet.core.types import BuiltinManifold

CubeIndex = tuple[int, ...]


class Chart(BaseModel):
    """Bi-Lipschitz map ψ from the parameter cube [0,1]^{d*} into R^d.

    For all parameters t₁, t₂ the chart satisfies
    C_{ψ,1}·‖t₁ − t₂‖ ≤ ‖ψ(t₁) − ψ(t₂)‖ ≤ C_{ψ,2}·‖t₁ − t₂‖.
    """

    @property
    @abstractmethod
    def intrinsic_dim(self) -> int:  # pragma: no cover
        """Dimension d* of the parameter cube."""

    @property
    @abstractmethod
    def ambient_dim(self) -> int:  # pragma: no cover
        """Dimension d of the image space."""

    @property
    @abstractmethod
    def lower_lipschitz(self) -> float:  # pragma: no cover
        """Lower constant C_{ψ,1}."""

    @property
    @abstractmethod
    def upper_lipschitz(self) -> float:  # pragma: no cover
        """Upper constant C_{ψ,2}."""

    @abstractmethod
    def map(self, params: np.ndarray) -> np.ndarray:  # pragma: no cover
        """Map parameter rows of shape (n, d*) to points of shape (n, d)."""

    def sup_norm_bound(self) -> float:
        """Return a bound on ‖ψ(t)‖_∞ over the parameter cube."""
        corners = np.array(list(product((0.0, 1.0), repeat=self.intrinsic_dim)))
        spread = self.upper_lipschitz * math.sqrt(self.intrinsic_dim)
        return float(np.max(np.abs(self.map(corners))) + spread)

    def __str__(self) -> str:
        """Format with dimensions and constants for logging."""
        return (
            f"{self.__class__.__name__} [0,1]^{self.intrinsic_dim}->R^"
            f"{self.ambient_dim} C1={self.lower_lipschitz:.4g} "
            f"C2={self.upper_lipschitz:.4g}"
        )


class FunctionChart(Chart):
    """Chart given by a vectorized callable and its declared constants."""

    func: Callable[[np.ndarray], np.ndarray]
    dims: tuple[PositiveInt, PositiveInt]
    constants: tuple[PositiveFloat, PositiveFloat]

    @model_validator(mode="after")
    def check_constants(self) -> Self:
        """Ensure 0 < C_{ψ,1} ≤ C_{ψ,2} and d* ≤ d."""
        if self.constants[0] > self.constants[1]:
            raise ContractViolationError("lower Lipschitz constant exceeds upper one")
        if self.dims[0] > self.dims[1]:
            raise ContractViolationError("intrinsic dimension exceeds ambient one")
        return self

    @property
    def intrinsic_dim(self) -> int:
        """Dimension d* of the parameter cube."""
        return self.dims[0]

    @property
    def ambient_dim(self) -> int:
        """Dimension d of the image space."""
        return self.dims[1]

    @property
    def lower_lipschitz(self) -> float:
        """Lower constant C_{ψ,1}."""
        return self.constants[0]

    @property
    def upper_lipschitz(self) -> float:
        """Upper constant C_{ψ,2}."""
        return self.constants[1]

    def map(self, params: np.ndarray) -> np.ndarray:
        """Apply the wrapped callable."""
        return np.asarray(self.func(np.atleast_2d(params)), dtype=np.float64)


class Manifold(BaseModel):
    """Union of chart images contained in the cube [−a, a]^d."""

    charts: tuple[Chart, ...]
    ambient_dim: PositiveInt
    intrinsic_dim: PositiveInt
    bound: Annotated[float, Field(ge=1.0)]

    @model_validator(mode="after")
    def check_charts(self) -> Self:
        """Check dimensions and sample the containment in [−a, a]^d."""
        if self.intrinsic_dim > self.ambient_dim:
            raise ContractViolationError("intrinsic dimension exceeds ambient one")
        rng = np.random.default_rng(0)
        for chart in self.charts:
            if (chart.intrinsic_dim, chart.ambient_dim) != (
                self.intrinsic_dim,
                self.ambient_dim,
            ):
                raise ContractViolationError(f"{chart} does not fit the manifold")
            points = chart.map(rng.random((256, self.intrinsic_dim)))
            if np.max(np.abs(points)) > self.bound + 1e-12:
                raise ContractViolationError(f"{chart} leaves [−a, a]^d", self.bound)
        return self

    @property
    def chart_count(self) -> int:
        """Number r of charts."""
        return len(self.charts)

    @property
    def lower_lipschitz(self) -> float:
        """Smallest lower constant over all charts."""
        return min(chart.lower_lipschitz for chart in self.charts)

    @property
    def upper_lipschitz(self) -> float:
        """Largest upper constant over all charts."""
        return max(chart.upper_lipschitz for chart in self.charts)

    def __str__(self) -> str:
        """Format with dimensions and chart count for logging."""
        return (
            f"Manifold d*={self.intrinsic_dim} in R^{self.ambient_dim} "
            f"r={self.chart_count} a={self.bound:.4g}"
        )


class ManifoldConstants(BaseModel):
    """Cube-counting constants of a manifold."""

    c12: PositiveFloat
    c13: PositiveFloat
    lower_lipschitz: PositiveFloat
    upper_lipschitz: PositiveFloat


class GridSpec(BaseModel):
    """Two-scale partition with coarse side 1/M, fine side 1/M² and a shift.

    Every shift component is either 0 or half a fine side, 1/(2M²). Coarse cube k
    is the union of the fine cubes k' with k'//M = k, so coarse corners are computed
    from fine corners and both partitions agree bit for bit.
    """

    M: Annotated[int, Field(ge=2)]
    shift: tuple[float, ...]

    @model_validator(mode="after")
    def check_shift(self) -> Self:
        """Ensure every shift component is 0 or 1/(2M²)."""
        half = self.half_fine_side
        if any(value not in (0.0, half) for value in self.shift):
            raise ContractViolationError(
                f"shift components must be 0 or {half}", self.shift
            )
        if not self.shift:
            raise ContractViolationError("grid needs at least one dimension")
        return self

    @classmethod
    def unshifted(cls, M: int, dim: int) -> "GridSpec":
        """Return the grid with zero shift."""
        return cls(M=M, shift=(0.0,) * dim)

    @classmethod
    def all_shifts(cls, M: int, dim: int) -> list["GridSpec"]:
        """Return the 2^d shifted grids in fixed order, the unshifted one first."""
        half = 1.0 / (2 * M * M)
        return [cls(M=M, shift=shift) for shift in product((0.0, half), repeat=dim)]

    @property
    def dim(self) -> int:
        """Dimension d of the partitioned space."""
        return len(self.shift)

    @property
    def coarse_side(self) -> float:
        """Side 1/M of the cubes of P₁."""
        return 1.0 / self.M

    @property
    def fine_side(self) -> float:
        """Side 1/M² of the cubes of P₂."""
        return 1.0 / (self.M * self.M)

    @property
    def half_fine_side(self) -> float:
        """Shift magnitude 1/(2M²)."""
        return 1.0 / (2 * self.M * self.M)

    @property
    def shift_vector(self) -> np.ndarray:
        """Shift as an array."""
        return np.array(self.shift)

    def fine_corner(self, index: CubeIndex | np.ndarray) -> np.ndarray:
        """Return the bottom-left corner of fine cube `index`."""
        return np.asarray(index) * self.fine_side + self.shift_vector

    def coarse_corner(self, index: CubeIndex | np.ndarray) -> np.ndarray:
        """Return the bottom-left corner of coarse cube `index`."""
        return np.asarray(index) * self.M * self.fine_side + self.shift_vector

    def coarse_upper(self, index: CubeIndex | np.ndarray) -> np.ndarray:
        """Return the top-right corner of coarse cube `index`."""
        return (np.asarray(index) + 1) * self.M * self.fine_side + self.shift_vector

    def coarse_of(self, fine: np.ndarray) -> np.ndarray:
        """Return the coarse indices of integer fine indices."""
        return np.floor_divide(fine, self.M)

    def __str__(self) -> str:
        """Format with M and shift for logging."""
        return f"GridSpec M={self.M} shift={self.shift}"


class CubeTable(BaseModel):
    """Coarse cubes meeting a manifold with their ordered fine cubes.

    The i-th coarse cube owns the fine cubes `fine[i]`; both are sorted
    lexicographically and only intersecting cubes are listed.
    """

    grid: GridSpec
    coarse: tuple[CubeIndex, ...]
    fine: tuple[tuple[CubeIndex, ...], ...]
    capacity: PositiveInt

    @model_validator(mode="after")
    def check_alignment(self) -> Self:
        """Ensure every coarse cube has its own list of fine cubes."""
        if len(self.coarse) != len(self.fine):
            raise ContractViolationError("coarse and fine tables are misaligned")
        return self

    @property
    def slot_count(self) -> int:
        """Largest number N_i of fine cubes in one coarse cube, at least 1."""
        return max((len(cells) for cells in self.fine), default=1) or 1

    def lookup(self) -> dict[CubeIndex, int]:
        """Return the position of every coarse cube in the table."""
        return {index: position for position, index in enumerate(self.coarse)}

    def __str__(self) -> str:
        """Format with cube counts for logging."""
        return (
            f"CubeTable M={self.grid.M} coarse={len(self.coarse)} "
            f"fine={sum(len(cells) for cells in self.fine)} "
            f"slots={self.slot_count}/{self.capacity}"
        )


class ManifoldSpec(BaseModel):
    """Built-in manifold named in a config file together with its parameters.

    For helices the pitch equals the radius.
    """

    kind: BuiltinManifold
    ambient_dim: PositiveInt
    intrinsic_dim: PositiveInt = 1
    radius: PositiveFloat = 0.45
    offset: tuple[float, ...] = ()
    chart_count: Annotated[int, Field(ge=2)] = 2
    rotation_seed: int | None = None

import math
from typing import Annotated, Self

import numpy as np
from pydantic import Field, NonNegativeFloat, PositiveFloat, PositiveInt, model_validator

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.manifold.models import Chart, Manifold, ManifoldSpec
from mfnet.core.types import BuiltinManifold, FrozenArray


def orthonormal_frame(ambient_dim: int, native_dim: int, seed: int | None) -> np.ndarray:
    """Return a (d, k) matrix with orthonormal columns.

    Without a seed the frame pads with zeros, i.e. it holds the first k unit
    vectors; with a seed it is additionally rotated by a random orthogonal matrix.
    """
    if native_dim > ambient_dim:
        raise ContractViolationError(
            f"cannot embed R^{native_dim} into R^{ambient_dim}"
        )
    if seed is None:
        return np.eye(ambient_dim)[:, :native_dim]
    rng = np.random.default_rng(seed)
    q, r = np.linalg.qr(rng.standard_normal((ambient_dim, ambient_dim)))
    q = q * np.sign(np.diag(r))
    return q[:, :native_dim]


class EmbeddedChart(Chart):
    """Chart whose native image in R^k is placed into R^d by frame and offset.

    The frame has orthonormal columns, so distances and thereby the Lipschitz
    constants of the native map are preserved.
    """

    frame: FrozenArray
    offset: FrozenArray

    @model_validator(mode="after")
    def check_frame(self) -> Self:
        """Ensure the frame is orthonormal and fits the native map."""
        if self.frame.ndim != 2 or self.frame.shape[1] != self.native_dim:
            raise ContractViolationError(
                f"frame of shape {self.frame.shape} for native dim {self.native_dim}"
            )
        if not np.allclose(self.frame.T @ self.frame, np.eye(self.native_dim)):
            raise ContractViolationError("frame columns are not orthonormal")
        if self.offset.shape != (self.frame.shape[0],):
            raise ContractViolationError("offset does not match the ambient dimension")
        return self

    @property
    def native_dim(self) -> int:  # pragma: no cover
        """Dimension k of the space the native map lands in."""
        raise NotImplementedError

    def native(self, params: np.ndarray) -> np.ndarray:  # pragma: no cover
        """Map parameter rows to native points of shape (n, k)."""
        raise NotImplementedError

    @property
    def ambient_dim(self) -> int:
        """Dimension d of the image space."""
        return int(self.frame.shape[0])

    def map(self, params: np.ndarray) -> np.ndarray:
        """Map parameter rows of shape (n, d*) to points of shape (n, d)."""
        return self.native(np.atleast_2d(params)) @ self.frame.T + self.offset


class AffineChart(EmbeddedChart):
    """Scaled parameter cube t ↦ scale·t, e.g. the slice [0,1]^{d*}×{v}."""

    dim: PositiveInt
    scale: PositiveFloat = 1.0

    @property
    def native_dim(self) -> int:
        """Dimension k = d*."""
        return self.dim

    @property
    def intrinsic_dim(self) -> int:
        """Dimension d* of the parameter cube."""
        return self.dim

    @property
    def lower_lipschitz(self) -> float:
        """The map is a similarity, both constants equal the scale."""
        return self.scale

    @property
    def upper_lipschitz(self) -> float:
        """The map is a similarity, both constants equal the scale."""
        return self.scale

    def native(self, params: np.ndarray) -> np.ndarray:
        """Scale the parameters."""
        return self.scale * params


class CircleArcChart(EmbeddedChart):
    """Arc t ↦ ρ·(cos(θ₀ + α·t), sin(θ₀ + α·t)) of angle α < 2π."""

    radius: PositiveFloat
    start: float = 0.0
    angle: Annotated[float, Field(gt=0.0, lt=2 * math.pi)] = math.pi

    @property
    def native_dim(self) -> int:
        """The arc lies in a plane."""
        return 2

    @property
    def intrinsic_dim(self) -> int:
        """Arcs are curves."""
        return 1

    @property
    def lower_lipschitz(self) -> float:
        """Chord of the full arc, 2ρ·sin(α/2)."""
        return 2.0 * self.radius * math.sin(self.angle / 2.0)

    @property
    def upper_lipschitz(self) -> float:
        """Arc length ρ·α."""
        return self.radius * self.angle

    def native(self, params: np.ndarray) -> np.ndarray:
        """Trace the arc."""
        theta = self.start + self.angle * params[:, 0]
        return self.radius * np.column_stack([np.cos(theta), np.sin(theta)])


class TorusArcChart(EmbeddedChart):
    """Product of two arcs of equal radius and angle in R⁴, a flat torus patch."""

    radius: PositiveFloat
    starts: tuple[float, float] = (0.0, 0.0)
    angle: Annotated[float, Field(gt=0.0, lt=2 * math.pi)] = math.pi

    @property
    def native_dim(self) -> int:
        """Two planes."""
        return 4

    @property
    def intrinsic_dim(self) -> int:
        """Surface patches."""
        return 2

    @property
    def lower_lipschitz(self) -> float:
        """Squared chords add up, so the arc constants carry over."""
        return 2.0 * self.radius * math.sin(self.angle / 2.0)

    @property
    def upper_lipschitz(self) -> float:
        """Squared arc lengths add up, so the arc constants carry over."""
        return self.radius * self.angle

    def native(self, params: np.ndarray) -> np.ndarray:
        """Trace both arcs."""
        first = self.starts[0] + self.angle * params[:, 0]
        second = self.starts[1] + self.angle * params[:, 1]
        return self.radius * np.column_stack(
            [np.cos(first), np.sin(first), np.cos(second), np.sin(second)]
        )


class HelixChart(EmbeddedChart):
    """Helix piece t ↦ (ρ·cos(θ₀ + α·t), ρ·sin(θ₀ + α·t), z₀ + h·t)."""

    radius: PositiveFloat
    start: float = 0.0
    angle: Annotated[float, Field(gt=0.0, lt=2 * math.pi)] = math.pi
    height: NonNegativeFloat = 0.0
    base: float = 0.0

    @property
    def native_dim(self) -> int:
        """Helices live in space."""
        return 3

    @property
    def intrinsic_dim(self) -> int:
        """Helices are curves."""
        return 1

    @property
    def lower_lipschitz(self) -> float:
        """√(4ρ²·sin²(α/2) + h²)."""
        chord = 2.0 * self.radius * math.sin(self.angle / 2.0)
        return math.hypot(chord, self.height)

    @property
    def upper_lipschitz(self) -> float:
        """√(ρ²α² + h²)."""
        return math.hypot(self.radius * self.angle, self.height)

    def native(self, params: np.ndarray) -> np.ndarray:
        """Trace the helix."""
        theta = self.start + self.angle * params[:, 0]
        return np.column_stack(
            [
                self.radius * np.cos(theta),
                self.radius * np.sin(theta),
                self.base + self.height * params[:, 0],
            ]
        )


def native_dim(spec: ManifoldSpec) -> int:
    """Return the dimension k of the space the native chart maps land in."""
    return {
        BuiltinManifold.AFFINE: spec.intrinsic_dim,
        BuiltinManifold.CIRCLE: 2,
        BuiltinManifold.TORUS: 4,
        BuiltinManifold.HELIX: 3,
    }[spec.kind]


def _charts(spec: ManifoldSpec, frame: np.ndarray, offset: np.ndarray) -> list[Chart]:
    embedding = {"frame": frame, "offset": offset}
    count = spec.chart_count
    angle = 2 * math.pi / count
    if spec.kind is BuiltinManifold.AFFINE:
        return [AffineChart(dim=spec.intrinsic_dim, **embedding)]
    if spec.kind is BuiltinManifold.CIRCLE:
        return [
            CircleArcChart(radius=spec.radius, start=k * angle, angle=angle, **embedding)
            for k in range(count)
        ]
    if spec.kind is BuiltinManifold.TORUS:
        return [
            TorusArcChart(
                radius=spec.radius,
                starts=(k * angle, l * angle),
                angle=angle,
                **embedding,
            )
            for k in range(count)
            for l in range(count)  # noqa: E741
        ]
    step = spec.radius / count
    return [
        HelixChart(
            radius=spec.radius,
            start=k * angle,
            angle=angle,
            height=step,
            base=k * step - spec.radius / 2.0,
            **embedding,
        )
        for k in range(count)
    ]


def build_manifold(spec: ManifoldSpec) -> Manifold:
    """Build a built-in manifold from its config-file description.

    Circles and helices are split into `chart_count` arcs of angle 2π/r, tori into
    r² products of such arcs. The native image is placed into R^d through an
    orthonormal frame, rotated when `rotation_seed` is set, and moved by `offset`.
    """
    intrinsic_dim = {
        BuiltinManifold.AFFINE: spec.intrinsic_dim,
        BuiltinManifold.CIRCLE: 1,
        BuiltinManifold.TORUS: 2,
        BuiltinManifold.HELIX: 1,
    }[spec.kind]
    frame = orthonormal_frame(spec.ambient_dim, native_dim(spec), spec.rotation_seed)
    if len(spec.offset) > spec.ambient_dim:
        raise ContractViolationError("offset longer than the ambient dimension")
    offset = np.zeros(spec.ambient_dim)
    offset[: len(spec.offset)] = spec.offset
    charts = _charts(spec, frame, offset)
    bound = max(chart.sup_norm_bound() for chart in charts)
    return Manifold(
        charts=tuple(charts),
        ambient_dim=spec.ambient_dim,
        intrinsic_dim=intrinsic_dim,
        bound=max(1.0, bound),
    )

import numpy as np
import pytest

from mfnet.core.constructor import band_scale, face_distance
from mfnet.core.manifold import (
    GridSpec,
    Manifold,
    ManifoldSpec,
    build_manifold,
    sample_points,
)
from mfnet.core.taylor import SmoothTarget, TargetSpec, build_target
from mfnet.core.types import BuiltinManifold, BuiltinTarget

WAVE = TargetSpec(kind=BuiltinTarget.PLANE_WAVE, q=1)


@pytest.fixture()
def tilted_spec() -> ManifoldSpec:
    """Return a rotated circle, which crosses the grid faces transversally."""
    return ManifoldSpec(kind=BuiltinManifold.CIRCLE, ambient_dim=3, rotation_seed=3)


@pytest.fixture()
def tilted(tilted_spec: ManifoldSpec) -> Manifold:
    return build_manifold(tilted_spec)


@pytest.fixture()
def tilted_wave(tilted_spec: ManifoldSpec, tilted: Manifold) -> SmoothTarget:
    return build_target(WAVE, tilted_spec, tilted.bound)


@pytest.fixture()
def line_spec() -> ManifoldSpec:
    """Return the unit interval as a manifold of R¹."""
    return ManifoldSpec(kind=BuiltinManifold.AFFINE, ambient_dim=1)


@pytest.fixture()
def line(line_spec: ManifoldSpec) -> Manifold:
    return build_manifold(line_spec)


@pytest.fixture()
def line_wave(line_spec: ManifoldSpec, line: Manifold) -> SmoothTarget:
    return build_target(WAVE, line_spec, line.bound)


def split_points(
    manifold: Manifold, grid: GridSpec, p: float, n: int, seed: int
) -> tuple[np.ndarray, np.ndarray]:
    """Sample the manifold and split into safe points and boundary-band points."""
    delta = 1.0 / band_scale(grid.M, p)
    points = sample_points(manifold, n, seed)
    distance = face_distance(points, grid)
    return points[distance >= 2 * delta], points[distance < delta]

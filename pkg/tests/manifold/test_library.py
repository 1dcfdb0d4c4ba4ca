import math

import numpy as np
import pytest

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.manifold import (
    CircleArcChart,
    FunctionChart,
    Manifold,
    ManifoldSpec,
    build_manifold,
    manifold_constants,
    orthonormal_frame,
    sample_points,
    slot_capacity,
    verify_bilipschitz,
)
from mfnet.core.types import BuiltinManifold


def test_orthonormal_frame() -> None:
    np.testing.assert_array_equal(orthonormal_frame(4, 2, None), np.eye(4)[:, :2])

    frame = orthonormal_frame(10, 3, 5)

    np.testing.assert_allclose(frame.T @ frame, np.eye(3), atol=1e-12)


def test_orthonormal_frame_rejects_large_native_dim() -> None:
    with pytest.raises(ContractViolationError, match="cannot embed"):
        orthonormal_frame(2, 3, None)


@pytest.mark.parametrize(
    ("kind", "ambient_dim", "intrinsic_dim", "charts"),
    [
        (BuiltinManifold.AFFINE, 3, 1, 1),
        (BuiltinManifold.CIRCLE, 3, 1, 2),
        (BuiltinManifold.TORUS, 4, 2, 4),
        (BuiltinManifold.HELIX, 3, 1, 2),
    ],
    ids=["affine", "circle", "torus", "helix"],
)
def test_build_manifold(
    kind: BuiltinManifold, ambient_dim: int, intrinsic_dim: int, charts: int
) -> None:
    spec = ManifoldSpec(kind=kind, ambient_dim=ambient_dim, radius=0.3)

    manifold = build_manifold(spec)

    assert manifold.ambient_dim == ambient_dim
    assert manifold.intrinsic_dim == intrinsic_dim
    assert manifold.chart_count == charts
    assert manifold.bound >= 1.0


def test_circle_embedded_in_ten_dimensions() -> None:
    spec = ManifoldSpec(
        kind=BuiltinManifold.CIRCLE, ambient_dim=10, radius=0.45, rotation_seed=2
    )

    points = sample_points(build_manifold(spec), 500, 0)

    np.testing.assert_allclose(np.linalg.norm(points, axis=1), 0.45, atol=1e-12)


def test_arc_chart_constants() -> None:
    chart = CircleArcChart(
        radius=0.5,
        angle=math.pi / 2,
        frame=np.eye(2),
        offset=np.zeros(2),
    )

    low, high = verify_bilipschitz(chart, 2000, 0)

    assert chart.lower_lipschitz <= low <= high <= chart.upper_lipschitz
    assert chart.upper_lipschitz == pytest.approx(0.25 * math.pi)


def test_sample_points_is_deterministic(circle: Manifold) -> None:
    first = sample_points(circle, 100, 3)
    second = sample_points(circle, 100, 3)
    other = sample_points(circle, 100, 4)

    np.testing.assert_array_equal(first, second)
    assert not np.array_equal(first, other)
    np.testing.assert_allclose(np.linalg.norm(first, axis=1), 0.45, atol=1e-12)


def test_sample_points_needs_positive_count(circle: Manifold) -> None:
    with pytest.raises(ContractViolationError, match="at least one"):
        sample_points(circle, 0, 0)


def test_manifold_constants(circle: Manifold) -> None:
    constants = manifold_constants(circle)

    upper = 0.45 * math.pi
    assert constants.c12 == pytest.approx(2 * (4 * upper + 4))
    assert constants.c13 == pytest.approx(max(1 / 0.9, 3 * 4 * (2 * upper + 2)))
    assert slot_capacity(circle, 4) == math.ceil(constants.c13 * 4)


def test_function_chart_checks_constants() -> None:
    with pytest.raises(ContractViolationError, match="exceeds upper"):
        FunctionChart(func=lambda t: t, dims=(1, 1), constants=(2.0, 1.0))


def test_manifold_checks_containment() -> None:
    chart = FunctionChart(
        func=lambda t: 5.0 * t, dims=(1, 1), constants=(5.0, 5.0)
    )
    with pytest.raises(ContractViolationError, match="leaves"):
        Manifold(charts=(chart,), ambient_dim=1, intrinsic_dim=1, bound=1.0)

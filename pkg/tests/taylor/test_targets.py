import math

import numpy as np
import pytest

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.manifold import Manifold, ManifoldSpec, sample_points
from mfnet.core.taylor import (
    EmbeddedTarget,
    FiniteDifferenceTarget,
    PlaneWaveTarget,
    PolynomialTarget,
    SmoothTarget,
    TargetSpec,
    build_target,
    check_smoothness,
)
from mfnet.core.types import BuiltinManifold, BuiltinTarget


def test_polynomial_partials() -> None:
    target = PolynomialTarget.create(2, [((2, 0), 1.0), ((1, 1), 3.0)], q=2)
    points = np.array([[0.5, -1.0], [2.0, 1.0]])

    np.testing.assert_allclose(target(points), [0.25 - 1.5, 4.0 + 6.0])
    np.testing.assert_allclose(target.partial((1, 0), points), [1.0 - 3.0, 4.0 + 3.0])
    np.testing.assert_allclose(target.partial((1, 1), points), [3.0, 3.0])
    np.testing.assert_allclose(target.partial((0, 2), points), [0.0, 0.0])
    assert target.p == 3.0
    assert (target.q, target.s) == (2, 1.0)


def test_polynomial_rejects_exponent_length() -> None:
    with pytest.raises(ContractViolationError, match="exponent length"):
        PolynomialTarget.create(2, [((1,), 1.0)], q=1)


def test_plane_wave_partials_match_differences(rng: np.random.Generator) -> None:
    wave = PlaneWaveTarget.create(1.5, [2.0, -1.0], 0.3, q=2)
    numeric = FiniteDifferenceTarget(
        dim=2, p=3.0, holder_constant=1.0, cq_norm=1.0, func=wave.value
    )
    points = rng.uniform(-1.0, 1.0, size=(50, 2))

    np.testing.assert_allclose(
        numeric.partials(points), wave.partials(points), atol=1e-5
    )


def test_plane_wave_smoothness_record(
    circle: Manifold, plane_wave: SmoothTarget
) -> None:
    check = check_smoothness(plane_wave, sample_points(circle, 500, 0))

    assert check.norm_ok
    assert check.holder_ok
    assert plane_wave.p == 2.0


def test_build_plane_wave_on_circle(plane_wave: SmoothTarget) -> None:
    assert isinstance(plane_wave, PlaneWaveTarget)
    assert plane_wave.frequencies == (2.0, 2.0, 0.0)


def test_build_plane_wave_checks_frequencies(circle_spec: ManifoldSpec) -> None:
    spec = TargetSpec(kind=BuiltinTarget.PLANE_WAVE, frequencies=(1.0,))

    with pytest.raises(ContractViolationError, match="2 frequencies"):
        build_target(spec, circle_spec)


def test_quadratic_on_segment(quadratic: SmoothTarget) -> None:
    point = np.array([[0.3, 0.0, 0.0]])

    assert isinstance(quadratic, EmbeddedTarget)
    assert quadratic(point)[0] == pytest.approx(0.04)
    assert quadratic.partial((1, 0, 0), point)[0] == pytest.approx(0.4)
    assert quadratic.partial((0, 1, 0), point)[0] == 0.0
    assert quadratic.partial((2, 0, 0), point)[0] == pytest.approx(2.0)


def test_rotated_target_uses_differences() -> None:
    manifold_spec = ManifoldSpec(
        kind=BuiltinManifold.AFFINE, ambient_dim=2, rotation_seed=4
    )
    target = build_target(
        TargetSpec(kind=BuiltinTarget.QUADRATIC, q=2), manifold_spec
    )
    assert isinstance(target, EmbeddedTarget)
    direction = target.frame[:, 0]
    point = 0.5 * direction

    assert target(point)[0] == pytest.approx(0.25)
    gradient = [target.partial(axis, point)[0] for axis in ((1, 0), (0, 1))]
    np.testing.assert_allclose(gradient, direction, atol=1e-6)


def test_constant_target_has_no_variation() -> None:
    target = build_target(
        TargetSpec(kind=BuiltinTarget.CONSTANT, q=0, amplitude=2.0),
        ManifoldSpec(kind=BuiltinManifold.AFFINE, ambient_dim=1),
    )

    assert target(np.array([[0.7]]))[0] == 2.0
    assert target.holder_constant == 0.0
    assert math.isclose(target.cq_norm, 2.0)

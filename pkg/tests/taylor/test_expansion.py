import numpy as np
import pytest

from mfnet.core.manifold import GridSpec
from mfnet.core.taylor import (
    PlaneWaveTarget,
    PolynomialTarget,
    fine_corners,
    piecewise_taylor,
    piecewise_taylor_many,
    taylor_poly,
)


def test_taylor_poly_reproduces_polynomials() -> None:
    target = PolynomialTarget.create(2, [((2, 0), 1.0), ((0, 1), -2.0)], q=2)

    value = taylor_poly(target, np.array([0.3, -0.2]), np.array([0.9, 0.4]))

    assert value == pytest.approx(0.81 - 0.8)


def test_taylor_poly_of_wave() -> None:
    wave = PlaneWaveTarget.create(1.0, [1.0], 0.0, q=1)

    assert taylor_poly(wave, np.array([0.0]), np.array([0.1])) == pytest.approx(0.1)


def test_fine_corners(grid: GridSpec) -> None:
    corners = fine_corners(grid, np.array([[0.3, -0.1, 0.25]]))

    np.testing.assert_array_equal(corners, [[0.25, -0.25, 0.25]])


def test_piecewise_taylor_exact_for_low_degree(
    grid: GridSpec, rng: np.random.Generator
) -> None:
    target = PolynomialTarget.create(
        3, [((1, 1, 0), 2.0), ((0, 0, 2), 1.0), ((0, 0, 0), -1.0)], q=2
    )
    points = rng.uniform(-1.0, 1.0, size=(200, 3))

    np.testing.assert_allclose(
        piecewise_taylor_many(target, grid, points), target(points), atol=1e-12
    )
    assert piecewise_taylor(target, grid, points[0]) == pytest.approx(
        target(points[0])[0]
    )


def test_piecewise_taylor_error_decays_like_power_of_side() -> None:
    wave = PlaneWaveTarget.create(1.0, [3.0], 0.2, q=1)
    points = np.linspace(-1.0, 1.0, 20001)[:, None]

    errors = [
        np.max(
            np.abs(
                piecewise_taylor_many(wave, GridSpec.unshifted(M, 1), points)
                - wave(points)
            )
        )
        for M in (2, 4)
    ]

    # fine side shrinks fourfold, error scales with side^p
    assert errors[1] <= errors[0] * 4.0**-wave.p * 1.5

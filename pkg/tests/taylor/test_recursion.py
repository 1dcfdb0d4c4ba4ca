import numpy as np
import pytest

from mfnet.core.exceptions import EnumerationMissError
from mfnet.core.manifold import GridSpec, Manifold, build_cube_table, sample_points
from mfnet.core.taylor import (
    SmoothTarget,
    build_recursion_table,
    phi_recursion,
    piecewise_taylor_many,
)


@pytest.mark.parametrize("M", [2, 3])
def test_recursion_matches_piecewise_taylor(
    circle: Manifold, plane_wave: SmoothTarget, M: int
) -> None:
    grid = GridSpec(M=M, shift=(1 / (2 * M * M), 0.0, 0.0))
    table = build_recursion_table(plane_wave, build_cube_table(circle, grid))
    points = sample_points(circle, 300, 7)

    values = [
        phi_recursion(plane_wave, circle, grid, x, table).phi_1_3 for x in points
    ]

    np.testing.assert_allclose(
        values, piecewise_taylor_many(plane_wave, grid, points), atol=1e-12
    )


def test_recursion_state(
    circle: Manifold, plane_wave: SmoothTarget, grid: GridSpec
) -> None:
    x = sample_points(circle, 1, 0)[0]

    state = phi_recursion(plane_wave, circle, grid, x)

    capacity = build_cube_table(circle, grid).capacity
    assert state.phi_2_1.shape == (capacity, 3)
    assert 0 <= state.slot < state.slot_count <= capacity
    assert np.sum(state.phi_4_1) == pytest.approx(state.slot_count * grid.fine_side)
    np.testing.assert_array_equal(state.phi_1_2, x)
    corner = state.phi_2_2
    assert np.all((corner <= x) & (x < corner + grid.fine_side))
    assert str(state).startswith("PhiState coarse=")


def test_recursion_raises_off_manifold(
    circle: Manifold, plane_wave: SmoothTarget, grid: GridSpec
) -> None:
    with pytest.raises(EnumerationMissError, match="no enumerated coarse cube"):
        phi_recursion(plane_wave, circle, grid, np.array([0.9, 0.9, 0.9]))

import numpy as np
import pytest

from mfnet.core.manifold import (
    FunctionChart,
    GridSpec,
    Manifold,
    ManifoldSpec,
    build_cube_table,
    build_manifold,
    enumerate_coarse_cubes,
    enumerate_fine_cubes,
    locate_cubes,
    manifold_constants,
    raster_fine_cells,
    sample_points,
)
from mfnet.core.types import BuiltinManifold


def test_segment_coarse_cubes(plane_segment: Manifold) -> None:
    cubes = enumerate_coarse_cubes(plane_segment, GridSpec.unshifted(4, 2))

    assert cubes == {(0, 0), (1, 0), (2, 0), (3, 0), (4, 0)}


def test_segment_fine_cubes(plane_segment: Manifold) -> None:
    grid = GridSpec.unshifted(4, 2)

    cells = enumerate_fine_cubes(plane_segment, grid, (1, 0))

    # y = 0.1 lies in fine row 1, x runs through the whole coarse cube
    assert cells == [(4, 1), (5, 1), (6, 1), (7, 1)]
    assert enumerate_fine_cubes(plane_segment, grid, (0, 3)) == []


@pytest.mark.parametrize(
    "spec",
    [
        ManifoldSpec(kind=BuiltinManifold.AFFINE, ambient_dim=3, rotation_seed=1),
        ManifoldSpec(kind=BuiltinManifold.CIRCLE, ambient_dim=3, rotation_seed=1),
        ManifoldSpec(kind=BuiltinManifold.TORUS, ambient_dim=4, radius=0.3),
    ],
    ids=["affine", "circle", "torus"],
)
@pytest.mark.parametrize("M", [2, 4, 8])
def test_cube_counts_within_bounds(spec: ManifoldSpec, M: int) -> None:
    manifold = build_manifold(spec)
    constants = manifold_constants(manifold)

    table = build_cube_table(manifold, GridSpec.unshifted(M, spec.ambient_dim))

    limit = M**manifold.intrinsic_dim
    assert len(table.coarse) <= constants.c12 * limit
    assert table.slot_count <= constants.c13 * limit
    assert table.slot_count <= table.capacity


def test_table_is_sorted_and_nested(circle: Manifold) -> None:
    grid = GridSpec(M=4, shift=(1 / 32, 0.0, 1 / 32))

    table = build_cube_table(circle, grid)

    assert list(table.coarse) == sorted(table.coarse)
    for coarse, cells in zip(table.coarse, table.fine, strict=True):
        assert list(cells) == sorted(cells)
        assert {tuple(k) for k in grid.coarse_of(np.array(cells))} == {coarse}
    assert table.lookup()[table.coarse[1]] == 1


def test_samples_lie_in_enumerated_cubes(circle: Manifold) -> None:
    grid = GridSpec.unshifted(4, 3)
    table = build_cube_table(circle, grid)
    cells = {cell for group in table.fine for cell in group}

    points = sample_points(circle, 2000, 1)

    rows = locate_cubes(points, grid.fine_side, grid.shift)
    located = {tuple(int(k) for k in row) for row in rows}
    assert located <= cells


def test_raster_marks_only_crossed_cubes() -> None:
    # y = x + 0.002 moves from cube (i, i) to (i, i + 1) just before x = (i + 1)/16
    chart = FunctionChart(
        func=lambda t: np.column_stack([t[:, 0], t[:, 0] + 0.002]),
        dims=(1, 2),
        constants=(1.0, 1.5),
    )
    diagonal = Manifold(charts=(chart,), ambient_dim=2, intrinsic_dim=1, bound=2.0)

    cells = raster_fine_cells(diagonal, GridSpec.unshifted(4, 2))

    expected = {(i, i) for i in range(17)} | {(i, i + 1) for i in range(16)}
    assert {tuple(int(k) for k in cell) for cell in cells} == expected
    assert [tuple(cell) for cell in cells] == sorted(expected)

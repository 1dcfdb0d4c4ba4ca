import math
from collections.abc import Iterator

import numpy as np

from mfnet.core.exceptions import CubeCountError
from mfnet.core.manifold.constants import manifold_constants
from mfnet.core.manifold.grid import cube_corner, locate_cubes
from mfnet.core.manifold.models import Chart, CubeIndex, CubeTable, GridSpec, Manifold
from mfnet.core.settings import BaseSettings

_RASTER_CHUNK = 1 << 16


def raster_steps(chart: Chart, M: int) -> int:
    """Return the number of raster steps per parameter axis.

    The base step 1/⌈2·C_{ψ,2}·√d*·M²⌉ moves images by less than half a fine side;
    it is refined by the configured oversampling factor.
    """
    settings = BaseSettings.get()
    base = math.ceil(2.0 * chart.upper_lipschitz * math.sqrt(chart.intrinsic_dim) * M * M)
    return max(base, 1) * settings.raster_oversampling


def _raster_slabs(chart: Chart, steps: int) -> Iterator[np.ndarray]:
    """Yield chart images on the parameter raster, slab by slab along axis 0.

    Slabs overlap in one row so that every raster cell lies in exactly one slab;
    each slab has shape (rows, steps + 1, ..., steps + 1, d).
    """
    dim = chart.intrinsic_dim
    axis = np.arange(steps + 1) / steps
    rows = max(2, _RASTER_CHUNK // (steps + 1) ** (dim - 1))
    for start in range(0, steps, rows - 1):
        head = axis[start : start + rows]
        mesh = np.meshgrid(head, *([axis] * (dim - 1)), indexing="ij")
        params = np.stack([m.ravel() for m in mesh], axis=1)
        yield chart.map(params).reshape(*mesh[0].shape, -1)


def _raster_edges(images: np.ndarray) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield the end points of all raster edges, one parameter axis at a time."""
    dim = images.shape[-1]
    for axis in range(images.ndim - 1):
        count = images.shape[axis]
        yield (
            np.take(images, np.arange(count - 1), axis=axis).reshape(-1, dim),
            np.take(images, np.arange(1, count), axis=axis).reshape(-1, dim),
        )


def _edge_points(start: np.ndarray, end: np.ndarray, grid: GridSpec) -> np.ndarray:
    """Densify raster edges leaving their fine cube.

    Each edge start + λ·(end − start) is split at its fine-cube face crossings;
    the midpoints of the pieces hold one point in every fine cube the edge runs
    through.
    """
    first = locate_cubes(start, grid.fine_side, grid.shift)
    last = locate_cubes(end, grid.fine_side, grid.shift)
    moved = np.any(first != last, axis=1)
    start, end, first, last = start[moved], end[moved], first[moved], last[moved]
    delta = end - start
    faces = cube_corner(np.maximum(first, last), grid.fine_side, grid.shift)
    with np.errstate(divide="ignore", invalid="ignore"):
        crossings = np.where(first != last, (faces - start) / delta, 1.0)
    count = len(start)
    bounds = np.sort(
        np.hstack([np.zeros((count, 1)), crossings, np.ones((count, 1))]), axis=1
    )
    middles = (bounds[:, :-1] + bounds[:, 1:]) / 2.0
    points = start[:, None, :] + middles[:, :, None] * delta[:, None, :]
    return points.reshape(-1, grid.dim)


def raster_fine_cells(manifold: Manifold, grid: GridSpec) -> np.ndarray:
    """Return the sorted unique fine-cube indices holding a point of the raster.

    The chart raster is densified along every raster edge by one point per fine
    cube the edge crosses, so a cube is marked exactly when the piecewise linear
    raster passes through it.
    """
    found = []
    for chart in manifold.charts:
        steps = raster_steps(chart, grid.M)
        for images in _raster_slabs(chart, steps):
            batches = [images.reshape(-1, grid.dim)]
            batches += [
                _edge_points(start, end, grid) for start, end in _raster_edges(images)
            ]
            points = np.vstack(batches)
            found.append(
                np.unique(locate_cubes(points, grid.fine_side, grid.shift), axis=0)
            )
    if not found:
        return np.zeros((0, grid.dim), dtype=np.int64)
    return np.unique(np.vstack(found), axis=0)


def _group(manifold: Manifold, grid: GridSpec) -> dict[CubeIndex, list[CubeIndex]]:
    fine = raster_fine_cells(manifold, grid)
    coarse = grid.coarse_of(fine)
    groups: dict[CubeIndex, list[CubeIndex]] = {}
    for coarse_index, fine_index in zip(coarse, fine, strict=True):
        groups.setdefault(tuple(int(k) for k in coarse_index), []).append(
            tuple(int(k) for k in fine_index)
        )
    return groups


def _check_coarse(manifold: Manifold, grid: GridSpec, count: int) -> None:
    if not manifold.charts:
        return
    limit = manifold_constants(manifold).c12 * grid.M**manifold.intrinsic_dim
    if count > limit:
        raise CubeCountError(
            f"{count} coarse cubes meet the manifold", f"bound {limit:.6g}"
        )


def _check_fine(manifold: Manifold, grid: GridSpec, count: int) -> None:
    limit = manifold_constants(manifold).c13 * grid.M**manifold.intrinsic_dim
    if count > limit:
        raise CubeCountError(
            f"{count} fine cubes in one coarse cube", f"bound {limit:.6g}"
        )


def enumerate_coarse_cubes(manifold: Manifold, grid: GridSpec) -> set[CubeIndex]:
    """Return the coarse cubes of side 1/M that meet the manifold.

    Intersection is decided by rasterizing every chart; a cube touched only in a
    sliver off the piecewise linear raster can be missed.

    Raises:
        CubeCountError: When more than c12·M^{d*} cubes are found
    """
    groups = _group(manifold, grid)
    _check_coarse(manifold, grid, len(groups))
    return set(groups)


def enumerate_fine_cubes(
    manifold: Manifold, grid: GridSpec, coarse_index: CubeIndex
) -> list[CubeIndex]:
    """Return the fine cubes of side 1/M² inside `coarse_index` meeting the manifold.

    The list is sorted lexicographically and empty for a coarse cube that misses
    the manifold.

    Raises:
        CubeCountError: When more than c13·M^{d*} fine cubes are found
    """
    cells = _group(manifold, grid).get(tuple(coarse_index), [])
    if cells:
        _check_fine(manifold, grid, len(cells))
    return sorted(cells)


def build_cube_table(manifold: Manifold, grid: GridSpec) -> CubeTable:
    """Enumerate coarse cubes and their fine cubes in one rasterization pass.

    Raises:
        CubeCountError: When either counting bound is exceeded
    """
    groups = _group(manifold, grid)
    _check_coarse(manifold, grid, len(groups))
    coarse = sorted(groups)
    for index in coarse:
        _check_fine(manifold, grid, len(groups[index]))
    capacity = (
        math.ceil(manifold_constants(manifold).c13 * grid.M**manifold.intrinsic_dim)
        if manifold.charts
        else 1
    )
    return CubeTable(
        grid=grid,
        coarse=tuple(coarse),
        fine=tuple(tuple(sorted(groups[index])) for index in coarse),
        capacity=capacity,
    )

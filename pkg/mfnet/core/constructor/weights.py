from collections.abc import Sequence

import numpy as np

from mfnet.core.manifold import GridSpec, locate_cubes


def fine_offsets(points: np.ndarray, grid: GridSpec) -> np.ndarray:
    """Return x − corner of the fine cube containing each row."""
    points = np.atleast_2d(np.asarray(points, dtype=np.float64))
    index = locate_cubes(points, grid.fine_side, grid.shift)
    return points - grid.fine_corner(index)


def weight_w_many(points: np.ndarray, grid: GridSpec) -> np.ndarray:
    """Evaluate the tensor-product B-spline weight of `grid` at every row."""
    offsets = fine_offsets(points, grid)
    scale = 2.0 * grid.M * grid.M
    hats = np.maximum(1.0 - scale * np.abs(grid.half_fine_side - offsets), 0.0)
    return np.prod(hats, axis=1)


def weight_w(x: Sequence[float] | np.ndarray, grid: GridSpec) -> float:
    """Return Π_j (1 − 2M²·|corner_j + 1/(2M²) − x_j|)₊ for the fine cube of x.

    The weight peaks with value 1 at the cube center and vanishes on its faces.
    """
    return float(weight_w_many(np.atleast_1d(np.asarray(x, dtype=np.float64)), grid)[0])


def face_distance(points: np.ndarray, grid: GridSpec) -> np.ndarray:
    """Return the distance of every row to the nearest face of its fine cube."""
    offsets = fine_offsets(points, grid)
    return np.min(np.minimum(offsets, grid.fine_side - offsets), axis=1)

from collections.abc import Sequence

import numpy as np

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.manifold.models import CubeIndex


def cube_corner(
    index: Sequence[int] | np.ndarray, side: float, shift: Sequence[float] | np.ndarray
) -> np.ndarray:
    """Return the bottom-left corner k·side + shift of the half-open cube `index`."""
    return np.asarray(index) * side + np.asarray(shift, dtype=np.float64)


def locate_cubes(
    points: np.ndarray, side: float, shift: Sequence[float] | np.ndarray
) -> np.ndarray:
    """Return the integer index of the half-open cube containing each row.

    The floor estimate is corrected against the corner arithmetic of
    `cube_corner`, so that corner(k) ≤ x < corner(k + 1) holds exactly.
    """
    if side <= 0:
        raise ContractViolationError("cube side must be positive", side)
    points = np.atleast_2d(np.asarray(points, dtype=np.float64))
    shift = np.asarray(shift, dtype=np.float64)
    index = np.floor((points - shift) / side).astype(np.int64)
    index -= (points < cube_corner(index, side, shift)).astype(np.int64)
    index += (points >= cube_corner(index + 1, side, shift)).astype(np.int64)
    return index


def locate_cube(
    x: Sequence[float] | np.ndarray, side: float, shift: Sequence[float] | np.ndarray
) -> CubeIndex:
    """Return k with k_j·side + shift_j ≤ x_j < (k_j + 1)·side + shift_j."""
    return tuple(int(k) for k in locate_cubes(np.atleast_1d(x), side, shift)[0])

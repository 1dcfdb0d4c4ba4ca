import numpy as np

from mfnet.core.manifold import GridSpec, locate_cubes
from mfnet.core.taylor.models import SmoothTarget
from mfnet.core.taylor.multi_index import factorials, monomials


def taylor_from_derivatives(
    derivatives: np.ndarray, offsets: np.ndarray, degree: int
) -> np.ndarray:
    """Return Σ_j ∂^j f(x₀)·(x − x₀)^j / j! row by row.

    Args:
        derivatives: Partials at the expansion points, shape (n, B), graded order
        offsets: Differences x − x₀, shape (n, d)
        degree: Total degree q of the polynomial
    """
    offsets = np.atleast_2d(offsets)
    terms = np.atleast_2d(derivatives) / factorials(offsets.shape[1], degree)
    return np.sum(terms * monomials(offsets, degree), axis=1)


def taylor_poly(target: SmoothTarget, x0: np.ndarray, x: np.ndarray) -> float:
    """Return the Taylor polynomial of total degree q of f around x0, at x."""
    x0 = np.atleast_2d(np.asarray(x0, dtype=np.float64))
    x = np.atleast_2d(np.asarray(x, dtype=np.float64))
    return float(taylor_from_derivatives(target.partials(x0), x - x0, target.q)[0])


def fine_corners(grid: GridSpec, points: np.ndarray) -> np.ndarray:
    """Return the bottom-left corner of the fine cube containing each row."""
    return grid.fine_corner(locate_cubes(points, grid.fine_side, grid.shift))


def piecewise_taylor_many(
    target: SmoothTarget, grid: GridSpec, points: np.ndarray
) -> np.ndarray:
    """Evaluate the piecewise Taylor polynomial on the fine partition at many rows."""
    points = np.atleast_2d(np.asarray(points, dtype=np.float64))
    corners = fine_corners(grid, points)
    return taylor_from_derivatives(target.partials(corners), points - corners, target.q)


def piecewise_taylor(target: SmoothTarget, grid: GridSpec, x: np.ndarray) -> float:
    """Return the Taylor polynomial around the corner of the fine cube of x, at x."""
    return float(piecewise_taylor_many(target, grid, x)[0])

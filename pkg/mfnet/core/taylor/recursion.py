import numpy as np

from mfnet.core.exceptions import EnumerationMissError
from mfnet.core.manifold import CubeTable, GridSpec, Manifold, build_cube_table
from mfnet.core.models import BaseModel
from mfnet.core.taylor.expansion import taylor_from_derivatives
from mfnet.core.taylor.models import PhiState, SmoothTarget
from mfnet.core.types import FrozenArray


class RecursionTable(BaseModel):
    """Per coarse cube the corners, partials and side lengths of its fine cubes.

    Row block i belongs to `cubes.coarse[i]`; `corners[i]` has shape (N_i, d) and
    `derivatives[i]` shape (N_i, B) in graded lexicographic order.
    """

    cubes: CubeTable
    lower: FrozenArray
    upper: FrozenArray
    corners: tuple[FrozenArray, ...]
    derivatives: tuple[FrozenArray, ...]


def build_recursion_table(
    target: SmoothTarget, cubes: CubeTable
) -> RecursionTable:
    """Evaluate the corners and partials needed by the recursion once per grid."""
    grid = cubes.grid
    coarse = np.array(cubes.coarse, dtype=np.int64).reshape(-1, grid.dim)
    corners = tuple(
        grid.fine_corner(np.array(cells, dtype=np.int64)) for cells in cubes.fine
    )
    return RecursionTable(
        cubes=cubes,
        lower=grid.coarse_corner(coarse),
        upper=grid.coarse_upper(coarse),
        corners=corners,
        derivatives=tuple(target.partials(points) for points in corners),
    )


def phi_recursion(
    target: SmoothTarget,
    manifold: Manifold,
    grid: GridSpec,
    x: np.ndarray,
    table: RecursionTable | None = None,
) -> PhiState:
    """Compute the piecewise Taylor polynomial at x by the three-step recursion.

    Step one sums corners, partials and fine side lengths of every coarse cube
    weighted by its indicator. Step two selects the fine cube via the sets
    A^(j) = {x: φ21^(j) ≤ x < φ21^(j) + φ41^(j)}. Step three evaluates the
    Taylor polynomial around the selected corner.

    Args:
        target: Smooth function with partials up to order q
        manifold: Manifold containing x
        grid: Two-scale partition
        x: Point on the manifold
        table: Precomputed table for `target` and `grid`, built when omitted

    Raises:
        EnumerationMissError: When x lies in no enumerated cube
    """
    if table is None:
        table = build_recursion_table(target, build_cube_table(manifold, grid))
    x = np.asarray(x, dtype=np.float64).reshape(-1)
    capacity = table.cubes.capacity
    width = len(table.derivatives[0][0]) if table.derivatives else 1

    phi_2_1 = np.zeros((capacity, grid.dim))
    phi_3_1 = np.zeros((width, capacity))
    phi_4_1 = np.zeros(capacity)
    inside = np.all((table.lower <= x) & (x < table.upper), axis=1)
    for position in np.flatnonzero(inside):
        count = len(table.corners[position])
        phi_2_1[:count] += table.corners[position] * 1.0
        phi_3_1[:, :count] += table.derivatives[position].T * 1.0
        phi_4_1[:count] += grid.fine_side * 1.0
    if not np.any(inside):
        raise EnumerationMissError(f"{x} lies in no enumerated coarse cube", str(grid))
    coarse_index = table.cubes.coarse[int(np.flatnonzero(inside)[0])]

    selected = np.all(
        (phi_2_1 <= x) & (x - phi_2_1 - phi_4_1[:, None] < 0.0), axis=1
    )
    if not np.any(selected):
        raise EnumerationMissError(f"{x} lies in no enumerated fine cube", str(grid))
    phi_2_2 = selected.astype(float) @ phi_2_1
    phi_3_2 = phi_3_1 @ selected.astype(float)
    phi_1_3 = float(taylor_from_derivatives(phi_3_2, x - phi_2_2, target.q)[0])
    return PhiState(
        phi_1_1=x,
        phi_2_1=phi_2_1,
        phi_3_1=phi_3_1,
        phi_4_1=phi_4_1,
        phi_1_2=x,
        phi_2_2=phi_2_2,
        phi_3_2=phi_3_2,
        phi_1_3=phi_1_3,
        coarse_index=coarse_index,
        slot=int(np.flatnonzero(selected)[0]),
        slot_count=len(table.corners[int(np.flatnonzero(inside)[0])]),
    )

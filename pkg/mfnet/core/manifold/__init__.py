from mfnet.core.manifold.constants import manifold_constants, slot_capacity
from mfnet.core.manifold.enumerate import (
    build_cube_table,
    enumerate_coarse_cubes,
    enumerate_fine_cubes,
    raster_fine_cells,
    raster_steps,
)
from mfnet.core.manifold.grid import cube_corner, locate_cube, locate_cubes
from mfnet.core.manifold.library import (
    AffineChart,
    CircleArcChart,
    EmbeddedChart,
    HelixChart,
    TorusArcChart,
    build_manifold,
    native_dim,
    orthonormal_frame,
)
from mfnet.core.manifold.models import (
    Chart,
    CubeIndex,
    CubeTable,
    FunctionChart,
    GridSpec,
    Manifold,
    ManifoldConstants,
    ManifoldSpec,
)
from mfnet.core.manifold.sampling import (
    map_chart_params,
    sample_chart_params,
    sample_points,
    verify_bilipschitz,
)

__all__ = (
    "AffineChart",
    "build_cube_table",
    "build_manifold",
    "Chart",
    "CircleArcChart",
    "cube_corner",
    "CubeIndex",
    "CubeTable",
    "EmbeddedChart",
    "enumerate_coarse_cubes",
    "enumerate_fine_cubes",
    "FunctionChart",
    "GridSpec",
    "HelixChart",
    "locate_cube",
    "locate_cubes",
    "Manifold",
    "manifold_constants",
    "ManifoldConstants",
    "ManifoldSpec",
    "map_chart_params",
    "native_dim",
    "orthonormal_frame",
    "raster_fine_cells",
    "raster_steps",
    "sample_chart_params",
    "sample_points",
    "slot_capacity",
    "TorusArcChart",
    "verify_bilipschitz",
)

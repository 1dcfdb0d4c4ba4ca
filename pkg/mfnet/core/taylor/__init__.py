from mfnet.core.taylor.expansion import (
    fine_corners,
    piecewise_taylor,
    piecewise_taylor_many,
    taylor_from_derivatives,
    taylor_poly,
)
from mfnet.core.taylor.models import PhiState, SmoothnessCheck, SmoothTarget, TargetSpec
from mfnet.core.taylor.multi_index import factorials, monomials, multi_indices
from mfnet.core.taylor.recursion import (
    RecursionTable,
    build_recursion_table,
    phi_recursion,
)
from mfnet.core.taylor.targets import (
    EmbeddedTarget,
    FiniteDifferenceTarget,
    PlaneWaveTarget,
    PolynomialTarget,
    build_target,
    central_difference,
    check_smoothness,
    embed_target,
)

__all__ = (
    "build_recursion_table",
    "build_target",
    "central_difference",
    "check_smoothness",
    "embed_target",
    "EmbeddedTarget",
    "factorials",
    "fine_corners",
    "FiniteDifferenceTarget",
    "monomials",
    "multi_indices",
    "PhiState",
    "phi_recursion",
    "piecewise_taylor",
    "piecewise_taylor_many",
    "PlaneWaveTarget",
    "PolynomialTarget",
    "RecursionTable",
    "SmoothnessCheck",
    "SmoothTarget",
    "TargetSpec",
    "taylor_from_derivatives",
    "taylor_poly",
)

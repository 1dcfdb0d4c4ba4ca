from mfnet.core.types.array import FrozenArray, as_frozen_array
from mfnet.core.types.enums import (
    BuiltinManifold,
    BuiltinTarget,
    ExperimentKind,
    PreconditionPolicy,
)
from mfnet.core.types.path import AnchoredPath, AssetsPath, WorkPath

__all__ = (
    "AnchoredPath",
    "as_frozen_array",
    "AssetsPath",
    "BuiltinManifold",
    "BuiltinTarget",
    "ExperimentKind",
    "FrozenArray",
    "PreconditionPolicy",
    "WorkPath",
)

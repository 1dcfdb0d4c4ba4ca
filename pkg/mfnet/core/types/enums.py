from enum import Enum


class PreconditionPolicy(Enum):
    """How builders react when a lower bound on M or R is not met."""

    RAISE = "raise"
    WARN = "warn"


class ExperimentKind(Enum):
    """Kinds of experiments the harness can run."""

    APPROX_SWEEP = "approx_sweep"
    RATE_SWEEP = "rate_sweep"
    DIM_STUDY = "dim_study"
    INVARIANTS = "invariants"


class BuiltinManifold(Enum):
    """Manifolds shipped with analytic bi-Lipschitz constants."""

    AFFINE = "affine"
    CIRCLE = "circle"
    TORUS = "torus"
    HELIX = "helix"


class BuiltinTarget(Enum):
    """Target functions shipped with analytic partial derivatives."""

    CONSTANT = "constant"
    LINEAR = "linear"
    QUADRATIC = "quadratic"
    PLANE_WAVE = "plane_wave"

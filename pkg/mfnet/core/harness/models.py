import math
from typing import Annotated, Self

from pydantic import (
    Field,
    NonNegativeFloat,
    NonNegativeInt,
    PositiveFloat,
    PositiveInt,
    model_validator,
)

from mfnet.core.exceptions import ConfigError, ContractViolationError
from mfnet.core.manifold import ManifoldSpec
from mfnet.core.models import BaseModel
from mfnet.core.taylor import TargetSpec
from mfnet.core.types import ExperimentKind, FrozenArray

GridSize = Annotated[int, Field(ge=2)]
SampleSize = Annotated[int, Field(ge=2)]


class ExperimentConfig(BaseModel):
    """One experiment as described by a config file.

    Repetition r of every sweep point uses seed `seeds[r]`; when no seeds are
    given, repetitions use the seeds 0..repetitions−1.
    """

    kind: ExperimentKind
    manifold: ManifoldSpec
    target: TargetSpec
    grid_sizes: tuple[GridSize, ...] = ()
    sample_sizes: tuple[SampleSize, ...] = ()
    ambient_dims: tuple[PositiveInt, ...] = ()
    repetitions: PositiveInt = 1
    seeds: tuple[NonNegativeInt, ...] = ()
    noise: NonNegativeFloat = 0.0
    eval_points: PositiveInt = 10000
    test_points: PositiveInt = 10000
    c2: PositiveFloat = 3.0
    c3: PositiveFloat = 1.0
    c4: PositiveFloat = 1.0
    learning_rate: PositiveFloat = 1e-2
    momentum: Annotated[float, Field(ge=0.0, lt=1.0)] = 0.9
    epochs: PositiveInt = 2000
    batch_size: PositiveInt = 64
    output: str = "experiment"

    @model_validator(mode="after")
    def check_lists(self) -> Self:
        """Ensure the sweep lists of the experiment kind are present and seeds fit."""
        needed = {
            ExperimentKind.APPROX_SWEEP: ("grid_sizes",),
            ExperimentKind.RATE_SWEEP: ("sample_sizes",),
            ExperimentKind.DIM_STUDY: ("sample_sizes", "ambient_dims"),
            ExperimentKind.INVARIANTS: (),
        }[self.kind]
        for name in needed:
            if not getattr(self, name):
                raise ConfigError(f"{self.kind.value} needs a non-empty list", name)
        if len(set(self.seeds)) != len(self.seeds):
            raise ConfigError("seeds must be distinct", self.seeds)
        if self.seeds and len(self.seeds) < self.repetitions:
            raise ConfigError(
                f"{self.repetitions} repetitions need as many seeds", self.seeds
            )
        return self

    def seed_for(self, repetition: int) -> int:
        """Return the seed of a repetition."""
        return self.seeds[repetition] if self.seeds else repetition


class ReportRow(BaseModel):
    """Error of one sub-run; failed sub-runs carry the error class as flag."""

    param: float
    rep: int
    seed: int
    error: float | None = None
    flag: str | None = None

    def __str__(self) -> str:
        """Format as one CSV-like line for logging."""
        value = self.flag or f"{self.error:.4g}"
        return f"param={self.param:g} rep={self.rep} seed={self.seed} error={value}"


class SummaryRow(BaseModel):
    """Median, minimum and maximum error over the repetitions of one parameter."""

    param: float
    median: float
    min: float
    max: float


class SlopeFit(BaseModel):
    """Least-squares line through (log x, log y) with its residual norm."""

    slope: float
    intercept: float
    residual: NonNegativeFloat
    stderr: NonNegativeFloat | None = None

    def __str__(self) -> str:
        """Format the fitted line for logging."""
        spread = "" if self.stderr is None else f" ± {self.stderr:.3f}"
        return f"SlopeFit slope={self.slope:.3f}{spread} residual={self.residual:.3g}"


class TrainingCurve(BaseModel):
    """Per-epoch training loss of one fit of a rate sweep."""

    param: float
    rep: int
    losses: FrozenArray


class ExperimentReport(BaseModel):
    """Rows, summary and fitted slope of one experiment run."""

    config: ExperimentConfig
    rows: tuple[ReportRow, ...]
    summary: tuple[SummaryRow, ...]
    slope: SlopeFit | None = None
    curves: tuple[TrainingCurve, ...] = ()
    extras: dict[str, str] = {}
    environment: dict[str, str] = {}

    @model_validator(mode="after")
    def check_slope(self) -> Self:
        """Ensure a slope is only fitted through at least three parameter values."""
        finite = [row for row in self.summary if math.isfinite(row.median)]
        if self.slope is not None and len(finite) < 3:
            raise ContractViolationError("slope needs at least three parameter values")
        return self

    @property
    def flagged(self) -> tuple[ReportRow, ...]:
        """Rows of failed sub-runs."""
        return tuple(row for row in self.rows if row.flag)

    def __str__(self) -> str:
        """Format as a short summary for logging."""
        slope = f", {self.slope}" if self.slope else ""
        return (
            f"ExperimentReport {self.config.kind.value} {len(self.rows)} rows, "
            f"{len(self.flagged)} flagged{slope}"
        )


class InvariantResult(BaseModel):
    """Outcome of one property of the built-in invariant suite."""

    name: str
    passed: bool
    detail: str

    def __str__(self) -> str:
        """Format as a status line for logging."""
        status = "ok" if self.passed else "FAILED"
        return f"{self.name} {status} {self.detail}"

import math
from typing import Annotated, Self

import numpy as np
from pydantic import Field, NonNegativeFloat, PositiveFloat, PositiveInt, model_validator

from mfnet.core.estimator.architecture import arch_for
from mfnet.core.exceptions import ContractViolationError
from mfnet.core.models import BaseModel
from mfnet.core.relu_net import Network, evaluate_scalar
from mfnet.core.types import FrozenArray


class EstimatorConfig(BaseModel):
    """Architecture, truncation level and optimizer budget of one least-squares fit.

    Defaults follow desk-scale runs: momentum SGD with lr 1e-2, momentum 0.9,
    2000 epochs and batches of min(64, n) rows.
    """

    L_n: PositiveInt
    r_n: PositiveInt
    beta_n: PositiveFloat
    c2: PositiveFloat = 3.0
    c3: PositiveFloat = 1.0
    c4: PositiveFloat = 1.0
    learning_rate: PositiveFloat = 1e-2
    momentum: Annotated[float, Field(ge=0.0, lt=1.0)] = 0.9
    epochs: PositiveInt = 2000
    batch_size: PositiveInt = 64
    seed: int = 0
    init_scale: PositiveFloat | None = None

    @classmethod
    def create(
        cls,
        n: int,
        p: float,
        d_star: int,
        c2: float = 3.0,
        c3: float = 1.0,
        c4: float = 1.0,
        **optimizer: float | int | None,
    ) -> "EstimatorConfig":
        """Derive L_n, r_n and β_n = c2·ln n for a sample of size n."""
        depth, width = arch_for(n, p, d_star, c3, c4)
        return cls(
            L_n=depth,
            r_n=width,
            beta_n=c2 * math.log(n),
            c2=c2,
            c3=c3,
            c4=c4,
            **optimizer,
        )

    def __str__(self) -> str:
        """Format with architecture and budget for logging."""
        return (
            f"EstimatorConfig F(L={self.L_n}, r={self.r_n}) beta={self.beta_n:.3g} "
            f"lr={self.learning_rate:g} epochs={self.epochs} seed={self.seed}"
        )


class Dataset(BaseModel):
    """Sample (X_i, Y_i), i = 1..n, drawn on a manifold with Gaussian noise."""

    xs: FrozenArray
    ys: FrozenArray
    seed: int
    sigma: NonNegativeFloat

    @model_validator(mode="after")
    def check_lengths(self) -> Self:
        """Ensure one response per point."""
        if self.xs.ndim != 2 or self.ys.shape != (self.xs.shape[0],):
            raise ContractViolationError(
                f"{self.xs.shape} points with {self.ys.shape} responses"
            )
        return self

    @property
    def n(self) -> int:
        """Sample size."""
        return len(self.ys)


class TrainingRun(BaseModel):
    """Best iterate of a fit with its per-epoch training loss curve.

    `curve[e]` is the full-sample loss after epoch e; entry 0 is the loss of the
    initialization.
    """

    net: Network
    curve: FrozenArray
    best_epoch: Annotated[int, Field(ge=0)]
    best_loss: NonNegativeFloat

    def __str__(self) -> str:
        """Format with best epoch and loss for logging."""
        return (
            f"TrainingRun {self.net.arch} best epoch {self.best_epoch} "
            f"loss {self.best_loss:.4g}"
        )


class TruncatedPredictor(BaseModel):
    """Predictor x ↦ max{−β, min{net(x), β}}."""

    net: Network
    beta: PositiveFloat

    def __call__(self, points: np.ndarray) -> np.ndarray:
        """Evaluate the clipped network at every row."""
        return np.clip(evaluate_scalar(self.net, points), -self.beta, self.beta)

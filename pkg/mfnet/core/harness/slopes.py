import math
from collections.abc import Sequence

import numpy as np

from mfnet.core.exceptions import SlopeFitError
from mfnet.core.harness.models import SlopeFit


def fit_slope(
    rows: Sequence[tuple[float, float]], log_transform: bool = True
) -> SlopeFit:
    """Fit y = slope·x + intercept by ordinary least squares.

    With `log_transform` the fit runs on (ln x, ln y), so the slope is the
    exponent of a power law. The residual is the Euclidean norm of the fit
    residuals; the standard error of the slope needs at least three rows.

    Raises:
        SlopeFitError: When fewer than two distinct x values are given or a value
            is not positive under the log transform
    """
    pairs = np.array(rows, dtype=np.float64).reshape(-1, 2)
    if len(np.unique(pairs[:, 0])) < 2:
        raise SlopeFitError("a slope needs two distinct x values", len(pairs))
    if not np.all(np.isfinite(pairs)):
        raise SlopeFitError("cannot fit non-finite values")
    if log_transform:
        if np.any(pairs <= 0):
            raise SlopeFitError("log-log fit of non-positive values", pairs.tolist())
        pairs = np.log(pairs)
    x, y = pairs[:, 0], pairs[:, 1]
    design = np.column_stack([x, np.ones_like(x)])
    (slope, intercept), *_ = np.linalg.lstsq(design, y, rcond=None)
    residuals = y - design @ np.array([slope, intercept])
    squares = float(residuals @ residuals)
    stderr = None
    if len(x) > 2:
        spread = float(np.sum((x - x.mean()) ** 2))
        stderr = math.sqrt(squares / (len(x) - 2) / spread)
    return SlopeFit(
        slope=float(slope),
        intercept=float(intercept),
        residual=math.sqrt(squares),
        stderr=stderr,
    )

import numpy as np
import pytest

from mfnet.core.exceptions import SlopeFitError
from mfnet.core.harness import fit_slope


def test_exact_power_law() -> None:
    xs = [2.0, 4.0, 8.0, 16.0]

    fit = fit_slope([(x, 3.0 * x**-2.0) for x in xs])

    assert fit.slope == pytest.approx(-2.0)
    assert fit.intercept == pytest.approx(np.log(3.0))
    assert fit.residual == pytest.approx(0.0, abs=1e-12)
    assert fit.stderr == pytest.approx(0.0, abs=1e-12)


def test_two_points_have_no_stderr() -> None:
    fit = fit_slope([(1.0, 1.0), (10.0, 0.1)])

    assert fit.slope == pytest.approx(-1.0)
    assert fit.stderr is None


def test_linear_fit() -> None:
    fit = fit_slope([(0.0, 1.0), (1.0, 3.0), (2.0, 5.5)], log_transform=False)

    assert fit.slope == pytest.approx(2.25)
    assert fit.residual > 0.0
    assert str(fit).startswith("SlopeFit slope=2.250 ±")


@pytest.mark.parametrize(
    ("rows", "message"),
    [
        ([(2.0, 1.0), (2.0, 3.0)], "two distinct"),
        ([(1.0, 1.0), (2.0, -1.0)], "non-positive"),
        ([(1.0, 1.0), (2.0, float("nan"))], "non-finite"),
    ],
    ids=["single x", "negative", "nan"],
)
def test_fit_rejects(rows: list[tuple[float, float]], message: str) -> None:
    with pytest.raises(SlopeFitError, match=message):
        fit_slope(rows)

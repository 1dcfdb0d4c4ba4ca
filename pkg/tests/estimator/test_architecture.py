import math

import pytest

from mfnet.core.estimator import EstimatorConfig, arch_for
from mfnet.core.exceptions import ContractViolationError


@pytest.mark.parametrize(
    ("n", "p", "d_star", "expected"),
    [
        (100, 2.0, 1, (5, 2)),
        (10_000, 2.0, 1, (10, 3)),
        (1000, 1.0, 2, (7, 6)),
    ],
)
def test_arch_for(n: int, p: float, d_star: int, expected: tuple[int, int]) -> None:
    assert arch_for(n, p, d_star, 1.0, 1.0) == expected


def test_arch_for_needs_two_samples() -> None:
    with pytest.raises(ContractViolationError, match="n ≥ 2"):
        arch_for(1, 2.0, 1, 1.0, 1.0)


def test_config_create() -> None:
    config = EstimatorConfig.create(100, 2.0, 1, c2=2.0, epochs=10, seed=3)

    assert (config.L_n, config.r_n) == (5, 2)
    assert config.beta_n == pytest.approx(2.0 * math.log(100))
    assert config.epochs == 10
    assert str(config).startswith("EstimatorConfig F(L=5, r=2)")

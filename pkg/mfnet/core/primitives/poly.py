import math
from collections.abc import Sequence

import numpy as np

from mfnet.core.exceptions import ContractViolationError, PrecisionError
from mfnet.core.primitives.models import Box, ErrorContract, Primitive
from mfnet.core.primitives.mult import build_mult_d, mult_d_error_bound
from mfnet.core.primitives.preconditions import enforce
from mfnet.core.relu_net import affine_input, linear_combine
from mfnet.core.taylor.multi_index import multi_indices
from mfnet.core.types import PreconditionPolicy


def poly_factor_count(N: int) -> int:
    """Number of factors per monomial product: y_i, N coordinates, padded to ≥ 2."""
    return max(N + 1, 2)


def poly_precision_threshold(N: int, a: float) -> float:
    """Return the smallest admissible R, log₄(2·4^{2(N+1)}·a^{2(N+1)})."""
    return 0.5 + 2.0 * (N + 1) * (1.0 + math.log(a, 4.0))


def build_poly(
    N: int,
    d: int,
    coefficients: Sequence[float],
    R: int,
    a: float = 1.0,
    policy: PreconditionPolicy = PreconditionPolicy.RAISE,
) -> Primitive:
    """Build a network computing p(x, y) = Σ_i r_i·y_i·m_i(x).

    The monomials m_i run over all x^j with ‖j‖₁ ≤ N in graded lexicographic
    order. Each product y_i·m_i(x) is computed by one d-ary multiplication network
    whose surplus factors are fed the constant 1.

    Args:
        N: Total degree of the polynomial
        d: Dimension of x
        coefficients: One coefficient r_i per monomial
        R: Precision parameter of the multiplication networks
        a: Bound on the absolute value of all inputs, at least 1
        policy: Reaction to R below the precision threshold

    Raises:
        PrecisionError: When R is too small and the policy is `RAISE`

    Returns:
        Primitive with inputs (x, y_1..y_B) and output p(x, y)
    """
    indices = multi_indices(d, N)
    if len(coefficients) != len(indices):
        raise ContractViolationError(
            f"{len(coefficients)} coefficients for {len(indices)} monomials"
        )
    if a < 1:
        raise ContractViolationError("polynomial networks need a ≥ 1", a)
    threshold = poly_precision_threshold(N, a)
    enforce(
        R >= threshold - 1e-12,
        f"polynomial network with R={R} is below its precision threshold",
        math.ceil(threshold - 1e-12),
        policy,
        PrecisionError,
    )
    factors = poly_factor_count(N)
    mult = build_mult_d(factors, R, a)
    monomial_count = len(indices)
    parts = []
    for position, index in enumerate(indices):
        selector = np.zeros((factors, d + monomial_count))
        offset = np.zeros(factors)
        selector[0, d + position] = 1.0
        row = 1
        for coordinate, power in enumerate(index):
            for _ in range(power):
                selector[row, coordinate] = 1.0
                row += 1
        offset[row:] = 1.0
        parts.append(affine_input(mult.net, selector, offset))
    net = linear_combine(parts, list(coefficients), 0.0)
    largest = max((abs(c) for c in coefficients), default=0.0)
    bound = monomial_count * largest * mult_d_error_bound(factors, R, a)
    return Primitive(
        net=net,
        contract=ErrorContract(
            depth=net.arch.depth,
            width=net.arch.width,
            sup_error_bound=max(bound, float(np.finfo(float).eps)),
            valid_domain=Box.cube(d + monomial_count, -a, a),
        ),
    )

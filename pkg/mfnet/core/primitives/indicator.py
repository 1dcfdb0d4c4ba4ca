from collections.abc import Sequence

import numpy as np

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.primitives.models import Box, ErrorContract, Primitive
from mfnet.core.relu_net import NetworkAssembler


def build_indicator(
    a_vec: Sequence[float], b_vec: Sequence[float], R: float
) -> Primitive:
    """Build the network σ(1 − R·Σ_i [σ(a_i + 1/R − x_i) + σ(x_i − b_i + 1/R)]).

    It equals the indicator of [a, b) away from the 1/R bands around the faces and
    takes values in [0, 1] everywhere.

    Raises:
        ContractViolationError: When a side of the cube is shorter than 2/R
    """
    lower = np.asarray(a_vec, dtype=np.float64)
    upper = np.asarray(b_vec, dtype=np.float64)
    if lower.shape != upper.shape or lower.ndim != 1:
        raise ContractViolationError("cube corners must be vectors of equal length")
    if R <= 0 or np.any(upper - lower < 2.0 / R - 1e-12):
        raise ContractViolationError(
            "indicator sides must be at least 2/R", f"R={R}, sides={upper - lower}"
        )
    dim = lower.size
    eye = np.eye(dim)
    assembler = NetworkAssembler(dim)
    bands = assembler.layer()
    bands.add(-eye, lower + 1.0 / R)
    bands.add(eye, -upper + 1.0 / R)
    assembler.push(bands)
    gate = assembler.layer()
    gate.add(-R * np.ones((1, 2 * dim)), 1.0)
    assembler.push(gate)
    output = assembler.layer()
    output.add(np.ones((1, 1)), 0.0)
    net = assembler.finish(output)
    return Primitive(
        net=net,
        contract=ErrorContract(
            depth=2,
            width=2 * dim,
            sup_error_bound=1.0,
            valid_domain=Box.everywhere(dim),
        ),
    )


def build_test(d: int, R: float) -> Primitive:
    """Build the gated indicator network of the inputs (x, a, b, s).

    The first layer holds the 2d face bands of [a, b) and σ(±s); the second layer
    computes σ(±s − R²·Σ bands). For |s| ≤ R the output equals s·1_{[a,b)}(x)
    away from the 1/R bands and lies between 0 and s everywhere, so the error
    never exceeds |s|.
    """
    if d < 1 or R <= 0:
        raise ContractViolationError("test network needs d ≥ 1 and R > 0", d, R)
    eye, zero = np.eye(d), np.zeros((d, d))
    assembler = NetworkAssembler(3 * d + 1)
    first = assembler.layer()
    first.add(np.hstack([-eye, eye, zero, np.zeros((d, 1))]), 1.0 / R)
    first.add(np.hstack([eye, zero, -eye, np.zeros((d, 1))]), 1.0 / R)
    value = first.add(np.vstack([_unit_row(3 * d + 1, 3 * d, sign) for sign in (1, -1)]))
    assembler.push(first)
    second = assembler.layer()
    penalty = np.zeros(first.width)
    penalty[: 2 * d] = -R * R
    signed = np.zeros(first.width)
    signed[value.start], signed[value.start + 1] = 1.0, -1.0
    second.add(np.vstack([signed + penalty, -signed + penalty]))
    assembler.push(second)
    output = assembler.layer()
    output.add(np.array([[1.0, -1.0]]), 0.0)
    net = assembler.finish(output)
    return Primitive(
        net=net,
        contract=ErrorContract(
            depth=2,
            width=2 * d + 2,
            sup_error_bound=1.0,
            valid_domain=Box(
                lower=(-np.inf,) * 3 * d + (-float(R),),
                upper=(np.inf,) * 3 * d + (float(R),),
            ),
            scale_input=3 * d,
        ),
    )


def _unit_row(width: int, index: int, sign: float) -> np.ndarray:
    row = np.zeros(width)
    row[index] = sign
    return row

import numpy as np

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.primitives.identity import build_identity_stack
from mfnet.core.primitives.models import Box, ErrorContract, Primitive
from mfnet.core.relu_net import (
    Network,
    NetworkAssembler,
    affine_input,
    compose,
    parallel,
)
from mfnet.core.utils import ceil_log2

# tooth g(t) = 2σ(t) − 4σ(t − ½) + 2σ(t − 1) on the three shifted neurons
_TOOTH_SHIFTS = np.array([0.0, 0.5, 1.0])
_TOOTH_WEIGHTS = np.array([2.0, -4.0, 2.0])


def mult_error_bound(R: int, b: float, head: int = 1) -> float:
    """Return the guaranteed sup error 2·b²·4^{−(R+head−1)} of `build_mult`."""
    return 2.0 * b * b * 4.0 ** -(R + head - 1)


def mult_d_error_bound(d: int, R: int, b: float, head: int = 1) -> float:
    """Return the sup error 4^{4d+1}·b^{4d}·d·4^{1−R−head} of `build_mult_d`."""
    return 4.0 ** (4 * d + 1) * b ** (4 * d) * d * 4.0 ** -(R + head - 1)


def mult_width(head: int = 1) -> int:
    """Return 4·(2^head + 1), the width of every `build_mult` network."""
    return 4 * (2**head + 1)


def _unit(width: int, index: int) -> np.ndarray:
    row = np.zeros(width)
    row[index] = 1.0
    return row


def _ramp_weights(values: np.ndarray, tail_slope: float) -> np.ndarray:
    """Return c with Σ_j c_j·σ(t − j/n) = values at t = j/n, linear between.

    Beyond t = 1 the sum continues with slope `tail_slope`.
    """
    n = len(values) - 1
    slopes = np.append(np.diff(values) * n, tail_slope)
    return np.diff(slopes, prepend=0.0)


def _squaring_network(R: int, b: float, head: int = 1) -> Network:
    """Approximate xy = b²(u² − v²) with u = |x+y|/(2b), v = |x−y|/(2b).

    Each square is the telescoping sawtooth sum t − Σ_s g_s(t)/4^s truncated after
    R + head − 1 teeth. Both channels run side by side. The first layer reads
    σ(±t − j/2^head) for j = 0..2^head and forms the first `head` teeth at once:
    the partial sum interpolates t² on the grid of mesh 2^{−head}. Later layers
    hold three tooth neurons and one carry of the partial sum, which stays
    non-negative.
    """
    count = 2**head
    shifts = np.arange(count + 1) / count
    carry_weights = _ramp_weights(shifts**2, 1.0)
    tooth_weights = _ramp_weights(np.arange(count + 1) % 2.0, 0.0)

    assembler = NetworkAssembler(2)
    first = assembler.layer()
    blocks = []
    for sign in (1.0, -1.0):
        direction = np.array([1.0, sign]) / (2.0 * b)
        rows = np.vstack([row for _ in shifts for row in (direction, -direction)])
        blocks.append(first.add(rows, -np.repeat(shifts, 2)))
    assembler.push(first)

    teeth, carries = [], []
    for block in blocks:
        # the pair σ(t − c), σ(−t − c) sums to σ(|t| − c) for c ≥ 0
        ramps = [
            _unit(first.width, block.start + 2 * j)
            + _unit(first.width, block.start + 2 * j + 1)
            for j in range(count + 1)
        ]
        teeth.append(sum(w * r for w, r in zip(tooth_weights, ramps, strict=True)))
        carries.append(sum(w * r for w, r in zip(carry_weights, ramps, strict=True)))

    for level in range(head + 1, head + R):
        plan = assembler.layer()
        new_blocks = [
            plan.add(
                np.vstack([tooth, tooth, tooth, carry]),
                np.concatenate([-_TOOTH_SHIFTS, [0.0]]),
            )
            for tooth, carry in zip(teeth, carries, strict=True)
        ]
        assembler.push(plan)
        teeth, carries = [], []
        for block in new_blocks:
            e = [_unit(plan.width, block.start + k) for k in range(4)]
            tooth = sum(w * e[k] for k, w in enumerate(_TOOTH_WEIGHTS))
            teeth.append(tooth)
            carries.append(e[3] - tooth / 4.0**level)

    output = assembler.layer()
    output.add((b * b * (carries[0] - carries[1])).reshape(1, -1), 0.0)
    return assembler.finish(output)


def build_mult(R: int, b: float = 1.0, head: int = 1) -> Primitive:
    """Build a network approximating the product of two numbers in [−b, b].

    Args:
        R: Number of hidden layers, the precision parameter
        b: Bound on the absolute value of both factors, at least 1
        head: Number of teeth formed at once by the first layer

    Returns:
        Primitive in F(R, 4·(2^head + 1)) with sup error 2·b²·4^{−(R+head−1)}
        on [−b, b]²
    """
    if R < 1:
        raise ContractViolationError("multiplication needs R ≥ 1", R)
    if b < 1:
        raise ContractViolationError("multiplication needs b ≥ 1", b)
    if head < 1:
        raise ContractViolationError("multiplication needs head ≥ 1", head)
    net = _squaring_network(R, b, head)
    return Primitive(
        net=net,
        contract=ErrorContract(
            depth=R,
            width=net.arch.width,
            sup_error_bound=mult_error_bound(R, b, head),
            valid_domain=Box.cube(2, -b, b),
        ),
    )


def build_mult_d(d: int, R: int, b: float = 1.0, head: int = 1) -> Primitive:
    """Build a network approximating the product of d numbers in [−b, b].

    Factors are multiplied pairwise along a balanced binary tree; an odd factor at
    any level is carried through an identity stack of the same depth. Level ℓ
    receives partial products bounded by b^{2^ℓ} + 1 and multiplies them with that
    bound. Every product uses `head` teeth in its first layer.

    Returns:
        Primitive in F(R·⌈log₂ d⌉, ·) with sup error
        4^{4d+1}·b^{4d}·d·4^{−(R+head−1)}
    """
    if d < 2:
        raise ContractViolationError("d-ary multiplication needs d ≥ 2", d)
    if R < 1:
        raise ContractViolationError("multiplication needs R ≥ 1", R)
    tree: Network | None = None
    count, level, bound = d, 0, float(b)
    while count > 1:
        pairs, odd = divmod(count, 2)
        mult = build_mult(R, bound, head).net
        parts = []
        for index in range(pairs):
            selector = np.zeros((2, count))
            selector[0, 2 * index] = selector[1, 2 * index + 1] = 1.0
            parts.append(affine_input(mult, selector, np.zeros(2)))
        if odd:
            selector = np.zeros((1, count))
            selector[0, count - 1] = 1.0
            parts.append(
                affine_input(build_identity_stack(1, R), selector, np.zeros(1))
            )
        stage = parallel(parts)
        tree = stage if tree is None else compose(stage, tree)
        count, level = pairs + odd, level + 1
        bound = float(b) ** (2**level) + 1.0
    assert tree is not None  # noqa: S101
    if tree.arch.depth != R * ceil_log2(d):
        raise ContractViolationError("product tree has unexpected depth")
    return Primitive(
        net=tree,
        contract=ErrorContract(
            depth=tree.arch.depth,
            width=tree.arch.width,
            sup_error_bound=mult_d_error_bound(d, R, b, head),
            valid_domain=Box.cube(d, -b, b),
        ),
    )

"""Fused indicator and gate layers shared by the recursion networks.

The recursion networks only need the indicator of every enumerated coarse cube,
the sets A^(j) of every recursion slot and the gated slot values. Instead of
running one indicator or test network per quantity side by side, each quantity is
computed once by a neuron block of a `NetworkAssembler`; later blocks read it
through linear functionals over the previous layer.
"""

import numpy as np

from mfnet.core.relu_net import LayerPlan, Network, NetworkAssembler
from mfnet.core.taylor import RecursionTable


def _place(width: int, block: slice, matrix: np.ndarray) -> np.ndarray:
    """Spread `matrix`, which reads the neurons of `block`, over a layer of `width`."""
    matrix = np.atleast_2d(matrix)
    rows = np.zeros((matrix.shape[0], width))
    rows[:, block] = matrix
    return rows


def _carry(plan: LayerPlan, functional: np.ndarray) -> slice:
    """Carry values through a layer as the neuron pair σ(v), σ(−v)."""
    return plan.add(np.vstack([functional, -functional]))


def _carried(width: int, block: slice) -> np.ndarray:
    """Read back the values of a `_carry` block."""
    dim = (block.stop - block.start) // 2
    eye = np.eye(dim)
    return _place(width, block, np.hstack([eye, -eye]))


def _band_sums(width: int, block: slice, count: int, size: int) -> np.ndarray:
    """Sum consecutive groups of `size` band neurons, one row per group."""
    return _place(width, block, np.kron(np.eye(count), np.ones((1, size))))


def _face_biases(lower: np.ndarray, upper: np.ndarray, margin: float) -> np.ndarray:
    """Biases of the bands σ(a + m − x), σ(x − b + m) of every box, box after box."""
    return np.hstack([lower + margin, margin - upper]).ravel()


def slot_tensors(
    table: RecursionTable, slots: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Arrange the recursion table by slot.

    Returns corner coefficients (slots, d, K), fine sides (slots, K) and partials
    (slots, B, K) so that slot j of a functional reading the coarse indicators is
    `tensor[j] @ indicators`. Slots beyond N_k stay zero for coarse cube k.
    """
    grid = table.cubes.grid
    count = len(table.corners)
    values = table.derivatives[0].shape[1] if count else 1
    corners = np.zeros((slots, grid.dim, count))
    sides = np.zeros((slots, count))
    partials = np.zeros((slots, values, count))
    for position, (corner, partial) in enumerate(
        zip(table.corners, table.derivatives, strict=True)
    ):
        filled = len(corner)
        corners[:filled, :, position] = corner
        sides[:filled, position] = grid.fine_side
        partials[:filled, :, position] = partial
    return corners, sides, partials


def _coarse_layers(
    table: RecursionTable, R: float, shrink: float | None
) -> tuple[NetworkAssembler, np.ndarray, np.ndarray, np.ndarray | None]:
    """Push the two layers computing x and the coarse-cube indicators.

    Returns the assembler and functionals over the second layer for x, the
    indicators and, when `shrink` is given, the indicators of the cubes shrunken
    by `shrink` on every face.
    """
    dim = table.cubes.grid.dim
    count = len(table.corners)
    eye = np.eye(dim)
    faces = np.tile(np.vstack([-eye, eye]), (count, 1))

    assembler = NetworkAssembler(dim)
    plan = assembler.layer()
    carry = _carry(plan, eye)
    bands = plan.add(faces, _face_biases(table.lower, table.upper, 1.0 / R))
    shrunk_bands = None
    if shrink is not None:
        shrunk_bands = plan.add(
            faces, _face_biases(table.lower, table.upper, 1.0 / R + shrink)
        )
    assembler.push(plan)

    x = _carried(plan.width, carry)
    sums = _band_sums(plan.width, bands, count, 2 * dim)
    next_plan = assembler.layer()
    carry = _carry(next_plan, x)
    indicators = next_plan.add(-R * sums, 1.0)
    shrunk = None
    if shrunk_bands is not None:
        shrunk_sums = _band_sums(plan.width, shrunk_bands, count, 2 * dim)
        shrunk = next_plan.add(-R * shrunk_sums, 1.0)
    assembler.push(next_plan)

    width = next_plan.width
    return (
        assembler,
        _carried(width, carry),
        _place(width, indicators, np.eye(count)),
        None if shrunk is None else _place(width, shrunk, np.eye(count)),
    )


def _slot_bands(
    plan: LayerPlan,
    x: np.ndarray,
    indicators: np.ndarray,
    corners: np.ndarray,
    sides: np.ndarray,
    margin: float,
) -> slice:
    """Add the 2d bands of every set A^(j), slot after slot.

    The box of slot j is [φ21^(j), φ21^(j) + φ41^(j)) with
    φ21^(j) = Σ_k corner_{k,j}·ind_k and φ41^(j) = Σ_{k: j < N_k} M^{−2}·ind_k.
    """
    rows = []
    for corner, side in zip(corners, sides, strict=True):
        lower = corner @ indicators
        extent = side @ indicators
        rows += [lower - x, x - lower - extent]
    return plan.add(np.vstack(rows), margin)


def build_recursion_front(
    table: RecursionTable, slots: int, R: float, value_count: int
) -> Network:
    """Build the four-layer network computing the recursion up to its last step.

    The network maps x to (x − φ22, φ32 padded with zeros to `value_count`);
    with `value_count` zero it only returns x − φ22. Both are exact whenever x
    keeps a distance of at least 1/R from every face of its fine cube.

    Args:
        table: Corners and partials per enumerated coarse cube
        slots: Number of recursion slots, at least the largest N_k
        R: Inverse band width B_M of the indicator and gate layers
        value_count: Number of value outputs following x − φ22

    Returns:
        Network with input dimension d and d + value_count outputs
    """
    dim = table.cubes.grid.dim
    corners, sides, partials = slot_tensors(table, slots)
    if not value_count:
        partials = partials[:, :0, :]
    assembler, x, indicators, _ = _coarse_layers(table, R, None)

    plan = assembler.layer()
    carry = _carry(plan, x)
    kept = plan.add(indicators)
    bands = _slot_bands(plan, x, indicators, corners, sides, 1.0 / R)
    assembler.push(plan)

    width = plan.width
    x = _carried(width, carry)
    kept_indicators = _place(width, kept, np.eye(kept.stop - kept.start))
    sums = _band_sums(width, bands, slots, 2 * dim)
    gate_plan = assembler.layer()
    carry = _carry(gate_plan, x)
    gates = []
    for slot in range(slots):
        values = np.vstack(
            [corners[slot] @ kept_indicators, partials[slot] @ kept_indicators]
        )
        closed = R * R * sums[slot]
        gates.append(gate_plan.add(np.vstack([values - closed, -values - closed])))
    assembler.push(gate_plan)

    width = gate_plan.width
    selected = sum(_carried(width, block) for block in gates)
    output = assembler.layer()
    output.add(_carried(width, carry) - selected[:dim])
    padding = value_count - partials.shape[1]
    if partials.shape[1]:
        output.add(selected[dim:])
    if padding > 0:
        output.add(np.zeros((padding, width)))
    return assembler.finish(output)


def build_check_network(
    table: RecursionTable, slots: int, R: float, shrink: float
) -> Network:
    """Build the five-layer network detecting the boundary bands of the fine cubes.

    The output is 0 at points keeping a distance of at least 1/R + shrink from
    every face of their enumerated fine cube and exactly 1 within `shrink` of a
    face; it stays in [0, 1] on the enumerated cubes.
    """
    dim = table.cubes.grid.dim
    corners, sides, _ = slot_tensors(table, slots)
    assembler, x, indicators, shrunk = _coarse_layers(table, R, shrink)

    plan = assembler.layer()
    outside = plan.add(-shrunk.sum(axis=0, keepdims=True), 1.0)
    bands = _slot_bands(plan, x, indicators, corners, sides, 1.0 / R + shrink)
    assembler.push(plan)

    width = plan.width
    sums = _band_sums(width, bands, slots, 2 * dim)
    test_plan = assembler.layer()
    kept = test_plan.add(_place(width, outside, np.ones((1, 1))))
    inner = test_plan.add(-R * R * sums, 1.0)
    assembler.push(test_plan)

    width = test_plan.width
    final = assembler.layer()
    total = _place(width, inner, np.ones((1, slots))) - _place(
        width, kept, np.ones((1, 1))
    )
    flagged = final.add(total)
    assembler.push(final)

    output = assembler.layer()
    output.add(-_place(final.width, flagged, np.ones((1, 1))), 1.0)
    return assembler.finish(output)

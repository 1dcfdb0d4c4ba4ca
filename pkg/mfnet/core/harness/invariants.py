import itertools
from collections.abc import Callable, Generator

import numpy as np

from mfnet.core.constructor import (
    band_scale,
    build_fhat_check,
    build_fhat_P2_true,
    face_distance,
    weight_w_many,
)
from mfnet.core.estimator import init_layers, loss_and_gradient
from mfnet.core.exceptions import CubeCountError, MFNetError
from mfnet.core.harness.models import InvariantResult
from mfnet.core.logging import watch
from mfnet.core.manifold import (
    FunctionChart,
    GridSpec,
    Manifold,
    ManifoldSpec,
    build_cube_table,
    build_manifold,
    enumerate_coarse_cubes,
    sample_points,
)
from mfnet.core.primitives import build_indicator, build_mult, build_test
from mfnet.core.relu_net import evaluate_scalar
from mfnet.core.settings import BaseSettings
from mfnet.core.taylor import (
    SmoothTarget,
    TargetSpec,
    build_recursion_table,
    build_target,
    phi_recursion,
    piecewise_taylor_many,
)
from mfnet.core.types import BuiltinManifold, BuiltinTarget

BUILTIN_SPECS = {
    "affine": ManifoldSpec(kind=BuiltinManifold.AFFINE, ambient_dim=3, rotation_seed=3),
    "circle": ManifoldSpec(kind=BuiltinManifold.CIRCLE, ambient_dim=3, rotation_seed=3),
    "torus": ManifoldSpec(
        kind=BuiltinManifold.TORUS, ambient_dim=4, radius=0.3, rotation_seed=3
    ),
}
WAVE = TargetSpec(kind=BuiltinTarget.PLANE_WAVE, q=1)


def _problem(name: str) -> tuple[Manifold, SmoothTarget]:
    spec = BUILTIN_SPECS[name]
    manifold = build_manifold(spec)
    return manifold, build_target(WAVE, spec, manifold.bound)


def check_recursion(points: int = 1000, M: int = 2) -> InvariantResult:
    """Compare the recursion with the piecewise Taylor polynomial on every manifold."""
    tolerance = BaseSettings.get().exact_tolerance
    worst = 0.0
    for position, name in enumerate(BUILTIN_SPECS):
        manifold, target = _problem(name)
        grid = GridSpec.unshifted(M, manifold.ambient_dim)
        table = build_recursion_table(target, build_cube_table(manifold, grid))
        xs = sample_points(manifold, points, [0, position])
        recursion = np.array(
            [phi_recursion(target, manifold, grid, x, table).phi_1_3 for x in xs]
        )
        worst = max(
            worst,
            float(np.max(np.abs(recursion - piecewise_taylor_many(target, grid, xs)))),
        )
    return InvariantResult(
        name="recursion_exactness",
        passed=worst <= tolerance,
        detail=f"max deviation {worst:.3g}",
    )


def check_mult(steps: int = 201) -> InvariantResult:
    """Measure the product networks on a regular grid of their domain."""
    failures = []
    worst = 0.0
    for R, b, head in itertools.product((4, 6, 8, 10), (1.0, 2.0), (1, 4)):
        primitive = build_mult(R, b, head)
        axis = np.linspace(-b, b, steps)
        first, second = np.meshgrid(axis, axis, indexing="ij")
        pairs = np.column_stack([first.ravel(), second.ravel()])
        error = float(
            np.max(np.abs(evaluate_scalar(primitive.net, pairs) - pairs.prod(axis=1)))
        )
        ratio = error / primitive.contract.sup_error_bound
        worst = max(worst, ratio)
        if error > primitive.contract.sup_error_bound:
            failures.append(f"R={R} b={b:g} head={head}")
    return InvariantResult(
        name="mult_contract",
        passed=not failures,
        detail=", ".join(failures) or f"largest error/bound {worst:.3g}",
    )


def check_indicator(points: int = 1000, R: float = 10.0) -> InvariantResult:
    """Evaluate the indicator and test networks away from the face bands."""
    tolerance = BaseSettings.get().exact_tolerance
    rng = np.random.default_rng([0, 7])
    lower, upper = np.zeros(2), np.ones(2)
    indicator = build_indicator(lower, upper, R).net
    xs = rng.uniform(-1.0, 2.0, size=(points, 2))
    inner = np.all((xs >= lower + 1.0 / R) & (xs <= upper - 1.0 / R), axis=1)
    outer = np.any((xs <= lower - 1.0 / R) | (xs >= upper + 1.0 / R), axis=1)
    values = evaluate_scalar(indicator, xs)
    indicator_ok = bool(
        np.all(np.abs(values[inner] - 1.0) <= tolerance)
        and np.all(np.abs(values[outer]) <= tolerance)
        and np.all((values >= -tolerance) & (values <= 1.0 + tolerance))
    )

    test = build_test(2, R)
    low = rng.uniform(-1.0, 0.0, size=(points, 2))
    high = low + rng.uniform(0.5, 1.5, size=(points, 2))
    inside = low + 1.0 / R + rng.random((points, 2)) * (high - low - 2.0 / R)
    scale = rng.uniform(-R, R, size=(points, 1))
    outputs = evaluate_scalar(test.net, np.hstack([inside, low, high, scale]))
    # anywhere around the box the error stays within the |s| bound of the contract
    anywhere = low - 0.5 + rng.random((points, 2)) * (high - low + 1.0)
    inputs = np.hstack([anywhere, low, high, scale])
    member = np.all((anywhere >= low) & (anywhere < high), axis=1)
    deviation = np.abs(evaluate_scalar(test.net, inputs) - scale[:, 0] * member)
    test_ok = bool(
        np.all(np.abs(outputs - scale[:, 0]) <= tolerance * R)
        and np.all(deviation <= test.contract.bound_at(inputs) + tolerance)
    )
    return InvariantResult(
        name="indicator",
        passed=indicator_ok and test_ok,
        detail=f"indicator {'ok' if indicator_ok else 'off'}, "
        f"test {'ok' if test_ok else 'off'}",
    )


def check_taylor_decay(points: int = 4000) -> InvariantResult:
    """Compare the piecewise Taylor errors at M=2 and M=4 against 4^{−p}."""
    manifold, target = _problem("circle")
    xs = sample_points(manifold, points, [0, 3])
    errors = [
        float(
            np.max(
                np.abs(
                    piecewise_taylor_many(
                        target, GridSpec.unshifted(M, manifold.ambient_dim), xs
                    )
                    - target(xs)
                )
            )
        )
        for M in (2, 4)
    ]
    limit = errors[0] * 4.0**-target.p * 1.5
    return InvariantResult(
        name="taylor_decay",
        passed=errors[1] <= limit,
        detail=f"errors {errors[0]:.3g} -> {errors[1]:.3g}, limit {limit:.3g}",
    )


def segment_manifold() -> Manifold:
    """Return the segment t ↦ (0.1 + t, 0.1) in the plane."""
    chart = FunctionChart(
        func=lambda t: np.column_stack([0.1 + t[:, 0], np.full(len(t), 0.1)]),
        dims=(1, 2),
        constants=(1.0, 1.0),
    )
    return Manifold(charts=(chart,), ambient_dim=2, intrinsic_dim=1, bound=2.0)


def check_cube_count() -> InvariantResult:
    """Count coarse cubes of every built-in manifold and of the plane segment."""
    details = []
    passed = True
    for name in BUILTIN_SPECS:
        manifold, _ = _problem(name)
        for M in (2, 4, 8):
            try:
                build_cube_table(manifold, GridSpec.unshifted(M, manifold.ambient_dim))
            except CubeCountError as error:
                passed = False
                details.append(f"{name} M={M}: {error}")
    count = len(enumerate_coarse_cubes(segment_manifold(), GridSpec.unshifted(4, 2)))
    if count != 5:
        passed = False
        details.append(f"segment has {count} coarse cubes, expected 5")
    return InvariantResult(
        name="cube_count", passed=passed, detail="; ".join(details) or "segment 5"
    )


def check_partition(points: int = 1000, M: int = 4) -> InvariantResult:
    """Sum the weights of all shifted grids at random points."""
    worst = 0.0
    for dim in (1, 2, 3):
        xs = np.random.default_rng([0, dim]).random((points, dim))
        total = sum(weight_w_many(xs, grid) for grid in GridSpec.all_shifts(M, dim))
        worst = max(worst, float(np.max(np.abs(total - 1.0))))
    return InvariantResult(
        name="partition_of_unity",
        passed=worst <= 1e-12,
        detail=f"max deviation {worst:.3g}",
    )


def check_gating(points: int = 1000, M: int = 2) -> InvariantResult:
    """Evaluate the gated recursion and the check network on the boundary bands."""
    tolerance = BaseSettings.get().exact_tolerance
    manifold, target = _problem("circle")
    grid = GridSpec.unshifted(M, manifold.ambient_dim)
    shrink = 1.0 / band_scale(M, target.p)
    xs = sample_points(manifold, 50 * points, [0, 11])
    band = xs[face_distance(xs, grid) < shrink][:points]
    gated = build_fhat_P2_true(target, manifold, grid).net
    check = build_fhat_check(manifold, grid, target.p).net
    table = build_cube_table(manifold, grid)
    centers = np.vstack(
        [grid.fine_corner(np.array(cells)) + grid.half_fine_side for cells in table.fine]
    )
    gated_ok = bool(np.all(np.abs(evaluate_scalar(gated, band)) <= tolerance))
    flags_ok = bool(np.all(np.abs(evaluate_scalar(check, band) - 1.0) <= tolerance))
    centers_ok = bool(np.all(np.abs(evaluate_scalar(check, centers)) <= tolerance))
    return InvariantResult(
        name="gating",
        passed=gated_ok and flags_ok and centers_ok and len(band) > 0,
        detail=f"{len(band)} band points, gated {gated_ok}, flagged {flags_ok}, "
        f"centers {centers_ok}",
    )


def _pre_activations(
    layers: list[tuple[np.ndarray, np.ndarray]], xs: np.ndarray
) -> np.ndarray:
    hidden, values = xs, []
    for weight, bias in layers[:-1]:
        pre = hidden @ weight.T + bias
        values.append(pre)
        hidden = np.maximum(pre, 0.0)
    return np.hstack(values)


def check_gradient(points: int = 50, step: float = 1e-6) -> InvariantResult:
    """Compare backpropagation with central differences away from the ReLU kinks."""
    rng = np.random.default_rng([0, 13])
    layers = init_layers(1, 2, 3, rng)
    candidates = rng.uniform(-1.0, 1.0, size=(20 * points, 1))
    margin = np.min(np.abs(_pre_activations(layers, candidates)), axis=1)
    xs = candidates[margin > 1e-3][:points]
    ys = np.sin(3.0 * xs[:, 0])
    _, gradient = loss_and_gradient(layers, xs, ys)
    analytic, numeric = [], []
    for index, (weight, bias) in enumerate(layers):
        for array, grad in ((weight, gradient[index][0]), (bias, gradient[index][1])):
            for position in np.ndindex(array.shape):
                original = array[position]
                array[position] = original + step
                upper, _ = loss_and_gradient(layers, xs, ys)
                array[position] = original - step
                lower, _ = loss_and_gradient(layers, xs, ys)
                array[position] = original
                analytic.append(grad[position])
                numeric.append((upper - lower) / (2.0 * step))
    analytic_, numeric_ = np.array(analytic), np.array(numeric)
    scale = max(np.linalg.norm(analytic_), np.linalg.norm(numeric_), 1e-12)
    relative = float(np.linalg.norm(analytic_ - numeric_) / scale)
    return InvariantResult(
        name="gradient_check",
        passed=relative <= 1e-4 and len(xs) == points,
        detail=f"{len(analytic)} parameters, relative error {relative:.3g}",
    )


INVARIANTS: tuple[Callable[[], InvariantResult], ...] = (
    check_recursion,
    check_mult,
    check_indicator,
    check_taylor_decay,
    check_cube_count,
    check_partition,
    check_gating,
    check_gradient,
)


@watch
def run_invariants() -> Generator[InvariantResult, None, None]:
    """Run the property suite; a check that raises is reported as failed."""
    for check in INVARIANTS:
        try:
            yield check()
        except MFNetError as error:
            yield InvariantResult(
                name=check.__name__.removeprefix("check_"),
                passed=False,
                detail=str(error),
            )

import math
from concurrent.futures import ThreadPoolExecutor
from functools import partial

import numpy as np

from mfnet.core.constructor import bounds
from mfnet.core.constructor.front import build_check_network, build_recursion_front
from mfnet.core.constructor.models import ConstructionReport
from mfnet.core.exceptions import ContractViolationError
from mfnet.core.logging import echo
from mfnet.core.manifold import GridSpec, Manifold, build_cube_table, slot_capacity
from mfnet.core.primitives import (
    Box,
    ErrorContract,
    Primitive,
    build_mult,
    build_mult_d,
    build_poly,
    enforce,
)
from mfnet.core.relu_net import (
    Network,
    affine_input,
    affine_output,
    compose,
    linear_combine,
    pad_depth,
    parallel,
)
from mfnet.core.settings import BaseSettings
from mfnet.core.taylor import (
    RecursionTable,
    SmoothTarget,
    build_recursion_table,
    factorials,
    multi_indices,
)
from mfnet.core.types import PreconditionPolicy

_EPS = float(np.finfo(float).eps)


def _policy(policy: PreconditionPolicy | None) -> PreconditionPolicy:
    return policy or BaseSettings.get().precondition_policy


def _check_dims(target: SmoothTarget, manifold: Manifold) -> None:
    if target.dim != manifold.ambient_dim:
        raise ContractViolationError(
            f"target on R^{target.dim} cannot live on {manifold}",
            "dimension mismatch",
        )


def _require_power(
    M: int, p: float, rhs: float, message: str, policy: PreconditionPolicy
) -> bool:
    """Enforce M^{2p} ≥ rhs, reporting the smallest admissible M."""
    minimum = max(2, math.ceil(rhs ** (1.0 / (2 * p)) - 1e-9))
    return enforce(
        float(M) ** (2 * p) >= rhs, f"M={M} {message}", minimum, policy
    )


def _recursion_preconditions(
    target: SmoothTarget, manifold: Manifold, M: int, policy: PreconditionPolicy
) -> bool:
    size = bounds.value_bound(manifold.bound, target.cq_norm)
    return _require_power(
        M,
        target.p,
        size ** (4 * (target.q + 1)),
        "is too small for the recursion network",
        policy,
    )


def _product_preconditions(
    target: SmoothTarget, manifold: Manifold, M: int, policy: PreconditionPolicy
) -> bool:
    taylor = (
        2.0 * manifold.bound * manifold.ambient_dim
    ) ** (2 * target.p) * target.holder_constant
    return all(
        [
            _recursion_preconditions(target, manifold, M, policy),
            _require_power(
                M,
                target.p,
                taylor,
                "is too small for the piecewise Taylor error",
                policy,
            ),
        ]
    )


def _table(
    target: SmoothTarget | None, manifold: Manifold, grid: GridSpec
) -> RecursionTable:
    """Return the recursion table of `grid`; geometry only when no target is given."""
    if grid.dim != manifold.ambient_dim:
        raise ContractViolationError(f"{grid} does not partition R^{manifold.ambient_dim}")
    cubes = build_cube_table(manifold, grid)
    if target is not None:
        return build_recursion_table(target, cubes)
    corners = tuple(
        grid.fine_corner(np.array(cells, dtype=np.int64).reshape(-1, grid.dim))
        for cells in cubes.fine
    )
    coarse = np.array(cubes.coarse, dtype=np.int64).reshape(-1, grid.dim)
    return RecursionTable(
        cubes=cubes,
        lower=grid.coarse_corner(coarse),
        upper=grid.coarse_upper(coarse),
        corners=corners,
        derivatives=tuple(np.zeros((len(corner), 1)) for corner in corners),
    )


def recursion_poly(
    target: SmoothTarget,
    manifold: Manifold,
    M: int,
    policy: PreconditionPolicy | None = None,
) -> Primitive:
    """Build the Taylor polynomial network evaluated behind the recursion layers.

    Its inputs are (x − φ22, φ32); coefficient 1/l! belongs to the monomial z^l
    with ‖l‖₁ ≤ q. The offsets x − φ22 ∈ [0, M^{−2}]^d are stretched by M² and
    the partials divided by max{‖f‖_{C^q}, 1}, so every product runs on [−1, 1]
    and the scales move into the coefficients. Degree 0 targets get a degree 1
    network with zero linear terms.
    """
    degree = bounds.poly_degree(target.q)
    dim = target.dim
    indices = multi_indices(dim, degree)
    size = max(target.cq_norm, 1.0)
    stretch = float(M) ** 2
    inverse = 1.0 / factorials(dim, degree)
    coefficients = [
        size * value * stretch ** -sum(index) if sum(index) <= target.q else 0.0
        for index, value in zip(indices, inverse, strict=True)
    ]
    unit = build_poly(
        degree,
        dim,
        coefficients,
        bounds.precision_layers(M, target.p),
        1.0,
        _policy(policy),
    )
    count = len(indices)
    scaling = np.concatenate([np.full(dim, stretch), np.full(count, 1.0 / size)])
    net = affine_input(unit.net, np.diag(scaling), np.zeros(dim + count))
    return Primitive(
        net=net,
        contract=ErrorContract(
            depth=unit.contract.depth,
            width=unit.contract.width,
            sup_error_bound=unit.contract.sup_error_bound,
            valid_domain=Box(
                lower=(0.0,) * dim + (-size,) * count,
                upper=(1.0 / stretch,) * dim + (size,) * count,
            ),
        ),
    )


def _p2_net(
    table: RecursionTable, target: SmoothTarget, poly: Primitive
) -> Network:
    grid = table.cubes.grid
    front = build_recursion_front(
        table,
        table.cubes.slot_count,
        bounds.band_scale(grid.M, target.p),
        len(multi_indices(target.dim, bounds.poly_degree(target.q))),
    )
    return compose(poly.net, front)


def _w_net(table: RecursionTable, p: float) -> Network:
    grid = table.cubes.grid
    dim = grid.dim
    front = build_recursion_front(
        table, table.cubes.slot_count, bounds.band_scale(grid.M, p), 0
    )
    # hat(t) = σ(t) − 2σ(t − 1) + σ(t − 2) with t = 2M²·(x − corner)
    scale = 2.0 * grid.M * grid.M
    hats = Network.from_layers(
        [
            (np.kron(np.eye(dim), np.full((3, 1), scale)), np.tile([0.0, -1.0, -2.0], dim)),
            (np.kron(np.eye(dim), np.array([[1.0, -2.0, 1.0]])), np.zeros(dim)),
        ]
    )
    net = compose(hats, front)
    if dim > 1:
        product = build_mult_d(
            dim, bounds.precision_layers(grid.M, p), head=bounds.PRODUCT_HEAD
        )
        net = compose(product.net, net)
    return net


def _check_net(table: RecursionTable, p: float) -> Network:
    R = bounds.band_scale(table.cubes.grid.M, p)
    return build_check_network(table, table.cubes.slot_count, R, 1.0 / R)


def _gated(p2: Network, check: Network, gate: float) -> tuple[Network, str]:
    """Return σ(u − B·c) − σ(−u − B·c) of the recursion value u and check value c."""
    padded = pad_depth(check, p2.arch.depth)
    both = parallel([p2, padded])
    switch = Network.from_layers(
        [
            (np.array([[1.0, -gate], [-1.0, -gate]]), np.zeros(2)),
            (np.array([[1.0, -1.0]]), np.zeros(1)),
        ]
    )
    note = f"check padded {check.arch.depth}->{p2.arch.depth} behind output"
    return compose(switch, both), note


def _report(
    kind: str,
    net: Network,
    table: RecursionTable,
    manifold: Manifold,
    p: float,
    q: int,
    formula: tuple[int, int],
    error_bounds: tuple[float, float],
    precondition_ok: bool,
    padding: tuple[str, ...] = (),
) -> ConstructionReport:
    grid = table.cubes.grid
    report = ConstructionReport(
        kind=kind,
        net=net,
        depth=net.arch.depth,
        width=net.arch.width,
        formula_depth=formula[0],
        formula_width=formula[1],
        M=grid.M,
        p=p,
        q=q,
        ambient_dim=manifold.ambient_dim,
        intrinsic_dim=manifold.intrinsic_dim,
        shift=grid.shift,
        safe_region_error_bound=max(error_bounds[0], _EPS),
        global_bound=max(error_bounds[1], _EPS),
        slot_capacity=_capacity(manifold, grid.M),
        slot_count=table.cubes.slot_count,
        coarse_count=len(table.cubes.coarse),
        precondition_ok=precondition_ok,
        padding=padding,
    )
    echo(f"[{kind}] {report}")
    return report


def _capacity(manifold: Manifold, M: int) -> int:
    return slot_capacity(manifold, M) if manifold.charts else 1


def _p2_bound(
    target: SmoothTarget, manifold: Manifold, M: int, poly: Primitive
) -> float:
    taylor = bounds.taylor_error_bound(
        M, target.p, manifold.bound, manifold.ambient_dim, target.holder_constant
    )
    return taylor + poly.contract.sup_error_bound


def build_fhat_P2(
    target: SmoothTarget,
    manifold: Manifold,
    grid: GridSpec,
    policy: PreconditionPolicy | None = None,
) -> ConstructionReport:
    """Build the network evaluating the piecewise Taylor polynomial of `grid`.

    Four fused layers run the recursion up to the selected corner and partials,
    the polynomial network with ⌈log₄ M^{2p}⌉ layers per product evaluates the
    Taylor polynomial. The result is exact up to the polynomial error at points
    keeping a distance of M^{−2p−2} from every fine-cube face.

    Raises:
        PreconditionError: When M is below the threshold and the policy is `RAISE`
    """
    _check_dims(target, manifold)
    policy = _policy(policy)
    ok = _recursion_preconditions(target, manifold, grid.M, policy)
    poly = recursion_poly(target, manifold, grid.M, policy)
    table = _table(target, manifold, grid)
    d, q = manifold.ambient_dim, target.q
    return _report(
        "fhat_P2",
        _p2_net(table, target, poly),
        table,
        manifold,
        target.p,
        q,
        (
            bounds.formula_depth_fhat_P2(grid.M, target.p, q),
            bounds.formula_width_fhat_P2(d, q, _capacity(manifold, grid.M)),
        ),
        (
            _p2_bound(target, manifold, grid.M, poly),
            bounds.gate_bound(manifold.bound, d, target.cq_norm),
        ),
        ok,
    )


def build_fhat_w(
    manifold: Manifold, grid: GridSpec, p: float
) -> ConstructionReport:
    """Build the network evaluating the B-spline weight of `grid`.

    The threshold M ≥ 4^{4d+1}·d of the weight error bound is only recorded;
    the network is built for every M ≥ 2.
    """
    d = manifold.ambient_dim
    ok = enforce(
        grid.M >= 4 ** (4 * d + 1) * d,
        f"M={grid.M} is too small for the weight error bound",
        4 ** (4 * d + 1) * d,
        PreconditionPolicy.WARN,
    )
    table = _table(None, manifold, grid)
    return _report(
        "fhat_w",
        _w_net(table, p),
        table,
        manifold,
        p,
        math.ceil(p) - 1,
        (
            bounds.formula_depth_fhat_w(grid.M, p, d),
            bounds.formula_width_fhat_w(d, _capacity(manifold, grid.M)),
        ),
        (bounds.weight_error_bound(grid.M, p, d), 2.0),
        ok,
    )


def build_fhat_check(
    manifold: Manifold, grid: GridSpec, p: float
) -> ConstructionReport:
    """Build the network flagging points within M^{−2p−2} of a fine-cube face."""
    table = _table(None, manifold, grid)
    d = manifold.ambient_dim
    return _report(
        "fhat_check",
        _check_net(table, p),
        table,
        manifold,
        p,
        math.ceil(p) - 1,
        (
            bounds.formula_depth_fhat_check(),
            bounds.formula_width_fhat_check(d, _capacity(manifold, grid.M)),
        ),
        (_EPS, 1.0),
        True,
    )


def build_fhat_P2_true(
    target: SmoothTarget,
    manifold: Manifold,
    grid: GridSpec,
    policy: PreconditionPolicy | None = None,
) -> ConstructionReport:
    """Build the recursion network gated to zero on the boundary bands."""
    _check_dims(target, manifold)
    policy = _policy(policy)
    ok = _recursion_preconditions(target, manifold, grid.M, policy)
    poly = recursion_poly(target, manifold, grid.M, policy)
    table = _table(target, manifold, grid)
    d, q = manifold.ambient_dim, target.q
    gate = bounds.gate_bound(manifold.bound, d, target.cq_norm)
    net, note = _gated(
        _p2_net(table, target, poly), _check_net(table, target.p), gate
    )
    capacity = _capacity(manifold, grid.M)
    return _report(
        "fhat_P2_true",
        net,
        table,
        manifold,
        target.p,
        q,
        (
            bounds.formula_depth_fhat_P2_true(grid.M, target.p, q),
            bounds.formula_width_fhat_P2_true(d, q, capacity),
        ),
        (_p2_bound(target, manifold, grid.M, poly), gate),
        ok,
        (note,),
    )


def _fhat(
    target: SmoothTarget,
    manifold: Manifold,
    grid: GridSpec,
    poly: Primitive,
    ok: bool,
) -> ConstructionReport:
    """Assemble f_mult(f̂_w, f̂_P2,true) for one grid from a prebuilt polynomial."""
    table = _table(target, manifold, grid)
    M, p, q = grid.M, target.p, target.q
    d, a = manifold.ambient_dim, manifold.bound
    gate = bounds.gate_bound(a, d, target.cq_norm)
    gated, note = _gated(_p2_net(table, target, poly), _check_net(table, p), gate)
    weight = _w_net(table, p)

    depth = bounds.synchronized_depth(M, p, q, d)
    padding = (
        note,
        f"weight padded {weight.arch.depth}->{depth} behind output",
        f"gated recursion padded {gated.arch.depth}->{depth} behind output",
    )
    # (w, u) enters the unit product as (w, u/s) and leaves multiplied by s
    scale = 2.0 * max(target.cq_norm, 1.0)
    layers = bounds.precision_layers(M, p)
    product = build_mult(layers, 1.0, bounds.PRODUCT_HEAD)
    scaled = affine_output(
        affine_input(product.net, np.diag([1.0, 1.0 / scale]), np.zeros(2)),
        np.array([[scale]]),
        np.zeros(1),
    )
    net = compose(
        scaled, parallel([pad_depth(weight, depth), pad_depth(gated, depth)])
    )

    recursion_error = _p2_bound(target, manifold, M, poly)
    weight_error = bounds.weight_error_bound(M, p, d)
    product_error = scale * product.contract.sup_error_bound
    norm = target.cq_norm
    error = (
        product_error
        + weight_error * (norm + recursion_error)
        + recursion_error
        + bounds.band_weight_bound(M, p) * (2.0 * norm + recursion_error)
    )
    return _report(
        "fhat",
        net,
        table,
        manifold,
        p,
        q,
        (
            bounds.formula_depth_fhat(M, p, q, d),
            bounds.formula_width_fhat(d, q, _capacity(manifold, M)),
        ),
        (error, (1.0 + weight_error) * scale + product_error),
        ok,
        padding,
    )


def build_fhat(
    target: SmoothTarget,
    manifold: Manifold,
    grid: GridSpec,
    policy: PreconditionPolicy | None = None,
) -> ConstructionReport:
    """Build the network approximating w·f for the weight w of one shifted grid.

    The gated recursion network and the weight network are padded to a common
    depth and multiplied by one product network, so the depth is exactly
    5 + ⌈log₄ M^{2p}⌉·(⌈log₂(max{q, d} + 1)⌉ + 1).

    Raises:
        PreconditionError: When M is below a threshold and the policy is `RAISE`
    """
    _check_dims(target, manifold)
    policy = _policy(policy)
    ok = _product_preconditions(target, manifold, grid.M, policy)
    poly = recursion_poly(target, manifold, grid.M, policy)
    return _fhat(target, manifold, grid, poly, ok)


def build_fhat_net(
    target: SmoothTarget,
    manifold: Manifold,
    M: int,
    policy: PreconditionPolicy | None = None,
    jobs: int | None = None,
) -> ConstructionReport:
    """Build the sum of the weighted networks over all 2^d shifted grids.

    The weights of the shifted grids add up to one, so the sum approximates f on
    the whole manifold. Shifted builds run on `jobs` threads; the summation order
    is the fixed order of `GridSpec.all_shifts`.

    Raises:
        ContractViolationError: When the ambient dimension exceeds the configured guard
        PreconditionError: When M is below a threshold and the policy is `RAISE`
    """
    _check_dims(target, manifold)
    settings = BaseSettings.get()
    d = manifold.ambient_dim
    if d > settings.max_ambient_dim:
        raise ContractViolationError(
            f"{2**d} shifted grids in dimension {d}",
            f"guard is {settings.max_ambient_dim}",
        )
    policy = _policy(policy)
    size = max(manifold.bound, target.cq_norm, 1.0)
    ok = all(
        [
            enforce(M >= 2, f"M={M} is below 2", 2, policy),
            _require_power(
                M,
                target.p,
                size ** (4 * (target.q + 1)),
                "is too small for the shifted-grid sum",
                policy,
            ),
            _product_preconditions(target, manifold, M, policy),
        ]
    )
    poly = recursion_poly(target, manifold, M, policy)
    grids = GridSpec.all_shifts(M, d)
    build = partial(_fhat, target, manifold, poly=poly, ok=ok)
    workers = jobs or settings.jobs
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            parts = list(executor.map(build, grids))
    else:
        parts = [build(grid) for grid in grids]

    net = linear_combine([part.net for part in parts], [1.0] * len(parts))
    first = parts[0]
    report = ConstructionReport(
        kind="fhat_net",
        net=net,
        depth=net.arch.depth,
        width=net.arch.width,
        formula_depth=first.formula_depth,
        formula_width=bounds.formula_width_fhat_net(
            d, target.q, _capacity(manifold, M)
        ),
        M=M,
        p=target.p,
        q=target.q,
        ambient_dim=d,
        intrinsic_dim=manifold.intrinsic_dim,
        shift=None,
        safe_region_error_bound=sum(part.safe_region_error_bound for part in parts),
        global_bound=sum(part.global_bound for part in parts),
        slot_capacity=first.slot_capacity,
        slot_count=max(part.slot_count for part in parts),
        coarse_count=sum(part.coarse_count for part in parts),
        precondition_ok=ok,
        padding=first.padding,
    )
    echo(f"[fhat_net] {report}", fg="green")
    return report

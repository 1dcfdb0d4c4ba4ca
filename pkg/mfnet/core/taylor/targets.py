import math
from collections.abc import Callable, Sequence
from itertools import product

import numpy as np
from pydantic import PositiveFloat

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.manifold import ManifoldSpec, orthonormal_frame
from mfnet.core.manifold.library import native_dim
from mfnet.core.taylor.models import SmoothnessCheck, SmoothTarget, TargetSpec
from mfnet.core.taylor.multi_index import multi_indices
from mfnet.core.types import BuiltinTarget, FrozenArray

Exponent = tuple[int, ...]


def _falling(power: int, order: int) -> int:
    return math.perm(power, order) if order <= power else 0


class PolynomialTarget(SmoothTarget):
    """Polynomial Σ c·x^e with exact partial derivatives."""

    terms: tuple[tuple[Exponent, float], ...]

    @classmethod
    def create(
        cls,
        dim: int,
        terms: Sequence[tuple[Exponent, float]],
        q: int,
        bound: float = 1.0,
    ) -> "PolynomialTarget":
        """Build a polynomial target with p = q + 1 on the cube [−bound, bound]^d.

        The norm and the Lipschitz constant of the order-q partials are bounded
        termwise on the cube.
        """
        terms = tuple((tuple(int(e) for e in exp), float(c)) for exp, c in terms)
        if any(len(exp) != dim for exp, _ in terms):
            raise ContractViolationError("exponent length differs from dimension")

        def sup(index: Exponent) -> float:
            return sum(
                abs(c)
                * math.prod(_falling(e, j) for e, j in zip(exp, index, strict=True))
                * bound ** (sum(exp) - sum(index))
                for exp, c in terms
                if all(e >= j for e, j in zip(exp, index, strict=True))
            )

        norm = max(sup(index) for index in multi_indices(dim, q))
        top = [index for index in multi_indices(dim, q + 1) if sum(index) == q + 1]
        lipschitz = math.sqrt(dim) * max(sup(index) for index in top)
        return cls(
            dim=dim, p=q + 1.0, holder_constant=lipschitz, cq_norm=norm, terms=terms
        )

    def value(self, points: np.ndarray) -> np.ndarray:
        """Evaluate the polynomial."""
        return self.partial((0,) * self.dim, points)

    def partial(self, index: tuple[int, ...], points: np.ndarray) -> np.ndarray:
        """Differentiate termwise."""
        points = np.atleast_2d(points)
        result = np.zeros(points.shape[0])
        for exponent, coefficient in self.terms:
            factor = coefficient * math.prod(
                _falling(e, j) for e, j in zip(exponent, index, strict=True)
            )
            if factor == 0.0:
                continue
            powers = np.array(exponent) - np.array(index)
            result = result + factor * np.prod(points**powers, axis=1)
        return result


class PlaneWaveTarget(SmoothTarget):
    """Plane wave f(x) = A·sin(w·x + φ), smooth of every order."""

    amplitude: float
    frequencies: tuple[float, ...]
    phase: float = 0.0

    @classmethod
    def create(
        cls, amplitude: float, frequencies: Sequence[float], phase: float, q: int
    ) -> "PlaneWaveTarget":
        """Build a plane wave with p = q + 1.

        Partials of order k have magnitude |A|·Π|w_i|^{j_i}; order-q partials are
        Lipschitz with constant |A|·max|w^j|·‖w‖ and bounded by |A|·max|w^j|,
        which gives the Hölder constant |A|·max|w^j|·max{‖w‖, 2}.
        """
        w = np.abs(np.asarray(frequencies, dtype=np.float64))
        dim = len(w)
        scale = [
            float(np.prod(w ** np.array(index))) for index in multi_indices(dim, q)
        ]
        top = max(
            float(np.prod(w ** np.array(index)))
            for index in multi_indices(dim, q)
            if sum(index) == q
        )
        return cls(
            dim=dim,
            p=q + 1.0,
            holder_constant=abs(amplitude) * top * max(float(np.linalg.norm(w)), 2.0),
            cq_norm=abs(amplitude) * max(scale),
            amplitude=amplitude,
            frequencies=tuple(float(v) for v in frequencies),
            phase=phase,
        )

    def value(self, points: np.ndarray) -> np.ndarray:
        """Evaluate the wave."""
        return self.partial((0,) * self.dim, points)

    def partial(self, index: tuple[int, ...], points: np.ndarray) -> np.ndarray:
        """Each derivative multiplies by w_i and advances the phase by π/2."""
        points = np.atleast_2d(points)
        w = np.array(self.frequencies)
        factor = self.amplitude * float(np.prod(w ** np.array(index)))
        return factor * np.sin(points @ w + self.phase + sum(index) * math.pi / 2)


def central_difference(
    func: Callable[[np.ndarray], np.ndarray],
    index: tuple[int, ...],
    points: np.ndarray,
    step: float,
) -> np.ndarray:
    """Approximate ∂^index func by the tensor product of central differences.

    Order k along one axis uses Σ_i (−1)^i·binom(k, i)·f(x + (k/2 − i)·h·e)/h^k,
    which is accurate to second order in h.
    """
    points = np.atleast_2d(points)
    order = sum(index)
    if order == 0:
        return np.asarray(func(points), dtype=np.float64)
    # wider steps for higher orders keep the rounding error in check
    h = max(step, float(np.finfo(float).eps) ** (1.0 / (order + 2)))
    stencils = [
        [((k / 2 - i) * h, (-1) ** i * math.comb(k, i)) for i in range(k + 1)]
        for k in index
    ]
    result = np.zeros(points.shape[0])
    for combination in product(*stencils):
        offset = np.array([shift for shift, _ in combination])
        weight = math.prod(w for _, w in combination)
        result = result + weight * np.asarray(func(points + offset), dtype=np.float64)
    return result / h**order


class FiniteDifferenceTarget(SmoothTarget):
    """User function whose partials are approximated by central differences.

    The smoothness record is declared by the caller. Derivatives carry a
    truncation error of order step², so oracles built on them are approximate.
    """

    func: Callable[[np.ndarray], np.ndarray]
    step: PositiveFloat = 1e-5

    def value(self, points: np.ndarray) -> np.ndarray:
        """Call the wrapped function."""
        return np.asarray(self.func(np.atleast_2d(points)), dtype=np.float64)

    def partial(self, index: tuple[int, ...], points: np.ndarray) -> np.ndarray:
        """Approximate the partial by central differences."""
        return central_difference(self.func, index, points, self.step)

    def __str__(self) -> str:
        """Format without pickling the callable."""
        return f"FiniteDifferenceTarget d={self.dim} p={self.p:g}"


class EmbeddedTarget(SmoothTarget):
    """Pull-back g(x) = f((x − offset)·F) of a target f on R^k along a frame F.

    When F selects coordinates the partials are exact, otherwise they are
    approximated by central differences.
    """

    base: SmoothTarget
    frame: FrozenArray
    offset: FrozenArray
    step: PositiveFloat = 1e-5

    def _native(self, points: np.ndarray) -> np.ndarray:
        return (np.atleast_2d(points) - self.offset) @ self.frame

    def _selection(self) -> list[int] | None:
        """Return the ambient axis of every native axis for coordinate frames."""
        frame = self.frame
        if not np.all((frame == 0.0) | (frame == 1.0)):
            return None
        if not np.all(frame.sum(axis=0) == 1.0):
            return None
        return [int(np.argmax(frame[:, column])) for column in range(frame.shape[1])]

    def value(self, points: np.ndarray) -> np.ndarray:
        """Evaluate the base target in native coordinates."""
        return self.base.value(self._native(points))

    def partial(self, index: tuple[int, ...], points: np.ndarray) -> np.ndarray:
        """Map the derivative onto the native axes when possible."""
        selection = self._selection()
        if selection is None:
            return central_difference(self.value, index, points, self.step)
        native_index = tuple(index[axis] for axis in selection)
        if sum(native_index) != sum(index):
            return np.zeros(np.atleast_2d(points).shape[0])
        return self.base.partial(native_index, self._native(points))


def embed_target(
    base: SmoothTarget, frame: np.ndarray, offset: np.ndarray
) -> SmoothTarget:
    """Pull a target on native coordinates back to the ambient space.

    Plane waves stay plane waves with frequencies F·w and phase φ − (F·w)·offset;
    other targets are wrapped in an `EmbeddedTarget`.
    """
    frame = np.asarray(frame, dtype=np.float64)
    offset = np.asarray(offset, dtype=np.float64)
    if frame.shape[1] != base.dim:
        raise ContractViolationError("frame does not match the target dimension")
    if isinstance(base, PlaneWaveTarget):
        frequencies = frame @ np.array(base.frequencies)
        return PlaneWaveTarget.create(
            base.amplitude,
            frequencies.tolist(),
            base.phase - float(frequencies @ offset),
            base.q,
        )
    native = frame.shape[1]
    return EmbeddedTarget(
        dim=frame.shape[0],
        p=base.p,
        holder_constant=base.holder_constant * native ** ((base.q + 1) / 2),
        cq_norm=base.cq_norm * native ** (base.q / 2),
        base=base,
        frame=frame,
        offset=offset,
    )


def build_target(
    spec: TargetSpec, manifold_spec: ManifoldSpec, bound: float = 1.0
) -> SmoothTarget:
    """Build a built-in target on the native coordinates of a built-in manifold.

    Args:
        spec: Target kind and parameters
        manifold_spec: Manifold whose embedding the target is pulled back along
        bound: Half side of the cube on which polynomial norms are bounded
    """
    dim = native_dim(manifold_spec)
    zero = (0,) * dim

    def unit(axis: int, power: int) -> Exponent:
        return tuple(power if k == axis else 0 for k in range(dim))

    if spec.kind is BuiltinTarget.PLANE_WAVE:
        frequencies = spec.frequencies or (2.0,) * dim
        if len(frequencies) != dim:
            raise ContractViolationError(
                f"plane wave needs {dim} frequencies", frequencies
            )
        base: SmoothTarget = PlaneWaveTarget.create(
            spec.amplitude, frequencies, spec.phase, spec.q
        )
    else:
        terms = {
            BuiltinTarget.CONSTANT: [(zero, spec.amplitude)],
            BuiltinTarget.LINEAR: [(unit(k, 1), spec.amplitude) for k in range(dim)],
            BuiltinTarget.QUADRATIC: [
                (unit(k, 2), spec.amplitude) for k in range(dim)
            ],
        }[spec.kind]
        base = PolynomialTarget.create(dim, terms, spec.q, bound)
    frame = orthonormal_frame(
        manifold_spec.ambient_dim, dim, manifold_spec.rotation_seed
    )
    offset = np.zeros(manifold_spec.ambient_dim)
    offset[: len(manifold_spec.offset)] = manifold_spec.offset
    if frame.shape[0] == dim and manifold_spec.rotation_seed is None and not offset.any():
        return base
    return embed_target(base, frame, offset)


def check_smoothness(
    target: SmoothTarget, points: np.ndarray, pairs: int = 1000, seed: int = 0
) -> SmoothnessCheck:
    """Sample the norm bound and the Hölder inequality of the top-order partials."""
    points = np.atleast_2d(points)
    partials = target.partials(points)
    max_partial = float(np.max(np.abs(partials)))
    rng = np.random.default_rng(seed)
    first = points[rng.integers(len(points), size=pairs)]
    second = points[rng.integers(len(points), size=pairs)]
    distance = np.linalg.norm(first - second, axis=1)
    keep = distance > 1e-9
    top = [i for i in multi_indices(target.dim, target.q) if sum(i) == target.q]
    ratio = 0.0
    for index in top:
        change = np.abs(
            target.partial(index, first[keep]) - target.partial(index, second[keep])
        )
        if change.size:
            ratio = max(ratio, float(np.max(change / distance[keep] ** target.s)))
    slack = 1e-9
    return SmoothnessCheck(
        max_partial=max_partial,
        max_holder_ratio=ratio,
        norm_ok=max_partial <= target.cq_norm * (1 + slack) + slack,
        holder_ok=ratio <= target.holder_constant * (1 + slack) + 1e-6,
    )

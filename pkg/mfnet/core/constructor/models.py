import math
from pathlib import Path
from typing import Annotated, Self

from pydantic import Field, PositiveFloat, PositiveInt, model_validator

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.models import BaseModel
from mfnet.core.relu_net import Network, dump_network


class ConstructionReport(BaseModel):
    """Assembled approximation network together with its size and error guarantees.

    `formula_depth` and `formula_width` are evaluated with the slot capacity
    ⌈c13·M^{d*}⌉; the network itself only allocates `slot_count` recursion slots.
    """

    kind: str
    net: Network
    depth: PositiveInt
    width: PositiveInt
    formula_depth: PositiveInt
    formula_width: PositiveInt
    M: Annotated[int, Field(ge=2)]
    p: PositiveFloat
    q: Annotated[int, Field(ge=0)]
    ambient_dim: PositiveInt
    intrinsic_dim: PositiveInt
    shift: tuple[float, ...] | None
    safe_region_error_bound: PositiveFloat
    global_bound: PositiveFloat
    slot_capacity: PositiveInt
    slot_count: PositiveInt
    coarse_count: Annotated[int, Field(ge=0)]
    precondition_ok: bool = True
    padding: tuple[str, ...] = ()

    @model_validator(mode="after")
    def check_arch(self) -> Self:
        """Ensure depth and width are those of the network."""
        if (self.depth, self.width) != (self.net.arch.depth, self.net.arch.width):
            raise ContractViolationError(
                f"report claims F({self.depth}, {self.width})", str(self.net.arch)
            )
        return self

    @property
    def c7(self) -> float:
        """Depth constant L / ln M."""
        return self.depth / math.log(self.M)

    @property
    def c8(self) -> float:
        """Width constant r / M^{d*}."""
        return self.width / float(self.M) ** self.intrinsic_dim

    @property
    def within_formula(self) -> bool:
        """Return whether the network lies in F(formula_depth, formula_width)."""
        return self.net.arch.in_class(self.formula_depth, self.formula_width)

    def header(self) -> dict[str, str]:
        """Return the `# key: value` header written in front of the network file."""
        return {
            "kind": self.kind,
            "M": str(self.M),
            "p": repr(self.p),
            "q": str(self.q),
            "shift": "all" if self.shift is None else ",".join(map(repr, self.shift)),
            "depth": str(self.depth),
            "width": str(self.width),
            "formula_depth": str(self.formula_depth),
            "formula_width": str(self.formula_width),
            "safe_region_error_bound": repr(self.safe_region_error_bound),
            "global_bound": repr(self.global_bound),
            "slot_capacity": str(self.slot_capacity),
            "slot_count": str(self.slot_count),
            "coarse_count": str(self.coarse_count),
            "c7": repr(self.c7),
            "c8": repr(self.c8),
            "precondition_ok": str(self.precondition_ok).lower(),
            "padding": "; ".join(self.padding) or "none",
        }

    def __str__(self) -> str:
        """Format as a one-line summary for logging."""
        return (
            f"{self.kind} M={self.M} F(L={self.depth}, r={self.width}) "
            f"formula F({self.formula_depth}, {self.formula_width}) "
            f"bound={self.safe_region_error_bound:.3g}"
        )


def dump_report(report: ConstructionReport, path: Path) -> Path:
    """Write the network of a report with its bounds and formulas as file header."""
    return dump_network(report.net, path, report.header())

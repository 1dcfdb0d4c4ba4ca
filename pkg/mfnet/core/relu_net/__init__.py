from mfnet.core.relu_net.assembly import LayerPlan, NetworkAssembler
from mfnet.core.relu_net.combinators import (
    affine_input,
    affine_output,
    compose,
    linear_combine,
    pad_depth,
    parallel,
)
from mfnet.core.relu_net.evaluate import evaluate, evaluate_scalar, forward
from mfnet.core.relu_net.models import Network, NetworkArch
from mfnet.core.relu_net.serialize import (
    dump_network,
    load_network,
    read_header,
    read_network,
    write_network,
)

__all__ = (
    "affine_input",
    "affine_output",
    "compose",
    "dump_network",
    "evaluate",
    "evaluate_scalar",
    "forward",
    "LayerPlan",
    "linear_combine",
    "load_network",
    "Network",
    "NetworkArch",
    "NetworkAssembler",
    "pad_depth",
    "parallel",
    "read_header",
    "read_network",
    "write_network",
)

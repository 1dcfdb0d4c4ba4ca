from io import StringIO
from pathlib import Path

import numpy as np
import pytest

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.relu_net import (
    Network,
    dump_network,
    load_network,
    read_header,
    read_network,
    write_network,
)


def test_write_network_format(tiny_net: Network) -> None:
    buffer = StringIO()

    write_network(tiny_net, buffer, {"kind": "identity"})

    assert buffer.getvalue() == (
        "# kind: identity\n1 1 2 1\n1.0 0.0\n-1.0 0.0\n1.0 -1.0 0.0\n"
    )


def test_dump_and_load(tiny_net: Network, tmp_path: Path) -> None:
    path = dump_network(tiny_net, tmp_path / "net.txt", {"M": 4, "depth": 1})

    loaded = load_network(path)

    assert loaded.arch == tiny_net.arch
    for (weight, bias), (other_weight, other_bias) in zip(
        loaded.layers, tiny_net.layers, strict=True
    ):
        np.testing.assert_array_equal(weight, other_weight)
        np.testing.assert_array_equal(bias, other_bias)
    assert read_header(path) == {"M": "4", "depth": "1"}


def test_read_network_rejects_short_rows() -> None:
    with pytest.raises(ContractViolationError, match="expected 2 columns"):
        read_network(["1 1 1 1", "1.0", "1.0 0.0"])


def test_read_network_rejects_empty_file() -> None:
    with pytest.raises(ContractViolationError, match="empty network file"):
        read_network(["# only: header"])

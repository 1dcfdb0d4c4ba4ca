from collections.abc import Iterable, Mapping
from pathlib import Path
from typing import Any, TextIO

import numpy as np

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.relu_net.models import Network


def _format_row(values: Iterable[float]) -> str:
    return " ".join(repr(float(value)) for value in values)


def write_network(
    net: Network, handle: TextIO, header: Mapping[str, Any] | None = None
) -> None:
    """Write a network in the flat text format.

    The optional header is written as `# key: value` lines before the
    `D L k1 .. kL OUT` line; each following line is one neuron `w_1 .. w_prev b`.
    """
    for key, value in (header or {}).items():
        handle.write(f"# {key}: {value}\n")
    arch = net.arch
    handle.write(
        " ".join(
            str(size)
            for size in (arch.input_dim, arch.depth, *arch.hidden_widths, arch.output_dim)
        )
        + "\n"
    )
    for weight, bias in net.layers:
        for row, offset in zip(weight, bias, strict=True):
            handle.write(_format_row([*row, offset]) + "\n")


def read_network(lines: Iterable[str]) -> Network:
    """Parse a network from the flat text format, skipping `#` header lines."""
    content = [
        line.split() for line in lines if line.strip() and not line.startswith("#")
    ]
    if not content:
        raise ContractViolationError("empty network file")
    sizes_line = [int(token) for token in content[0]]
    input_dim, depth = sizes_line[0], sizes_line[1]
    sizes = [input_dim, *sizes_line[2 : 2 + depth], sizes_line[2 + depth]]
    rows = iter(content[1:])
    layers = []
    for fan_in, fan_out in zip(sizes[:-1], sizes[1:], strict=True):
        block = np.array(
            [[float(token) for token in next(rows)] for _ in range(fan_out)]
        )
        if block.shape != (fan_out, fan_in + 1):
            raise ContractViolationError(
                f"layer rows of shape {block.shape}", f"expected {fan_in + 1} columns"
            )
        layers.append((block[:, :-1], block[:, -1]))
    return Network.from_layers(layers)


def dump_network(
    net: Network, path: Path, header: Mapping[str, Any] | None = None
) -> Path:
    """Write a network file to `path` and return the path."""
    with open(path, "w", encoding="utf-8") as handle:
        write_network(net, handle, header)
    return path


def load_network(path: Path) -> Network:
    """Read a network file from `path`."""
    with open(path, encoding="utf-8") as handle:
        return read_network(handle)


def read_header(path: Path) -> dict[str, str]:
    """Read the `# key: value` header lines of a network file."""
    header = {}
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            if not line.startswith("#"):
                break
            key, _, value = line[1:].partition(":")
            header[key.strip()] = value.strip()
    return header

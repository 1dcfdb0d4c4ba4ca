import numpy as np
import pytest

from mfnet.core.exceptions import ContractViolationError
from mfnet.core.relu_net import NetworkAssembler, evaluate


def test_assembler_addresses_blocks() -> None:
    assembler = NetworkAssembler(2)
    first = assembler.layer()
    positive = first.add(np.eye(2))
    negative = first.add(-np.eye(2))
    assembler.push(first)

    output = assembler.layer()
    weight = np.zeros((1, first.width))
    weight[0, positive] = 1.0
    weight[0, negative] = 1.0
    output.add(weight, 0.5)
    net = assembler.finish(output)

    assert positive == slice(0, 2)
    assert negative == slice(2, 4)
    assert assembler.depth == 1
    assert evaluate(net, [-1.0, 2.0])[0] == pytest.approx(3.5)


def test_layer_plan_rejects_wrong_input_width() -> None:
    plan = NetworkAssembler(3).layer()
    with pytest.raises(ContractViolationError, match="layer has 3"):
        plan.add(np.ones((1, 2)))


def test_empty_layer_cannot_be_pushed() -> None:
    assembler = NetworkAssembler(1)
    with pytest.raises(ContractViolationError, match="without neurons"):
        assembler.push(assembler.layer())

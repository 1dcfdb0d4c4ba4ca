import numpy as np
import pytest
from pydantic import ValidationError

from mfnet.core.models import BaseModel
from mfnet.core.types import FrozenArray, PreconditionPolicy


class DummyBaseModel(BaseModel):
    foo: str | None = None


class ArrayHolder(BaseModel):
    values: FrozenArray
    policy: PreconditionPolicy = PreconditionPolicy.WARN


def test_base_model_is_frozen() -> None:
    model = DummyBaseModel(foo="bar")

    with pytest.raises(ValidationError, match="frozen"):
        model.foo = "baz"  # type: ignore[misc]


def test_base_model_forbids_extra_fields() -> None:
    with pytest.raises(ValidationError, match="Extra inputs are not permitted"):
        DummyBaseModel(foo="bar", bar="foo")  # type: ignore[call-arg]


def test_base_model_checksum() -> None:
    model_1 = DummyBaseModel()
    model_2 = DummyBaseModel(foo="bar")

    assert model_1.checksum() == DummyBaseModel().checksum()
    assert model_1.checksum() != model_2.checksum()
    assert len(model_1.checksum()) == 32


def test_base_model_str() -> None:
    model = DummyBaseModel(foo="bar")
    assert str(model) == f"DummyBaseModel: {model.checksum()}"


def test_frozen_array_field() -> None:
    source = [[1, 2], [3, 4]]
    model = ArrayHolder(values=source)

    assert model.values.dtype == np.float64
    assert not model.values.flags.writeable
    with pytest.raises(ValueError, match="read-only"):
        model.values[0, 0] = 5.0
    assert model.model_dump(mode="json") == {
        "values": [[1.0, 2.0], [3.0, 4.0]],
        "policy": "warn",
    }


def test_frozen_array_copies_input() -> None:
    source = np.zeros(3)
    model = ArrayHolder(values=source)
    source[0] = 1.0

    assert model.values[0] == 0.0

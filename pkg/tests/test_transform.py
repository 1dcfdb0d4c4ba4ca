import json
from enum import Enum
from pathlib import Path, PurePosixPath, PureWindowsPath
from typing import Annotated, Any

import numpy as np
import pytest
from pydantic import BaseModel as PydanticModel
from pydantic import Field

from mfnet.core.transform import MFNetEncoder
from mfnet.core.types import AssetsPath, FrozenArray


class DummyModel(PydanticModel):
    string_field: Annotated[str, Field(alias="strField")] = "bar"
    integer: int = 42


class ArrayModel(PydanticModel):
    values: FrozenArray


class DummyEnum(Enum):
    THIS = "this"
    THAT = "that"


@pytest.mark.parametrize(
    ("raw", "expected"),
    [
        (DummyModel(strField="bar"), '{"integer": 42, "string_field": "bar"}'),
        (ArrayModel(values=[1, 2.5]), '{"values": [1.0, 2.5]}'),
        (np.array([[1.0, 2.0], [3.0, 4.0]]), "[[1.0, 2.0], [3.0, 4.0]]"),
        (np.int64(7), "7"),
        (np.float64(0.25), "0.25"),
        (np.bool_(True), "true"),
        (DummyEnum.THAT, '"that"'),
        (PureWindowsPath(r"C:\\System\\Win32\\exe.dll"), '"C:/System/Win32/exe.dll"'),
        (PurePosixPath(r"/dev/sys/etc/launch.ctl"), '"/dev/sys/etc/launch.ctl"'),
        (Path("relative", "path"), '"relative/path"'),
        (AssetsPath("relative/path"), '"relative/path"'),
    ],
    ids=[
        "model",
        "model with array",
        "array",
        "integer",
        "float",
        "bool",
        "enum",
        "windows path",
        "posix path",
        "path",
        "anchored path",
    ],
)
def test_mfnet_json_encoder(raw: Any, expected: str) -> None:
    assert json.dumps(raw, cls=MFNetEncoder, sort_keys=True) == expected


def test_mfnet_json_encoder_unserializable() -> None:
    with pytest.raises(TypeError, match="object is not JSON serializable"):
        assert json.dumps({"foo": object()}, cls=MFNetEncoder)

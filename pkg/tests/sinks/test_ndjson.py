import json
from enum import Enum
from pathlib import Path

import numpy as np

from mfnet.core.models import BaseModel
from mfnet.core.settings import BaseSettings
from mfnet.core.sinks import write_ndjson
from mfnet.core.types import FrozenArray


class DummyEnum(Enum):
    NAME = "value"


class Thing(BaseModel):
    name: str
    enum_attr: DummyEnum | None = None
    values: FrozenArray | None = None
    path_attr: Path | None = None


def test_write_ndjson() -> None:
    settings = BaseSettings.get()
    test_models = [
        Thing(name="foo"),
        Thing(name="bar", enum_attr=DummyEnum.NAME),
        Thing(name="baz", values=np.array([0.5, 2.0])),
        Thing(name="dat", path_attr=Path("some", "file.csv")),
    ]

    checksums = list(write_ndjson(test_models))

    assert checksums == [model.checksum() for model in test_models]
    with open(settings.work_dir / "Thing.ndjson") as handle:
        output = handle.read()

    expected = """\
{"enum_attr": null, "name": "foo", "path_attr": null, "values": null}
{"enum_attr": "value", "name": "bar", "path_attr": null, "values": null}
{"enum_attr": null, "name": "baz", "path_attr": null, "values": [0.5, 2.0]}
{"enum_attr": null, "name": "dat", "path_attr": "some/file.csv", "values": null}
"""
    assert output == expected


def test_write_ndjson_appends(tmp_path: Path) -> None:
    for _ in write_ndjson([Thing(name="foo")], tmp_path):
        pass
    for _ in write_ndjson([Thing(name="bar")], tmp_path):
        pass

    lines = (tmp_path / "Thing.ndjson").read_text().splitlines()

    assert [json.loads(line)["name"] for line in lines] == ["foo", "bar"]

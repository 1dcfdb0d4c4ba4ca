from io import StringIO

from pytest import LogCaptureFixture

from mfnet.core.extract import get_dtypes_for_model, parse_csv
from mfnet.core.harness import ReportRow, SummaryRow
from mfnet.core.models import BaseModel


class DummyModel(BaseModel):
    bool_: bool
    str_: str
    float_: float
    int_: int
    optional_: float | None = None


def test_get_dtypes_for_model() -> None:
    assert get_dtypes_for_model(DummyModel) == {
        "bool_": "bool",
        "str_": "string",
        "float_": "Float64",
        "int_": "Int64",
        "optional_": "Float64",
    }


def test_get_dtypes_for_report_row() -> None:
    assert get_dtypes_for_model(ReportRow) == {
        "param": "Float64",
        "rep": "Int64",
        "seed": "Int64",
        "error": "Float64",
        "flag": "string",
    }


def test_parse_csv(caplog: LogCaptureFixture) -> None:
    buffer = StringIO(
        """
bool_,str_,float_,int_,optional_
true,"good row",2.718,42,
false,"bad row",,,1.5
    """.strip()
    )

    parsed_models = list(parse_csv(buffer, DummyModel, chunksize=1))
    assert len(parsed_models) == 1
    assert parsed_models[0].model_dump() == {  # good row
        "bool_": True,
        "float_": 2.718,
        "int_": 42,
        "str_": "good row",
        "optional_": None,
    }
    assert len(caplog.text.splitlines()) == 2
    good_row_log, bad_row_log = caplog.text.splitlines()
    assert "[parse csv] DummyModel 0 OK" in good_row_log
    assert "[parse csv] DummyModel 1 ValidationError" in bad_row_log


def test_parse_report_csv() -> None:
    buffer = StringIO(
        """
param,rep,seed,error,flag
2,0,0,0.125,
4,0,0,,TrainingDivergenceError
    """.strip()
    )

    rows = list(parse_csv(buffer, ReportRow))

    assert rows == [
        ReportRow(param=2.0, rep=0, seed=0, error=0.125),
        ReportRow(param=4.0, rep=0, seed=0, flag="TrainingDivergenceError"),
    ]


def test_parse_summary_csv() -> None:
    buffer = StringIO("param,median,min,max\n500,0.5,0.25,1\n")

    (row,) = parse_csv(buffer, SummaryRow)

    assert row == SummaryRow(param=500.0, median=0.5, min=0.25, max=1.0)

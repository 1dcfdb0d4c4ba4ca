from collections.abc import Generator, Iterable, Sequence
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import pandas as pd  # noqa: E402
from matplotlib import rc_context  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402

from mfnet.core.harness.models import ExperimentReport, InvariantResult  # noqa: E402
from mfnet.core.logging import echo, watch  # noqa: E402
from mfnet.core.models import BaseModel  # noqa: E402
from mfnet.core.settings import BaseSettings  # noqa: E402
from mfnet.core.sinks import write_ndjson  # noqa: E402

CSV_OPTIONS = {"float_format": "%.12g", "lineterminator": "\n", "index": False}
ROW_COLUMNS = ["param", "rep", "seed", "error", "flag"]
SUMMARY_COLUMNS = ["param", "median", "min", "max"]
SLOPE_COLUMNS = ["slope", "intercept", "residual"]
CURVE_COLUMNS = ["epoch", "loss"]
INVARIANT_COLUMNS = ["name", "passed", "detail"]


def _frame(models: Sequence[BaseModel], columns: list[str]) -> pd.DataFrame:
    records = [model.model_dump(include=set(columns)) for model in models]
    return pd.DataFrame.from_records(records, columns=columns)


def write_csv(frame: pd.DataFrame, path: Path) -> Path:
    """Write a data frame with the fixed float format shared by all reports."""
    frame.to_csv(path, **CSV_OPTIONS)
    return path


def render_summary_chart(csv_path: Path, svg_path: Path, xlabel: str) -> Path:
    """Render the log-log chart of a summary CSV.

    The chart is drawn from the CSV content alone with a fixed hash salt and no
    date metadata, so equal CSV files give equal SVG files.
    """
    summary = pd.read_csv(csv_path).dropna()
    summary = summary[(summary["param"] > 0) & (summary["median"] > 0)]
    with rc_context({"svg.hashsalt": "mfnet", "svg.fonttype": "none"}):
        figure = Figure(figsize=(6.0, 4.0))
        axes = figure.add_subplot()
        axes.plot(summary["param"], summary["median"], marker="o", label="median")
        axes.fill_between(
            summary["param"], summary["min"], summary["max"], alpha=0.2, label="range"
        )
        axes.set_xscale("log")
        axes.set_yscale("log")
        axes.set_xlabel(xlabel)
        axes.set_ylabel("error")
        axes.legend()
        figure.savefig(svg_path, format="svg", metadata={"Date": None})
    return svg_path


_XLABELS = {
    "approx_sweep": "grid size M",
    "rate_sweep": "sample size n",
    "dim_study": "ambient dimension d",
}


@watch
def write_report(
    report: ExperimentReport, directory: Path | None = None
) -> Generator[Path, None, None]:
    """Write the CSV files, the chart and the NDJSON summary of a report.

    Args:
        report: Finished experiment report
        directory: Target directory, defaults to `work_dir/<output>`

    Settings:
        work_dir: Parent of the default target directory
        write_svg: Whether to render the summary chart

    Returns:
        Generator for the paths of written files
    """
    settings = BaseSettings.get()
    directory = directory or settings.work_dir / report.config.output
    directory.mkdir(parents=True, exist_ok=True)
    yield write_csv(_frame(report.rows, ROW_COLUMNS), directory / "rows.csv")
    summary_path = write_csv(
        _frame(report.summary, SUMMARY_COLUMNS), directory / "summary.csv"
    )
    yield summary_path
    if report.slope is not None:
        yield write_csv(
            _frame([report.slope], SLOPE_COLUMNS), directory / "slope.csv"
        )
    for curve in report.curves:
        frame = pd.DataFrame(
            {"epoch": range(len(curve.losses)), "loss": curve.losses},
            columns=CURVE_COLUMNS,
        )
        yield write_csv(frame, directory / f"curve_{curve.param:g}_{curve.rep}.csv")
    if settings.write_svg:
        xlabel = _XLABELS.get(report.config.kind.value, "parameter")
        yield render_summary_chart(summary_path, directory / "summary.svg", xlabel)
    summary = report.model_copy(update={"curves": ()})
    (directory / "ExperimentReport.ndjson").unlink(missing_ok=True)
    for _ in write_ndjson([summary], directory):
        pass
    yield directory / "ExperimentReport.ndjson"


@watch
def write_invariants(
    results: Iterable[InvariantResult], directory: Path | None = None
) -> Generator[Path, None, None]:
    """Write the outcome of the property suite to `invariants.csv`."""
    directory = directory or BaseSettings.get().work_dir / "invariants"
    directory.mkdir(parents=True, exist_ok=True)
    results = list(results)
    failed = [result.name for result in results if not result.passed]
    if failed:
        echo(f"[invariants] failed: {', '.join(failed)}", fg="red")
    yield write_csv(
        _frame(results, INVARIANT_COLUMNS), directory / "invariants.csv"
    )

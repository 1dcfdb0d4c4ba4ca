from collections.abc import Generator
from pathlib import Path

import pytest
from click.testing import CliRunner

from mfnet.core.harness import InvariantResult
from mfnet.core.harness import main as module
from mfnet.core.harness.main import approx, dims, invariants, rate
from mfnet.core.settings import BaseSettings


def test_approx_writes_report(approx_file: Path) -> None:
    result = CliRunner().invoke(approx, args=[f"--config={approx_file}"])

    assert result.exit_code == 0, result.stdout
    directory = BaseSettings.get().work_dir / "tiny_approx"
    assert (directory / "rows.csv").is_file()
    assert (directory / "slope.csv").is_file()


@pytest.mark.parametrize("command", [approx, rate, dims], ids=["approx", "rate", "dims"])
def test_sweeps_need_config(command: object) -> None:
    result = CliRunner().invoke(command, args=[])  # type: ignore[arg-type]

    assert result.exit_code == 1, result.stdout


def test_rate_rejects_wrong_kind(approx_file: Path) -> None:
    result = CliRunner().invoke(rate, args=[f"--config={approx_file}"])

    assert result.exit_code == 1, result.stdout


@pytest.mark.parametrize(
    ("passed", "exit_code"), [(True, 0), (False, 1)], ids=["passing", "failing"]
)
def test_invariants_command(
    monkeypatch: pytest.MonkeyPatch, passed: bool, exit_code: int
) -> None:
    def fake_suite() -> Generator[InvariantResult, None, None]:
        yield InvariantResult(name="gating", passed=passed, detail="stub")

    monkeypatch.setattr(module, "run_invariants", fake_suite)

    result = CliRunner().invoke(invariants, args=[])

    assert result.exit_code == exit_code, result.stdout
    path = BaseSettings.get().work_dir / "invariants" / "invariants.csv"
    assert path.read_text().splitlines()[1] == f"gating,{passed},stub"

"""Run the local quality gate: lint, import contracts, types, security, tests.

Usage: ``python -m scripts`` or ``python scripts/test.py --coverage off``.
Each step prints ``[i/n] description`` and the first failing step stops the
run with its exit code.
"""

from __future__ import annotations

import os
import subprocess
import sys
import tomllib
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import click

PROJECT_ROOT = Path(__file__).resolve().parents[1]
_TRUTHY = {"1", "true", "yes", "on"}

__all__ = ["Step", "build_steps", "run_tests", "main"]


@dataclass(frozen=True, slots=True)
class Step:
    description: str
    label: str
    cmd: tuple[str, ...]


def _read_fail_under(pyproject: Path) -> int:
    try:
        data = tomllib.loads(pyproject.read_text(encoding="utf-8"))
        return int(data["tool"]["coverage"]["report"]["fail_under"])
    except (OSError, KeyError, ValueError, tomllib.TOMLDecodeError):
        return 75


def build_steps(*, coverage: bool, strict_format: bool) -> list[Step]:
    """Return the gate in execution order."""

    python = sys.executable
    steps = [
        Step("Ruff lint", "ruff-check", ("ruff", "check", ".")),
        Step(
            "Ruff format check" if strict_format else "Ruff format (apply)",
            "ruff-format",
            ("ruff", "format", "--check", ".") if strict_format else ("ruff", "format", "."),
        ),
        Step("Import-linter contracts", "import-linter", (python, "-m", "importlinter.cli", "lint", "--config", "pyproject.toml")),
        Step("Pyright type-check", "pyright", ("pyright",)),
        Step("Bandit security scan", "bandit", ("bandit", "-q", "-r", "src/aft_sim")),
    ]
    if coverage:
        fail_under = _read_fail_under(PROJECT_ROOT / "pyproject.toml")
        pytest_cmd = (python, "-m", "pytest", "--cov-report=xml:coverage.xml", f"--cov-fail-under={fail_under}", "-vv")
        steps.append(Step("Pytest with coverage", "pytest", pytest_cmd))
    else:
        steps.append(Step("Pytest", "pytest-no-cov", (python, "-m", "pytest", "--no-cov", "-vv")))
    return steps


def run_tests(*, coverage: bool = True, verbose: bool = False, strict_format: bool | None = None) -> None:
    resolved_strict = strict_format if strict_format is not None else os.getenv("STRICT_RUFF_FORMAT", "0").strip().lower() in _TRUTHY
    env = os.environ | {"PYTHONPATH": os.pathsep.join(filter(None, [str(PROJECT_ROOT / "src"), os.environ.get("PYTHONPATH")]))}
    steps = build_steps(coverage=coverage, strict_format=resolved_strict)
    total = len(steps)
    for index, step in enumerate(steps, start=1):
        click.echo(f"[{index}/{total}] {step.description}")
        _run(step.cmd, label=step.label, env=env, verbose=verbose)
    click.echo("All checks passed")


def _run(cmd: Sequence[str], *, label: str, env: dict[str, str], verbose: bool) -> None:
    click.echo(f"[{label}] $ {' '.join(cmd)}")
    result = subprocess.run(list(cmd), cwd=PROJECT_ROOT, env=env, check=False)  # nosec B603
    if verbose:
        click.echo(f"    -> {label}: exit={result.returncode}")
    if result.returncode != 0:
        click.echo(f"[{label}] failed", err=True)
        raise SystemExit(result.returncode)


@click.command(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--coverage", type=click.Choice(["on", "off"]), default="on", show_default=True)
@click.option("--verbose/--quiet", default=False)
@click.option("--strict-format/--apply-format", default=None)
def main(coverage: str, verbose: bool, strict_format: bool | None) -> None:
    """Run every check the CI pipeline runs."""

    run_tests(coverage=coverage == "on", verbose=verbose or os.getenv("TEST_VERBOSE", "").lower() in _TRUTHY, strict_format=strict_format)


if __name__ == "__main__":
    main()

"""Write the bundled scenarios to disk.

Purpose
-------
Give users editable copies of the shipped scenarios. Existing files are left
alone unless ``force`` is set.

Contents
    - ``ExampleSpec``: a relative path and its text.
    - ``write_examples``: public entry point.
    - ``_build_specs`` / ``_should_write`` / ``_ensure_parent``: small helpers
      that narrate how files are written.

System Role
-----------
Backs the ``aft-sim examples`` command.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .bundled import SCENARIO_SUFFIX, bundled_scenario_names, bundled_scenario_text

__all__ = ["ExampleSpec", "write_examples"]


@dataclass(slots=True)
class ExampleSpec:
    """A single example file: path relative to the destination, UTF-8 content."""

    relative_path: Path
    content: str


def write_examples(
    destination: str | Path,
    *,
    force: bool = False,
    names: Iterable[str] | None = None,
) -> list[Path]:
    """Copy the bundled scenarios (or the subset *names*) into *destination*.

    Parameters
    ----------
    destination:
        Directory to write into; created when missing.
    force:
        Overwrite files that already exist.
    names:
        Scenario names to write; all bundled scenarios when omitted.

    Returns
    -------
    list[Path]
        Paths written during this call.

    Examples
    --------
    >>> from tempfile import TemporaryDirectory
    >>> tmp = TemporaryDirectory()
    >>> [path.name for path in write_examples(tmp.name, names=["par_exact"])]
    ['par_exact.scn']
    >>> write_examples(tmp.name, names=["par_exact"])
    []
    >>> tmp.cleanup()
    """

    root = Path(destination)
    chosen = bundled_scenario_names() if names is None else list(names)
    written: list[Path] = []
    for spec in _build_specs(chosen):
        path = root / spec.relative_path
        if not _should_write(path, force):
            continue
        _ensure_parent(path)
        path.write_text(spec.content, encoding="utf-8")
        written.append(path)
    return written


def _build_specs(names: Iterable[str]) -> Iterator[ExampleSpec]:
    for name in names:
        yield ExampleSpec(Path(f"{name}{SCENARIO_SUFFIX}"), bundled_scenario_text(name))


def _should_write(path: Path, force: bool) -> bool:
    return force or not path.exists()


def _ensure_parent(path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)

"""Shared fixtures and helpers for the symstress test suite."""

from __future__ import annotations

import subprocess
import sys
from pathlib import Path

import pytest

from symstress import catalog, framework_to_json, group_spec_to_json


def run_cli(*args: str, cwd: str | Path | None = None) -> subprocess.CompletedProcess:
    """Run the installed CLI in a subprocess and capture its output."""
    return subprocess.run(
        [sys.executable, "-m", "symstress", *args],
        capture_output=True,
        text=True,
        cwd=str(cwd) if cwd is not None else None,
    )


def write_entry(tmp_path: Path, name: str, filename: str | None = None, **params) -> Path:
    """Write a catalog entry's framework to a JSON file and return the path."""
    entry = catalog.generate(name, **params)
    if entry.framework is None:
        raise ValueError(f"catalog entry {name!r} is census-only")
    group = group_spec_to_json(entry.group) if entry.group is not None else None
    path = tmp_path / (filename or f"{name}.json")
    path.write_text(framework_to_json(entry.framework, group=group))
    return path


@pytest.fixture
def entry_file(tmp_path):
    """Factory fixture: entry_file('fig3') -> path to a framework JSON file."""

    def _make(name: str, filename: str | None = None, **params) -> Path:
        return write_entry(tmp_path, name, filename, **params)

    return _make

"""Shared fixture: one fresh dataset run feeding every rendering test."""

import subprocess
import sys

import pytest


@pytest.fixture(scope="session")
def dataset_dir(tmp_path_factory):
    """Generate all nine figure CSV bundles once via the generator's CLI."""
    target = tmp_path_factory.mktemp("figure_csvs")
    completed = subprocess.run(
        [sys.executable, "-m", "numcoh", "figure", "all", "--out", str(target)],
        capture_output=True,
        text=True,
    )
    assert completed.returncode == 0, completed.stderr
    return target

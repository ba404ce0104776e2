from __future__ import annotations

import os
import subprocess
import sys
from pathlib import Path

import pytest

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def run_cli():
    """Run the CLI in a subprocess and return the CompletedProcess."""

    def _run(*args, env_extra: dict[str, str] | None = None):
        env = os.environ.copy()
        if env_extra:
            env.update(env_extra)
        return subprocess.run(
            [sys.executable, "-m", "staircase_sums", *map(str, args)],
            capture_output=True,
            text=True,
            env=env,
            timeout=120,
        )

    return _run


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR

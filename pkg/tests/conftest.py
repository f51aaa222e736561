from __future__ import annotations

import os
import subprocess
import sys
from pathlib import Path

import pytest

PACKAGE_ROOT = Path(__file__).resolve().parent.parent

RUN_LONG = bool(os.environ.get("ROTWORD_RUN_LONG"))

long_check = pytest.mark.skipif(
    not RUN_LONG, reason="long check; set ROTWORD_RUN_LONG=1 to enable"
)


@pytest.fixture()
def run_cli():
    """Invoke the CLI in a subprocess and capture output."""

    def run(*argv: str, env_extra: dict[str, str] | None = None):
        env = dict(os.environ)
        if env_extra:
            env.update(env_extra)
        return subprocess.run(
            [sys.executable, "-m", "rotword", *argv],
            cwd=PACKAGE_ROOT,
            env=env,
            capture_output=True,
            text=True,
            check=False,
            timeout=300,
        )

    return run

"""Shared test helpers: CLI subprocess runner and golden-file access."""

import os
import subprocess
import sys
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parents[1]
GOLDEN_DIR = Path(__file__).parent / "goldens"


def run_cli(*args: str) -> subprocess.CompletedProcess:
    """Invoke the CLI the way a user would: as a fresh interpreter process."""
    env = dict(os.environ)
    parts = [str(REPO_ROOT / "src")]
    if env.get("PYTHONPATH"):
        parts.append(env["PYTHONPATH"])
    env["PYTHONPATH"] = os.pathsep.join(parts)
    return subprocess.run([sys.executable, "-m", "rscount", *args],
                          capture_output=True, text=True, env=env,
                          cwd=REPO_ROOT)


def golden(name: str) -> str:
    return (GOLDEN_DIR / name).read_text()

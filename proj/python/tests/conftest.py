import json
import os
import shutil
import subprocess
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]


def _tool():
    explicit = os.environ.get("FOLKLAB_BIN")
    if explicit:
        return explicit
    for candidate in (ROOT / "build" / "folklab", shutil.which("folklab")):
        if candidate and Path(candidate).exists():
            return str(candidate)
    pytest.skip("folklab executable not found; set FOLKLAB_BIN")


@pytest.fixture(scope="session")
def tool():
    return _tool()


@pytest.fixture(scope="session")
def schema():
    with open(ROOT / "schema" / "folklab-output.schema.json") as f:
        return json.load(f)


@pytest.fixture(scope="session")
def run(tool):
    def _run(*args, check=True):
        proc = subprocess.run([tool, *args], capture_output=True, text=True, timeout=600)
        if check and proc.returncode != 0:
            raise AssertionError(f"exit {proc.returncode}: {proc.stderr}")
        return proc

    return _run

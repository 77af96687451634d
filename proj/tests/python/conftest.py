import json
import os
import subprocess
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def hx():
    path = os.environ.get("HX", str(ROOT / "build" / "hx"))
    if not Path(path).exists():
        pytest.skip("hx binary not built")

    def run(*args, env=None):
        full_env = dict(os.environ)
        full_env.pop("HX_THREADS", None)
        full_env.update(env or {})
        return subprocess.run([path, *map(str, args)], capture_output=True, text=True, env=full_env)

    return run


@pytest.fixture(scope="session")
def schema():
    path = os.environ.get("CODEGREE_SCHEMA", str(ROOT / "schemas" / "report.v1.json"))
    return json.loads(Path(path).read_text())

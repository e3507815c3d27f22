import subprocess
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


@pytest.mark.parametrize("script,args", [
    ("example1.py", []),
    ("necessity_sweep.py", ["--sizes", "3", "--trials", "5"]),
    ("monte_carlo.py", ["--draws", "2000"]),
])
def test_script_runs(script, args):
    res = subprocess.run([sys.executable, str(SCRIPTS / script), *args], capture_output=True, text=True, timeout=60)
    assert res.returncode == 0, res.stderr
    assert res.stdout


def test_example1_script_writes_files(tmp_path):
    subprocess.run([sys.executable, str(SCRIPTS / "example1.py"), "--out", str(tmp_path)], check=True,
                   capture_output=True)
    assert (tmp_path / "example1.json").exists() and (tmp_path / "example1_model.json").exists()

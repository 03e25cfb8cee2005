import subprocess
import sys

import pytest


@pytest.fixture(scope="session")
def golden_dir(tmp_path_factory):
    """Golden CSVs produced by the compute package's CLI, nothing else."""
    root = tmp_path_factory.mktemp("golden")
    dist = root / "toss.csv"
    dist.write_text("trade,prob\n-1,1/2\n2,1/2\n")
    proc = subprocess.run(
        [
            sys.executable, "-m", "optimalf", "figures",
            "--dist", str(dist), "--out-dir", str(root),
            "--steps", "2000", "--seed", "12",
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    return root

"""Regenerate fixtures/golden/*.txt from the current CLI output."""

import os
import subprocess
import sys
from pathlib import Path

root = Path(__file__).resolve().parent.parent
env = dict(os.environ, UPDATE_GOLDEN="1")
sys.exit(subprocess.call([sys.executable, "-m", "pytest", "-q", "tests/test_cli.py", "-k", "golden"], cwd=root, env=env))

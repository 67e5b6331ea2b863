"""Golden-file tests for the command-line reports.

Each case in fixtures/golden/manifest.json is run in-process from the
repository root; stdout, stderr and the exit code are compared byte for byte
with fixtures/golden/<name>.txt.  Set UPDATE_GOLDEN=1 to rewrite them.
"""

import io
import json
import os
from pathlib import Path

import pytest

from novikov_lab import __version__
from novikov_lab.cli import main

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "fixtures" / "golden"
CASES = json.loads((GOLDEN / "manifest.json").read_text())


def render(case):
    """Run one manifest case and format its transcript."""
    argv = [case["args"][0], f"fixtures/{case['fixture']}"] + case["args"][1:]
    out, err = io.StringIO(), io.StringIO()
    cwd = os.getcwd()
    os.chdir(ROOT)
    try:
        code = main(argv, stdout=out, stderr=err)
    finally:
        os.chdir(cwd)
    text = "$ novikov-lab " + " ".join(argv) + "\n" + out.getvalue()
    if err.getvalue():
        text += "[stderr]\n" + err.getvalue()
    return text + f"[exit {code}]\n", code


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
def test_golden(case, monkeypatch):
    monkeypatch.delenv("NOVIKOV_LAB_LIMIT", raising=False)
    text, _ = render(case)
    path = GOLDEN / f"{case['name']}.txt"
    if os.environ.get("UPDATE_GOLDEN") == "1":
        path.write_text(text, encoding="utf-8")
    assert path.exists(), f"missing golden file {path.name}; run with UPDATE_GOLDEN=1"
    assert text == path.read_text(encoding="utf-8")


def test_exit_codes():
    codes = {c["name"]: render(c)[1] for c in CASES}
    assert codes["circle_loop3.novikov"] == 0
    assert codes["malformed.novikov"] == 1
    assert codes["missing_version.novikov"] == 1
    assert codes["not_closed.novikov"] == 2
    assert codes["nonadmissible.equivariant"] == 2
    assert codes["resource_limit.equivariant"] == 3
    # a failed verdict is a finding, not an error
    assert codes["inconsistent.verify"] == 0


def test_json_reports_parse():
    for case in CASES:
        if "--json" in case["args"]:
            argv = [case["args"][0], str(ROOT / "fixtures" / case["fixture"])] + case["args"][1:]
            out = io.StringIO()
            assert main(argv, stdout=out, stderr=io.StringIO()) == 0
            json.loads(out.getvalue())


def test_version_and_limit_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert __version__ in capsys.readouterr().out
    out, err = io.StringIO(), io.StringIO()
    code = main(["equivariant", str(ROOT / "fixtures" / "z2_point.json"), "--limit", "10"], stdout=out, stderr=err)
    assert code == 3 and err.getvalue().startswith("resource limit: ")


def test_env_limit(monkeypatch):
    monkeypatch.setenv("NOVIKOV_LAB_LIMIT", "10")
    out, err = io.StringIO(), io.StringIO()
    assert main(["equivariant", str(ROOT / "fixtures" / "z2_point.json")], stdout=out, stderr=err) == 3


def test_missing_file():
    err = io.StringIO()
    assert main(["novikov", "/nonexistent/problem.json"], stdout=io.StringIO(), stderr=err) == 1
    assert err.getvalue().startswith("schema error: ")

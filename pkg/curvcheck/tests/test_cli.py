import json
import subprocess
import sys
from pathlib import Path

from curvcheck import __version__
from curvcheck.checks import avail_checks
from curvcheck.cli import main

repo_root = Path(__file__).resolve().parents[2]

suite = """\
[suite]
points_per_target = 2
seed = 1
checks = scalar_curvature, riemann_symmetries

[target:sphere:n=3]

[target:euclidean:n=2]
"""


def _run(args):
    # module mode so the test does not need the console script installed
    cmd = [sys.executable, "-m", "curvcheck", *args]
    return subprocess.run(cmd, cwd=str(repo_root), text=True,
                          capture_output=True)


def _write(tmp_path, text, name='suite.ini'):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_cli_version_smoke():
    r = _run(["--version"])
    assert r.returncode == 0, r.stderr
    assert __version__ in r.stdout + r.stderr


def test_cli_lists_checks_and_targets():
    r = _run(["--list-checks", "--list-targets"])
    assert r.returncode == 0, r.stderr
    for name in avail_checks:
        assert name in r.stdout
    assert "clifford:n=4,k=2" in r.stdout


def test_cli_runs_suite_and_emits_json(tmp_path):
    r = _run(["--config", _write(tmp_path, suite)])
    assert r.returncode == 0, r.stderr
    data = json.loads(r.stdout)
    assert data["meta"]["seed"] == 1
    assert data["summary"]["fail"] == 0
    assert data["summary"]["total"] == 2 * 2 * 2


def test_cli_is_deterministic(tmp_path):
    path = _write(tmp_path, suite)
    first = _run(["--config", path, "--seed", "9"])
    second = _run(["--config", path, "--seed", "9"])
    assert first.returncode == 0, first.stderr
    assert first.stdout == second.stdout
    assert json.loads(first.stdout)["meta"]["seed"] == 9


def test_main_writes_text_report(tmp_path, capsys):
    out = tmp_path / "report.txt"
    code = main(["--config", _write(tmp_path, suite), "--format", "text",
                 "--out", str(out)])
    assert code == 0
    assert capsys.readouterr().out == ""
    assert out.read_text().splitlines()[-1] == \
        "pass: 8 fail: 0 inapplicable: 0 total: 8"


def test_main_exit_codes(tmp_path):
    failing = suite.replace("[target:euclidean:n=2]",
                            "[target:wrong]\ndim = 2\ndomain = -1, 1; -1, 1\n"
                            "metric = 1, 0; 0, 1\nflat = true\nscalar = 1")
    assert main(["--config", _write(tmp_path, failing, "fail.ini")]) == 1

    empty = "[suite]\nseed = 1\n"
    assert main(["--config", _write(tmp_path, empty, "empty.ini")]) == 2

    bad = suite + "\n[check:curvature_magic]\n"
    assert main(["--config", _write(tmp_path, bad, "bad.ini")]) == 2

    assert main(["--config", str(tmp_path / "missing.ini")]) == 2
    assert main([]) == 2


def test_main_report_write_error(tmp_path):
    code = main(["--config", _write(tmp_path, suite),
                 "--out", str(tmp_path / "missing" / "report.json")])
    assert code == 2


def test_main_bad_field_specs(tmp_path):
    for i, field in enumerate(["metric:abc", "hessian:nosuch"]):
        bad = suite.replace("[target:euclidean:n=2]",
                            "[target:euclidean:n=2]\nfield = " + field)
        path = _write(tmp_path, bad, "field{}.ini".format(i))
        assert main(["--config", path]) == 2

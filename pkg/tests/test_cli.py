import subprocess
import sys

import pytest

from lukatree import HEIGHT_SCAN_COLUMNS
from lukatree.cli import main

MOTZKIN = "a:-1,b:0,c:1"
BINARY = "a:-1,c:1"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_valid_not_lukasiewicz(capsys):
    code, out, err = run_cli(capsys, "check", "--alphabet", MOTZKIN, "--word", "babacac")
    assert code == 0 and err == ""
    assert out == "valid,not-lukasiewicz\n0,-1,-1,-2,-1,-2,-1\n"


def test_check_lukasiewicz(capsys):
    code, out, _ = run_cli(capsys, "check", "--alphabet", MOTZKIN, "--word", "cacbaba")
    assert code == 0
    assert out == "lukasiewicz\n1,0,1,1,0,0,-1\n"


def test_check_invalid(capsys):
    code, out, _ = run_cli(capsys, "check", "--alphabet", MOTZKIN, "--word", "cc")
    assert code == 0
    assert out == "invalid\n1,2\n"


def test_count(capsys):
    code, out, _ = run_cli(capsys, "count", "--alphabet", MOTZKIN, "--tuple", "3,2,2")
    assert code == 0 and out == "30\n"
    code, out, _ = run_cli(
        capsys, "count", "--alphabet", MOTZKIN, "--tuple", "3,2,2", "--kind", "words"
    )
    assert code == 0 and out == "210\n"


def test_enumerate(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--alphabet", BINARY, "--tuple", "3,2")
    assert code == 0
    assert out == "cacaa\nccaaa\n"


def test_render_paren(capsys):
    code, out, _ = run_cli(capsys, "render", "--alphabet", MOTZKIN, "--word", "cacbaba")
    assert code == 0
    assert out == "c(a,c(b(a),b(a)))\n"


def test_render_dot(capsys):
    code, out, _ = run_cli(
        capsys, "render", "--alphabet", MOTZKIN, "--word", "caa", "--format", "dot"
    )
    assert code == 0
    assert 'n0 [label="c"]' in out
    assert "n0 -> n2;" in out


def test_render_rejects_non_lukasiewicz(capsys):
    code, out, err = run_cli(capsys, "render", "--alphabet", MOTZKIN, "--word", "babacac")
    assert code == 1 and out == ""
    assert err.startswith("lukatree: error:")


def test_sample_singleton_with_bits(capsys):
    code, out, _ = run_cli(
        capsys,
        "sample",
        "--alphabet",
        MOTZKIN,
        "--tuple",
        "1,0,0",
        "--count",
        "2",
        "--count-bits",
    )
    assert code == 0
    assert out == "a bits=0\na bits=0\n"


@pytest.mark.parametrize("method", ["dicho", "perm"])
def test_sample_deterministic_and_well_formed(capsys, method):
    argv = (
        "sample",
        "--alphabet",
        MOTZKIN,
        "--tuple",
        "3,1,2",
        "--count",
        "5",
        "--method",
        method,
        "--seed",
        "11",
    )
    code, first, _ = run_cli(capsys, *argv)
    assert code == 0
    code, second, _ = run_cli(capsys, *argv)
    assert first == second
    lines = first.splitlines()
    assert len(lines) == 5
    for word in lines:
        assert len(word) == 6
        assert sorted(word) == sorted("aaabcc")


def test_sample_count_bits_reports_positive_cost(capsys):
    code, out, _ = run_cli(
        capsys,
        "sample",
        "--alphabet",
        MOTZKIN,
        "--tuple",
        "3,1,2",
        "--count",
        "3",
        "--count-bits",
        "--seed",
        "4",
    )
    assert code == 0
    for line in out.splitlines():
        word, _, suffix = line.partition(" bits=")
        assert len(word) == 6
        assert int(suffix) > 0


def test_domain_errors_exit_one(capsys):
    cases = [
        ("count", "--alphabet", BINARY, "--tuple", "2,2"),
        ("enumerate", "--alphabet", MOTZKIN, "--tuple", "7,0,6"),
        ("check", "--alphabet", MOTZKIN, "--word", "caz"),
        ("height-scan", "--n", "9", "--fractions", "a,b"),
        ("bitcost", "--k-max", "1"),
        ("sample", "--alphabet", "a:0,b:1", "--tuple", "1,1"),
    ]
    for argv in cases:
        code, out, err = run_cli(capsys, *argv)
        assert code == 1, argv
        assert out == ""
        assert err.startswith("lukatree: error:")


def test_flag_misuse_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["count", "--tuple", "1,0"])  # missing --alphabet
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["sample", "--alphabet", MOTZKIN, "--tuple", "1,0,0", "--method", "magic"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_height_scan_smoke(capsys):
    code, out, _ = run_cli(
        capsys,
        "height-scan",
        "--n",
        "15",
        "--fractions",
        "0,0.5",
        "--replicates",
        "30",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == HEIGHT_SCAN_COLUMNS
    assert len(lines) == 3


def test_bitcost_smoke(capsys):
    code, out, _ = run_cli(capsys, "bitcost", "--k-max", "3", "--replicates", "40")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("k,replicates,")
    assert len(lines) == 3


def test_module_and_script_entry_points():
    cmd = ["count", "--alphabet", BINARY, "--tuple", "4,3"]
    by_module = subprocess.run(
        [sys.executable, "-m", "lukatree", *cmd], capture_output=True, text=True
    )
    assert by_module.returncode == 0 and by_module.stdout == "5\n"
    by_script = subprocess.run(["lukatree", *cmd], capture_output=True, text=True)
    assert by_script.returncode == 0 and by_script.stdout == "5\n"

import json
import subprocess
import sys

import pytest

from wstrass.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--format", "json", *argv)
    assert code == 0, err
    return json.loads(out)


def test_genus(capsys):
    data = run_json(capsys, "genus", "--n", "3", "--f", "x^4-1")
    assert data["result"]["genus"] == 3
    assert data["inputs"] == {"n": 3, "f": "x^4-1"}
    assert data["command"] == "genus"


def test_format_after_subcommand(capsys):
    code, out, _ = run(capsys, "genus", "--n", "2", "--f", "x^5+1", "--format", "json")
    assert code == 0 and json.loads(out)["result"]["genus"] == 2


def test_basis_branch_infinity(capsys):
    data = run_json(capsys, "basis", "--n", "2", "--f", "x^5+1", "--q", "2")
    assert data["result"]["pairs"] == [[0, 0], [1, 0], [2, 0]] and data["result"]["d_q"] == 3
    data = run_json(capsys, "branch", "--n", "3", "--f", "x^4-1")
    assert data["result"]["gaps"] == [1, 2, 4] and data["result"]["weight"] == 1
    data = run_json(capsys, "infinity", "--n", "3", "--f", "x^4-1")
    assert data["result"]["gaps"] == [1, 2, 5] and data["result"]["weight"] == 2


def test_divisor(capsys):
    data = run_json(capsys, "divisor", "--n", "2", "--f", "x^5+1", "--gen", "dx")
    assert data["result"]["degree"] == 2
    data = run_json(capsys, "divisor", "--n", "2", "--f", "x^5+1", "--gen", "x-c:1/2")
    assert data["result"]["degree"] == 0
    assert {"place": "Pinf1", "coefficient": -2} in data["result"]["terms"]
    code, _, err = run(capsys, "divisor", "--n", "2", "--f", "x^5+1", "--gen", "x-c:-1")
    assert code == 1 and "branch point" in err
    code, _, _ = run(capsys, "divisor", "--n", "2", "--f", "x^5+1", "--gen", "z")
    assert code == 2


def test_point_weight_rationals_as_strings(capsys):
    data = run_json(capsys, "point-weight", "--n", "2", "--f", "x^6+3", "--x", "1", "--y", "-2")
    assert data["result"] == {"q": 1, "point": ["1", "-2"], "weight": 0}


def test_gapseqs_total_weight(capsys):
    data = run_json(capsys, "gapseqs", "--g", "3")
    assert data["result"]["sequences"] == [[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 3, 5]]
    data = run_json(capsys, "total-weight", "--g", "2", "--q", "2")
    assert data["result"]["total_weight"] == 18


def test_quartic_commands(capsys):
    data = run_json(capsys, "quartic", "inflections", "--F", "x^4+y^4+z^4", "--seed", "3")
    assert data["result"]["weight_multiset"] == {"1": 0, "2": 12}
    assert data["command"] == "quartic inflections"
    data = run_json(capsys, "quartic", "tangent-test", "--F", "y^4 - x*z*(x-z)*(x-3*z)", "--point", "3,0,1")
    assert data["result"]["weight"] == 2
    code, _, err = run(capsys, "quartic", "tangent-test", "--F", "x^4+y^4+z^4", "--point", "1,0,0")
    assert code == 1 and "not on the curve" in err
    code, _, _ = run(capsys, "quartic", "tangent-test", "--F", "x^4+y^4+z^4", "--point", "1,0")
    assert code == 2
    code, _, err = run(capsys, "quartic", "inflections", "--F", "(x^2+y^2+z^2)^2")
    assert code == 1 and "not smooth" in err


def test_bounds_commands(capsys):
    data = run_json(capsys, "bounds", "rh", "--deg", "168", "--gy", "0", "--ram", "2x84,3x56,7x24")
    assert data["result"]["genus"] == 3
    assert run_json(capsys, "bounds", "hurwitz", "--g", "3")["result"]["bound"] == 168
    data = run_json(capsys, "bounds", "min-r")
    assert data["result"] == {"gY": 0, "orders": [2, 3, 7], "R": "1/42"}
    data = run_json(capsys, "bounds", "fix", "--g", "3", "--order", "2", "--nonhyperelliptic")
    assert data["result"]["bound"] == 5
    code, _, err = run(capsys, "bounds", "hurwitz", "--g", "1")
    assert code == 1 and "genus >= 2" in err


def test_text_output(capsys):
    code, out, _ = run(capsys, "bounds", "min-r")
    assert code == 0 and "R = 1/42" in out
    code, out, _ = run(capsys, "branch", "--n", "2", "--f", "x^5+1", "--q", "2")
    assert "{1, 3, 5}" in out and "weight 3" in out


@pytest.mark.parametrize(
    "argv, code",
    [
        (["genus", "--n", "2", "--f", "x^2+1"], 1),
        (["genus", "--n", "2", "--f", "(x-1)^2*(x^3+2)"], 1),
        (["genus", "--n", "2", "--f", "x^-1"], 2),
        (["genus", "--n", "2"], 2),
        (["bogus"], 2),
        (["gapseqs", "--g", "12"], 1),
        (["infinity", "--n", "2", "--f", "x^6+3"], 1),
        (["point-weight", "--n", "2", "--f", "x^5+1", "--x", "0", "--y", "2"], 1),
        (["point-weight", "--n", "2", "--f", "x^5+1", "--x", "zero", "--y", "1"], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_json_errors_go_to_stderr(capsys):
    code, out, err = run(capsys, "--format", "json", "bounds", "hurwitz", "--g", "0")
    assert code == 1 and out == ""
    assert json.loads(err)["error"] == "domain"


def test_no_floats_in_json(capsys):
    data = run_json(capsys, "bounds", "min-r", "--min-gy", "1")
    assert data["result"]["R"] == "1/2"
    text = json.dumps(data)
    assert "0.5" not in text


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "wstrass.cli", "total-weight", "--g", "3"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and "24" in proc.stdout


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert "quartic" in capsys.readouterr().out

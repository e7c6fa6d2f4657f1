import csv
import io
import subprocess
import sys

import pytest

from landen.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("eval", "landen", "0.25", "1"), 0.8),
        (("eval", "landen", "0.25", "-1"), 0.016133230340664918),
        (("eval", "K", "0.7071067811865476"), 1.8540746773013719),
        (("eval", "mu", "0.7071067811865476"), 1.5707963267948966),
        (("eval", "agm", "1", "1"), 1.0),
    ],
)
def test_eval_values(argv, expected):
    code, out, _ = run(*argv)
    assert code == 0
    assert float(out) == pytest.approx(expected, rel=4e-16)


def test_eval_prints_round_trip_digits():
    code, out, _ = run("eval", "landen", "0.25", "1")
    assert out.strip() == "0.8"


@pytest.mark.parametrize("method", ["production", "theta", "g2", "g3", "f1"])
def test_eval_mu_inv_methods(method):
    code, out, _ = run("eval", "mu_inv", "2.0", "--method", method)
    assert code == 0
    assert float(out) == pytest.approx(0.5040963493735582, rel=1e-14)


def test_eval_domain_error():
    code, out, err = run("eval", "phi", "2", "0.9", "--method", "lphi", "--depth", "1")
    assert code == 2
    assert "inner value 1.25358 " in err
    assert "offending value: 1.253578" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "landen", "0.5"),
        ("eval", "landen", "x", "1"),
        ("eval", "mu", "0.5", "--method", "nope"),
        ("table", "mu-bracket", "--r", "0.1:0.9"),
        ("check", "landen", "--tol", "phi_pyth"),
        ("check", "landen", "--tol", "nope=1"),
    ],
)
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_eval_out_of_domain():
    assert run("eval", "landen", "1.5", "1")[0] == 2


def test_table_mu_inverse_error():
    code, out, err = run("table", "mu-inverse-error", "--ys", "0.5:19.5:1", "--approx", "g3", "--p", "5")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["y", "reference", "approx", "error"]
    assert len(rows) == 21
    assert all(abs(float(r[3])) <= 5e-16 for r in rows[1:])
    assert "20 rows" in err


def test_table_phi_error():
    code, out, _ = run("table", "phi-error", "--K", "1.5:2.5:0.5", "--r", "0.1:0.9:0.4")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and len(rows) == 1 + 3 * 3
    assert all(abs(float(r[4])) <= 1e-13 for r in rows[1:])


def test_table_mu_bracket():
    code, out, _ = run("table", "mu-bracket", "--r", "0.1:0.9:0.1", "--p", "1")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and len(rows) == 10
    for r in rows[1:]:
        lower, m, upper = map(float, r[1:])
        assert lower < m < upper


def test_table_is_deterministic():
    a = run("table", "mu-bracket", "--r", "0.1:0.9:0.1")
    b = run("table", "mu-bracket", "--r", "0.1:0.9:0.1")
    assert a == b


def test_check_landen_small_grid_passes():
    code, out, err = run("check", "landen", "--grid", "10")
    assert code == 0
    assert "suite landen passed" in err
    assert out.startswith("ok")


def test_check_tolerance_override_fails():
    code, out, err = run("check", "phi", "--grid", "10", "--tol", "phi_pyth=1e-20")
    assert code == 1
    assert "FAIL phi_pyth" in out


def test_explore_open1():
    code, out, _ = run("explore", "open1", "--r", "0.1:0.5:0.2", "--K", "1.5:2.5:0.5", "--p", "0:2")
    assert code == 0
    assert "points: 27" in out
    assert "violations: 0" in out


def test_explore_open2():
    code, out, _ = run("explore", "open2")
    assert code == 0
    assert "not implemented" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "landen", "eval", "landen", "0.25", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "0.8"

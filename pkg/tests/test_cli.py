import json
import subprocess
import sys

import pytest

from conftest import P
from polysplit.cli import Config, main
from polysplit.criterion import read_csv
from polysplit.polytext import parse_poly


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_factor(capsys):
    code, out, _ = run(capsys, "factor", "X^4+4")
    assert code == 0 and out.strip() == "(X^2 - 2*X + 2)*(X^2 + 2*X + 2)"
    code, data = run_json(capsys, "factor", "X^2-1")
    assert [f["factor"] for f in data["factors"]] == ["X - 1", "X + 1"]


def test_factor_errors(capsys):
    code, _, err = run(capsys, "factor", "0")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "factor", "X^2 + * 1")
    assert code == 2 and "position" in err


@pytest.mark.parametrize("poly,degree", [("X^3-2", 6), ("(X-1)*(X-2)", 1), ("X^2+1", 2)])
def test_primitive_element(capsys, poly, degree):
    code, data = run_json(capsys, "primitive-element", poly)
    assert code == 0 and data["degree"] == degree
    assert parse_poly(data["min_poly"]).degree() == degree


def test_roots(capsys):
    code, data = run_json(capsys, "roots", "X^3-3X+2")
    assert code == 0
    assert sorted((round(float(r["real"])), r["multiplicity"]) for r in data["roots"]) == [(-2, 1), (1, 2)]


def test_verify(capsys, tmp_path):
    out = tmp_path / "v.csv"
    code, data = run_json(capsys, "verify", "X^2+1", "--p-max", "100000", "--out", str(out))
    assert code == 0 and data["violations"] == [] and data["schur_consistent"]
    assert data["n_split"] == sum(1 for r in read_csv(out) if r.phi_splits)
    assert json.loads(out.with_suffix(".json").read_text())["n_primes"] == data["n_primes"]
    code, data = run_json(capsys, "verify", "X^3-2", "--p-max", "10000")
    assert code == 0 and data["violations"] == [] and data["degree"] == 6
    code, data = run_json(capsys, "verify", "(X-1)*(X-2)", "--p-max", "1000")
    assert code == 0 and data["n_split"] == data["n_primes"]


def test_scan_violation_exit(capsys):
    code, data = run_json(capsys, "scan", "X^2+1", "--min-poly", "X^2-2", "--p-max", "200")
    assert code == 1 and data["violations"]


def test_scan_csv(capsys):
    code, out, _ = run(capsys, "scan", "X^2+1", "--p-max", "30", "--format", "csv")
    assert code == 0
    assert out.splitlines() == [
        "p,phi_splits,p_has_root,p_splits", "3,0,0,0", "5,1,1,1", "7,0,0,0", "11,0,0,0",
        "13,1,1,1", "17,1,1,1", "19,0,0,0", "23,0,0,0", "29,1,1,1",
    ]


def test_scan_needs_p_max_above_bound(capsys):
    code, _, err = run(capsys, "scan", "X^3-2", "--p-max", "3")
    assert code == 2 and "bound" in err


def test_schur(capsys):
    code, data = run_json(capsys, "schur", "X^2+1", "--count", "5")
    assert code == 0 and len(data["witnesses"]) == 5
    for w in data["witnesses"]:
        assert w["value"] == P("X^2+1")(w["m"]) and w["value"] % w["q"] == 0


def test_family(capsys):
    code, data = run_json(capsys, "family", "X^2-2", "--k", "2")
    polys = [parse_poly(m["min_poly"]) for m in data["members"]]
    assert code == 0 and polys == [P("X^2-2"), P("X^2-8")]


def test_bezout_bound_command(capsys):
    code, out, _ = run(capsys, "lemma1-bound", "X", "X+2")
    assert code == 0 and out.strip() == "lambda = 2"
    code, out, _ = run(capsys, "bezout-bound", "X^2+1", "X^2-1")
    assert code == 0 and out.strip() == "lambda = 2"


def test_coefficient_list_output(capsys):
    code, data = run_json(capsys, "factor", "X^2-1", "--coeffs")
    assert [f["factor"] for f in data["factors"]] == ["[-1, 1]", "[1, 1]"]


def test_printed_polynomials_round_trip(capsys):
    code, data = run_json(capsys, "primitive-element", "X^3-X-1")
    assert parse_poly(data["min_poly"]) == P("X^6-6X^4+9X^2+23")
    for rec in data["trace"]:
        assert str(parse_poly(rec["factor"])) == rec["factor"]
    code, out, _ = run(capsys, "factor", "(X^4+1)(3X-2)^2")
    assert out.strip() == "(3*X - 2)^2*(X^4 + 1)"
    assert parse_poly(out) == P("(X^4+1)(3X-2)^2")


@pytest.mark.parametrize(
    "argv",
    [
        ["primitive-element", "X^3-2", "--format", "json"],
        ["scan", "X^3-X-1", "--p-max", "5000", "--format", "csv"],
        ["verify", "X^4+4", "--p-max", "3000", "--format", "json"],
    ],
)
def test_byte_identical_output(argv):
    cmd = [sys.executable, "-m", "polysplit", *argv]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_config_defaults_and_validation():
    c = Config()
    assert (c.precision_bits, c.precision_cap, c.factor_degree_cap, c.seed) == (128, 8192, 64, 0)
    with pytest.raises(ValueError):
        Config(precision_cap=0)


def test_console_script():
    out = subprocess.run(["polysplit", "lemma1-bound", "X^2+1", "X^2-1"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "lambda = 2"

"""Command-line behavior: parsing, serialization, exit codes, golden outputs."""

import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import polydiff.bernstein
from polydiff.cli import (
    UsageError,
    _absorb_negative_values,
    _read_values,
    format_scalar,
    main,
    parse_complex,
    parse_int_list,
    parse_scalar,
)
from polydiff.core import DenseMatrix, Field


# ---------------------------------------------------------------- scalars

@pytest.mark.parametrize("text,value", [
    ("3", 3 + 0j),
    ("-2.5", -2.5 + 0j),
    ("2i", 2j),
    ("i", 1j),
    ("-i", -1j),
    ("+i", 1j),
    ("1+i", 1 + 1j),
    ("1-2.5i", 1 - 2.5j),
    ("-0.5+0.5i", -0.5 + 0.5j),
    ("1e-3+2e-4i", 1e-3 + 2e-4j),
    ("1.5E2-1e-2I", 150 - 0.01j),
    (" 1 + 2i ", 1 + 2j),
])
def test_parse_complex(text, value):
    assert parse_complex(text) == value


@pytest.mark.parametrize("text", ["", "1+", "abc", "1+2j", "--i"])
def test_parse_complex_rejects_garbage(text):
    with pytest.raises(ValueError):
        parse_complex(text)


def test_parse_scalar_per_field():
    assert parse_scalar("-3/4", Field.RATIONAL) == Fraction(-3, 4)
    assert parse_scalar("0.5", Field.RATIONAL) == Fraction(1, 2)
    assert parse_scalar("0.5", Field.REAL) == 0.5
    assert parse_scalar("1+i", Field.COMPLEX) == 1 + 1j
    with pytest.raises(UsageError):
        parse_scalar("x", Field.RATIONAL)
    with pytest.raises(UsageError):
        parse_scalar("1/0", Field.RATIONAL)
    with pytest.raises(UsageError):
        parse_scalar("1+i", Field.REAL)


def test_format_scalar():
    assert format_scalar(Fraction(3, 4)) == "3/4"
    assert format_scalar(Fraction(5)) == "5"
    assert format_scalar(7) == "7"
    assert format_scalar(0.5) == "0.5"
    assert format_scalar(1.5 + 0.5j) == "1.5+0.5i"
    assert format_scalar(1.5 - 0.5j) == "1.5-0.5i"


@given(st.fractions(max_denominator=10 ** 6))
def test_rational_serialization_roundtrips(q):
    assert parse_scalar(format_scalar(q), Field.RATIONAL) == q


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_real_serialization_roundtrips(x):
    assert parse_scalar(format_scalar(x), Field.REAL) == x


@given(st.complex_numbers(allow_nan=False, allow_infinity=False))
def test_complex_serialization_roundtrips(z):
    assert parse_scalar(format_scalar(z), Field.COMPLEX) == z


# ---------------------------------------------------------------- token lists

def test_read_values_comma_list():
    assert _read_values("1, 2 ,3") == ["1", "2", "3"]


def test_read_values_from_file(tmp_path):
    f = tmp_path / "nodes.txt"
    f.write_text("0, 1\n2\t3  4\n")
    assert _read_values(f"@{f}") == ["0", "1", "2", "3", "4"]


def test_read_values_errors(tmp_path):
    with pytest.raises(UsageError):
        _read_values(f"@{tmp_path}/missing.txt")
    with pytest.raises(UsageError):
        _read_values(" , ")


def test_parse_int_list():
    assert parse_int_list("3,5,8") == [3, 5, 8]
    with pytest.raises(UsageError):
        parse_int_list("3,x")


def test_absorb_negative_values():
    argv = ["matrix", "--basis", "lagrange", "--nodes", "-1,0,1", "--pinv"]
    assert _absorb_negative_values(argv) == [
        "matrix", "--basis", "lagrange", "--nodes=-1,0,1", "--pinv"]
    # flags and @file arguments pass through untouched
    argv = ["weights", "--nodes", "@f", "--alpha", "-3"]
    assert _absorb_negative_values(argv) == ["weights", "--nodes", "@f", "--alpha=-3"]
    assert _absorb_negative_values(["--nodes"]) == ["--nodes"]


# ---------------------------------------------------------------- matrix command

def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_matrix_bernstein_display(capsys):
    code, out, _ = run_cli(capsys, ["matrix", "--basis", "bernstein", "--degree", "4"])
    assert code == 0
    assert out == ("-4,4,0,0,0\n"
                   "-1,-2,3,0,0\n"
                   "0,-2,0,2,0\n"
                   "0,0,-3,2,1\n"
                   "0,0,0,-4,4\n")


def test_matrix_monomial_degree_zero(capsys):
    code, out, _ = run_cli(capsys, ["matrix", "--basis", "monomial", "--degree", "0"])
    assert code == 0 and out == "0\n"


def test_matrix_hermite_nine_by_nine(capsys):
    code, out, _ = run_cli(capsys, [
        "matrix", "--basis", "hermite", "--nodes", "-1,0,1", "--confluency", "3,4,2"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 9
    assert lines[2] == "-201/2,-177/4,-15,96,-60,24,-12,9/2,-3/4"
    assert lines[8] == "35,11,2,0,48,0,16,-35,11"


def test_matrix_field_promotion(capsys):
    code, out, _ = run_cli(capsys, [
        "matrix", "--basis", "chebyshev", "--degree", "2", "--field", "real"])
    assert code == 0
    assert out.splitlines()[0] == "0.0,1.0,0.0"


def test_matrix_complex_lagrange(capsys):
    code, out, _ = run_cli(capsys, [
        "matrix", "--basis", "lagrange", "--nodes", "1,i,-1,-i", "--field", "complex"])
    assert code == 0
    assert out.splitlines()[0] == "1.5+0.0i,-0.5+0.5i,-0.5+0.0i,-0.5-0.5i"


def test_matrix_json_schema(capsys):
    code, out, _ = run_cli(capsys, [
        "matrix", "--basis", "legendre", "--degree", "2", "--format", "json"])
    assert code == 0
    obj = json.loads(out)
    assert obj == {
        "basis": "legendre",
        "dimension": 3,
        "field": "rational",
        "entries": [["0", "1", "0"], ["0", "0", "3"], ["0", "0", "0"]],
    }


def test_matrix_recurrence_basis(capsys):
    # alpha=1, beta=z_j, gamma=0 rebuilds the Newton matrix on 0..4
    code, out, _ = run_cli(capsys, [
        "matrix", "--basis", "recurrence",
        "--alpha", "1,1,1,1", "--beta", "0,1,2,3", "--gamma", "0,0,0,0"])
    assert code == 0
    assert out == ("0,1,-1,2,-6\n"
                   "0,0,2,-3,8\n"
                   "0,0,0,3,-6\n"
                   "0,0,0,0,4\n"
                   "0,0,0,0,0\n")


def test_matrix_out_writes_file(tmp_path, capsys):
    target = tmp_path / "D.csv"
    code, out, _ = run_cli(capsys, [
        "matrix", "--basis", "monomial", "--degree", "2", "--out", str(target)])
    assert code == 0 and out == ""
    assert target.read_text() == "0,1,0\n0,0,2\n0,0,0\n"


def test_matrix_pinv_chebyshev_is_antideriv(capsys):
    code, out, _ = run_cli(capsys, [
        "matrix", "--basis", "chebyshev", "--degree", "3", "--pinv"])
    assert code == 0
    assert out == ("0,0,0,0\n"
                   "1,0,-1/2,0\n"
                   "0,1/4,0,-1/4\n"
                   "0,0,1/6,0\n")


def test_matrix_pinv_monomial(capsys):
    code, out, err = run_cli(capsys, [
        "matrix", "--basis", "monomial", "--degree", "3", "--pinv"])
    assert code == 0 and err == ""
    assert out == ("0,0,0,0\n"
                   "1,0,0,0\n"
                   "0,1/2,0,0\n"
                   "0,0,1/3,0\n")


def test_matrix_pinv_lagrange_exact(capsys):
    code, out, err = run_cli(capsys, [
        "matrix", "--basis", "lagrange", "--nodes", "-1,-1/2,1/2,1", "--pinv"])
    assert code == 0 and err == ""
    assert out.splitlines()[0] == "1/36,-10/9,2/9,-5/36"


def test_matrix_pinv_floating_warns(capsys):
    code, _, err = run_cli(capsys, [
        "matrix", "--basis", "lagrange", "--nodes", "-1,0,1", "--field", "real", "--pinv"])
    assert code == 0
    assert "floating point" in err


@pytest.mark.parametrize("argv", [
    ["matrix", "--basis", "monomial", "--degree", "2", "--nodes", "0,1"],
    ["matrix", "--basis", "monomial", "--degree", "2", "--confluency", "1,1"],
    ["matrix", "--basis", "lagrange", "--nodes", "0,1", "--degree", "3"],
    ["matrix", "--basis", "lagrange"],
    ["matrix", "--basis", "monomial"],
    ["matrix", "--basis", "recurrence"],
    ["matrix", "--basis", "chebyshev", "--degree", "3", "--alpha", "1"],
    ["matrix", "--basis", "lagrange", "--nodes", "0,x"],
    ["matrix", "--basis", "lagrange", "--nodes", "0,1,1"],
    ["matrix", "--basis", "hermite", "--nodes", "0,1", "--confluency", "2"],
    ["weights", "--nodes", "@/no/such/file"],
    ["experiment", "--which", "hermite-norms", "--confluency", "0"],
    ["experiment", "--which", "lagrange-error", "--confluency", "2"],
    ["experiment", "--which", "hermite-norms", "--n", "3,x"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run_cli(capsys, argv)
    assert code == 2
    assert err.startswith("polydiff: error:")


def test_unknown_choices_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["matrix", "--basis", "fourier", "--degree", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["experiment", "--which", "bogus"])
    assert exc.value.code == 2
    capsys.readouterr()


# ---------------------------------------------------------------- weights command

def test_weights_simple_nodes(capsys):
    code, out, _ = run_cli(capsys, ["weights", "--nodes", "-1,-0.5,0.5,1"])
    assert code == 0
    assert out == "0,0,-2/3\n1,0,4/3\n2,0,-4/3\n3,0,2/3\n"


def test_weights_confluent_nodes(capsys):
    code, out, _ = run_cli(capsys, ["weights", "--nodes", "0,1", "--confluency", "2,1"])
    assert code == 0
    assert out == "0,0,-1\n0,1,-1\n1,0,1\n"


def test_weights_single_node(capsys):
    code, out, _ = run_cli(capsys, ["weights", "--nodes", "0"])
    assert code == 0 and out == "0,0,1\n"


def test_weights_json(capsys):
    code, out, _ = run_cli(capsys, [
        "weights", "--nodes", "0,1", "--confluency", "2,1", "--format", "json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["nodes"] == ["0", "1"]
    assert obj["confluencies"] == [2, 1]
    assert obj["weights"] == [[0, 0, "-1"], [0, 1, "-1"], [1, 0, "1"]]


def test_weights_nodes_from_file(tmp_path, capsys):
    f = tmp_path / "nodes"
    f.write_text("0 1\n3")
    code, out, _ = run_cli(capsys, ["weights", "--nodes", f"@{f}"])
    assert code == 0
    assert out == "0,0,1/3\n1,0,-1/2\n2,0,1/6\n"


# ---------------------------------------------------------------- verify command

def test_verify_passes(capsys):
    code, out, _ = run_cli(capsys, ["verify"])
    assert code == 0
    assert ", 0 failed" in out.splitlines()[-1]
    assert "FAIL" not in out


def test_verify_basis_filter(capsys):
    code, out, _ = run_cli(capsys, ["verify", "--basis", "bernstein"])
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS bernstein-") for line in lines[:-1])


def test_verify_detects_corruption(monkeypatch, capsys):
    def corrupt(n):
        return DenseMatrix.identity(n + 1)
    monkeypatch.setattr(polydiff.bernstein, "diff_matrix_bernstein", corrupt)
    code, out, _ = run_cli(capsys, ["verify", "--basis", "bernstein"])
    assert code == 1
    assert "FAIL bernstein-reference-matrix" in out


# ---------------------------------------------------------------- experiment command

def test_experiment_lagrange_error(capsys):
    code, out, _ = run_cli(capsys, [
        "experiment", "--which", "lagrange-error", "--n", "3,5"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# grid: 1001 uniform points on [-1,1]"
    assert lines[1] == "n,node_family,confluency,norm_D,norm_Z,max_err"
    assert len(lines) == 4
    assert lines[2].startswith("3,chebyshev,1,,,")
    assert lines[3].startswith("5,chebyshev,1,,,")


def test_experiment_hermite_defaults(capsys):
    code, out, _ = run_cli(capsys, [
        "experiment", "--which", "hermite-norms", "--n", "3"])
    assert code == 0
    row = out.splitlines()[2].split(",")
    assert row[:3] == ["3", "chebyshev", "3"]
    assert row[3] and row[4] and not row[5]


def test_experiment_equispaced_nodes(capsys):
    code, out, _ = run_cli(capsys, [
        "experiment", "--which", "hermite-error", "--nodes", "equispaced",
        "--confluency", "2", "--n", "4"])
    assert code == 0
    assert out.splitlines()[2].startswith("4,equispaced,2,,,")


def test_experiment_deterministic_output(tmp_path, capsys):
    argv = ["experiment", "--which", "hermite-norms", "--n", "3,5"]
    _, first, _ = run_cli(capsys, argv)
    _, second, _ = run_cli(capsys, argv)
    assert first == second
    target = tmp_path / "r.csv"
    code, out, _ = run_cli(capsys, argv + ["--out", str(target)])
    assert code == 0 and out == ""
    assert target.read_text() == first

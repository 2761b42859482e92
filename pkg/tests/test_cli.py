import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from qtasm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def schema(name):
    return json.loads(resources.files("qtasm").joinpath(f"schema/{name}.json").read_text())


def test_enumerate_count(capsys):
    assert run(capsys, "enumerate", "--class", "qt", "--order", "5", "--count")[:2] == (0, "3\n")
    assert run(capsys, "enumerate", "--class", "all", "--order", "1")[:2] == (0, "1\n")


def test_enumerate_qt_order_six(capsys):
    code, out, err = run(capsys, "enumerate", "--class", "qt", "--order", "6")
    assert code == 2 and "divisible by 4" in err and out == ""


def test_enumerate_list(capsys):
    code, out, _ = run(capsys, "enumerate", "--class", "qt", "--order", "3", "--list")
    assert out == "1\n0+0/+-+/0+0\n"


def test_enumerate_budget(capsys):
    assert run(capsys, "enumerate", "--order", "9")[0] == 3
    assert run(capsys, "enumerate", "--order", "5", "--max-states", "10")[0] == 3


def test_pf_symbolic_ini(capsys):
    code, out, _ = run(capsys, "pf", "--pattern", "qt-odd", "--order", "3", "--symbolic")
    assert out == "1*a^-3 - 1*a^-1 - 1*a + 1*a^3\n"


def test_pf_dwbc_rational(capsys):
    code, out, _ = run(capsys, "pf", "--pattern", "dwbc", "--order", "1", "--a", "2", "--x", "1", "--y", "1")
    assert (code, out) == (0, "15/4\n")


def test_pf_zeta(capsys):
    code, out, _ = run(capsys, "pf", "--pattern", "qt-odd", "--order", "5", "--a", "zeta", "--x", "1,1,1")
    assert out == "-81 + 0*zeta\n"


def test_pf_errors(capsys):
    assert run(capsys, "pf", "--pattern", "qt-even", "--order", "6", "--a", "2")[0] == 2
    assert run(capsys, "pf", "--pattern", "dwbc", "--order", "1", "--a", "2", "--x", "0", "--y", "1")[0] == 4
    assert run(capsys, "pf", "--pattern", "dwbc", "--order", "2", "--a", "2", "--x", "1")[0] == 2
    assert run(capsys, "pf", "--pattern", "dwbc", "--order", "1", "--a", "0.5", "--x", "1", "--y", "1")[0] == 2
    assert run(capsys, "pf", "--pattern", "dwbc", "--order", "5", "--symbolic", "--max-states", "10")[0] == 3
    assert run(capsys, "pf", "--pattern", "dwbc", "--order", "4", "--symbolic", "--max-terms", "10")[0] == 3


def test_verify_unknown(capsys):
    code, _, err = run(capsys, "verify", "--identity", "nope")
    assert code == 2 and "yang-baxter" in err


def test_verify_enumeration(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "enumeration")
    assert code == 0 and "6/6 checks passed" in out


@pytest.mark.parametrize("argv,name", [
    (["enumerate", "--class", "ht", "--order", "3", "--list"], "enumerate"),
    (["pf", "--pattern", "dwbc", "--order", "2", "--symbolic"], "pf"),
    (["pf", "--pattern", "qt-odd", "--order", "5", "--a", "3/2", "--x", "2,5,1/3"], "pf"),
    (["verify", "--identity", "yang-baxter", "--seed", "7"], "verify"),
    (["counts", "--class", "qt", "--orders", "3-5"], "counts"),
])
def test_json_matches_schema(capsys, argv, name):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    jsonschema.validate(json.loads(out), schema(name))


def test_output_deterministic_per_seed(capsys):
    argv = ["verify", "--identity", "yang-baxter", "--seed", "7", "--format", "json"]
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first
    other = run(capsys, "verify", "--identity", "yang-baxter", "--seed", "8", "--format", "json")[1]
    assert other != first


def test_csv_counts(capsys):
    code, out, _ = run(capsys, "counts", "--class", "all", "--orders", "1-4", "--format", "csv")
    assert out.splitlines() == ["class,order,count", "all,1,1", "all,2,2", "all,3,7", "all,4,42"]


def test_out_file(tmp_path, capsys):
    target = tmp_path / "o.txt"
    code, out, _ = run(capsys, "enumerate", "--order", "4", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "42\n"
    assert [p.name for p in tmp_path.iterdir()] == ["o.txt"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qtasm", "enumerate", "--class", "qt", "--order", "7"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "12\n"

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from dnarayana import verify
from dnarayana.cli import main
from dnarayana.families import FAMILIES, get_family
from dnarayana.numbers import catalan, narayana
from reference_tables import PERMS_P3_5

GOLDEN = Path(__file__).parent / "golden"


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("argv,expected", [
    (["count", "--d", "3", "--n", "5"], "1 25 120 140 35 1\n"),
    (["count", "--d", "2", "--n", "6", "--k", "3"], "175\n"),
    (["count", "--d", "3", "--n", "7", "--k", "4", "--method", "series"], "2310\n"),
    (["count", "--d", "5", "--n", "5", "--k", "4", "--method", "lagrange"], "126\n"),
    (["count", "--d", "3", "--n", "2", "--k", "5"], "0\n"),
])
def test_count(argv, expected):
    assert run(argv) == (0, expected, "")


@pytest.mark.parametrize("method", ["formula", "series", "lagrange"])
def test_count_methods_agree(method):
    code, out, _ = run(["count", "--d", "4", "--n", "6", "--method", method])
    assert out.split() == [str(narayana(4, 6, k)) for k in range(7)]


@pytest.mark.parametrize("argv,golden", [
    (["table", "--d", "2", "--n-max", "7"], "table_d2_n7.txt"),
    (["table", "--d", "3", "--n-max", "7"], "table_d3_n7.txt"),
    (["table", "--catalan", "--d", "2", "3", "4", "5", "6", "--n-max", "7"], "catalan_d2-6_n7.txt"),
])
def test_table_golden(argv, golden):
    code, out, _ = run(argv)
    assert code == 0 and out == (GOLDEN / golden).read_text()


def test_table_machine_formats():
    code, out, _ = run(["table", "--d", "3", "--n-max", "3", "--format", "csv"])
    lines = out.splitlines()
    assert lines[0] == "d,n,k,value" and "3,3,2,10" in lines and len(lines) == 11
    code, out, _ = run(["table", "--d", "2", "3", "--n-max", "2", "--format", "json"])
    assert json.loads(out) == {"2": [[1], [1, 1], [1, 3, 1]], "3": [[1], [1, 1], [1, 4, 1]]}
    code, out, _ = run(["table", "--catalan", "--d", "4", "--n-max", "4", "--format", "json"])
    assert json.loads(out) == {"4": [1, 2, 7, 29, 131]}


def test_table_blocks_for_several_arities():
    _, out, _ = run(["table", "--d", "2", "3", "--n-max", "2"])
    assert out.startswith("d = 2\n") and "\n\nd = 3\n" in out


def test_enumerate_perms_table():
    code, out, _ = run(["enumerate", "--family", "perms", "--d", "3", "--n", "5"])
    assert code == 0 and sorted(out.split()) == sorted(PERMS_P3_5)


def test_enumerate_cell():
    _, out, _ = run(["enumerate", "--family", "monomials", "--d", "3", "--n", "3", "--k", "1"])
    assert len(out.splitlines()) == 9


@pytest.mark.parametrize("name", list(FAMILIES))
@pytest.mark.parametrize("d", [2, 3, 4])
def test_enumerate_lines_reparse(name, d):
    fam = get_family(name)
    for n in range(4):
        for k in range(n + 1):
            _, out, _ = run(["enumerate", "--family", name, "--d", str(d),
                             "--n", str(n), "--k", str(k)])
            lines = out.split("\n")[:-1]
            assert len(lines) == narayana(d, n, k)
            objs = [fam.parse(line, d) for line in lines]
            assert all(fam.member(o, d) for o in objs)
            assert [fam.format(o, d) for o in objs] == lines


def test_enumerate_jsonl():
    _, out, _ = run(["enumerate", "--family", "ldyck", "--d", "3", "--n", "2", "--k", "1",
                     "--format", "jsonl"])
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 4 and all(set(r) == {"steps", "labels"} for r in rows)


def test_enumerate_limit():
    code, _, err = run(["enumerate", "--family", "monomials", "--d", "3", "--n", "6",
                        "--limit", "10"])
    assert code == 2 and err.startswith("error:")


def test_convert_star():
    code, out, _ = run(["convert", "--from", "monomials", "--to", "dyck", "--d", "3"],
                       "a1a2a3a4a5a6a7\n")
    assert (code, out) == (0, "U" * 7 + "D" * 7 + "\n")


def test_convert_route_is_printed():
    code, out, err = run(["convert", "--from", "schroder", "--to", "perms", "--d", "3",
                          "--verbose"], "UHUUHDDHDHH\n")
    assert code == 0
    assert err.strip() == "route: schroder -> f1^-1 -> f2 -> f3 -> f4 -> perms"
    assert out.strip().isdigit() and len(out.strip()) == 8


def test_convert_chain_and_back():
    fwd = run(["convert", "--from", "monomials", "--to", "ltrees", "--d", "3"],
              "L(a1)a2a3\na1L(a2)a3\n")
    assert fwd[1].splitlines() == ["2 1 0 0;(0,0)", "1 2 0 0;(1,0)"]
    back = run(["convert", "--from", "ltrees", "--to", "monomials", "--d", "3"], fwd[1])
    assert back[1].splitlines() == ["L(a1)a2a3", "a1L(a2)a3"]


def test_convert_empty_object_lines():
    # the lone indeterminate maps to the empty labelled Schroder path
    _, out, _ = run(["convert", "--from", "monomials", "--to", "lschroder", "--d", "3"], "a1\n")
    assert out == "\n"
    _, out, _ = run(["convert", "--from", "lschroder", "--to", "monomials", "--d", "3"], "\n")
    assert out == "a1\n"


def test_convert_bad_line():
    code, out, err = run(["convert", "--from", "dyck", "--to", "trees", "--d", "3"],
                         "UUDD\nUD\n")
    assert code == 2 and out == "1 0\n" and "error:" in err


@pytest.mark.parametrize("argv", [
    [],
    ["count", "--d", "1", "--n", "3"],
    ["count", "--d", "x", "--n", "3"],
    ["count", "--d", "3", "--n", "-1"],
    ["table", "--d", "3"],
    ["enumerate", "--family", "nope", "--d", "3", "--n", "2"],
    ["enumerate", "--family", "dyck", "--d", "3", "--n", "2", "--k", "3"],
    ["bfile", "--d", "3", "--n-max", "-2"],
])
def test_usage_errors(argv, capsys):
    assert run(argv)[0] == 2


def test_bfile():
    _, out, _ = run(["bfile", "--d", "3", "--n-max", "4"])
    assert out.splitlines() == [f"{i} {catalan(3, i)}" for i in range(5)]
    _, out, _ = run(["bfile", "--d", "2", "--n-max", "2", "--narayana", "--offset", "1"])
    assert out.splitlines() == ["1 1", "2 1", "3 1", "4 1", "5 3", "6 1"]


def test_verify_small(tmp_path):
    path = tmp_path / "r.jsonl"
    code, out, _ = run(["verify", "--suite", "counts", "--d-max", "3", "--n-max", "3",
                        "--jsonl", str(path)])
    assert code == 0 and out.splitlines()[-1].startswith("total")
    head = json.loads(path.read_text().splitlines()[0])
    assert head["summary"]["failed"] == 0


def test_verify_failure_exit(monkeypatch):
    real = verify.narayana
    monkeypatch.setattr(verify, "narayana", lambda d, n, k: real(d, n, k) + (n == 2 and k == 1))
    code, out, _ = run(["verify", "--suite", "counts", "--d-max", "2", "--n-max", "2"])
    assert code == 1 and "FAIL count:" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dnarayana.cli", "count", "--d", "2", "--n", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1 10 20 10 1\n"

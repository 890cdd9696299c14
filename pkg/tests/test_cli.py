import io
import json
import subprocess
import sys

import pytest

from qdom.cli import EXIT_COUNTEREXAMPLE, EXIT_OK, EXIT_USAGE, parse_n_range, run, UsageError


def call(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stdin=io.StringIO(stdin), stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_parse_n_range():
    assert parse_n_range("8") == [8]
    assert parse_n_range("6..10") == [6, 7, 8, 9, 10]
    assert parse_n_range("5,7,9") == [5, 7, 9]
    with pytest.raises(UsageError):
        parse_n_range("9..3")
    with pytest.raises(UsageError):
        parse_n_range("x")


def test_family_script_h3():
    code, out, _ = call("family", '{"kind":"ScriptH3","params":{"n":4,"alpha":1}}')
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["graph6"] == "Cx" and rec["gamma"]["gamma"] == 1 and rec["closed_form_gamma"] == 1
    assert abs(rec["q_min"] - 0.4384471871911699) < 1e-12


def test_family_dot_output():
    code, out, _ = call("family", '{"kind":"Cycle","params":{"n":5}}', "--format", "dot")
    assert code == EXIT_OK and out.startswith("graph") and "v_1" in out


def test_measure_arguments_and_stdin():
    code, out, _ = call("measure", "Bg")
    assert code == EXIT_OK and json.loads(out)["q_min"] == 0.0
    code, out, _ = call("measure", "--format", "csv", stdin="Bw\nC~\n")
    assert code == EXIT_OK and len(out.splitlines()) == 2


def test_verify_passing_and_failing():
    code, out, _ = call("verify", "Thm4.8", "--n", "6..10")
    assert code == EXIT_OK
    assert json.loads(out.splitlines()[-1])["summary"]
    code, out, _ = call("verify", "Thm5.3", "--n", "5", "--format", "graph6")
    assert code == EXIT_COUNTEREXAMPLE


def test_search_and_conjecture():
    code, out, _ = call("search", "--kind", "UnicyclicNonbipartite", "--n", "9", "--gamma", "4")
    assert code == EXIT_OK and json.loads(out)["unique"]
    code, out, _ = call("conjecture", "--n", "4..7", "--unicyclic")
    assert code == EXIT_OK


def test_convert_round_trip():
    code, dot, _ = call("convert", "C~")
    assert code == EXIT_OK
    code, g6, _ = call("convert", "--to", "graph6", stdin=dot)
    assert code == EXIT_OK and g6.strip() == "C~"


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["verify", "Thm9.9"],
        ["measure", "!!"],
        ["family", "{not json"],
        ["family", '{"kind":"Cycle","params":{"n":2}}'],
        ["measure", "Bg", "--tol", "1e-7", "--margin", "1e-8"],
        ["search", "--kind", "ConnectedAll", "--n", "9"],
    ],
)
def test_usage_errors(argv):
    code, _, err = call(*argv)
    assert code == EXIT_USAGE and err.startswith("qdom:")


def test_output_is_deterministic():
    assert call("verify", "Thm3.9", "--n", "11") == call("verify", "Thm3.9", "--n", "11")


def test_list():
    code, out, _ = call("list")
    assert code == EXIT_OK and "Thm4.4" in out.split()


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qdom.cli", "measure", "Bg"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["gamma"]["gamma"] == 1

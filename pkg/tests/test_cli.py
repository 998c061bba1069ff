import json

import pytest

from gpaley.cli import run


def _json_out(capsys, argv, expect_code=0):
    code = run(argv)
    out = capsys.readouterr().out
    assert code == expect_code, out
    return json.loads(out)


def test_field_command(capsys):
    payload = _json_out(capsys, ["field", "3", "2"])
    assert payload["schema"] == 1
    assert payload["modulus"] == [1, 0, 1]
    assert payload["primitive_root"] == 4


def test_bound_all_example(capsys):
    payload = _json_out(capsys, ["bound", "3", "3", "13", "--all"])
    assert payload["exact"] and payload["omega"] == 3
    names = {c["bound"] for c in payload["certificates"]}
    assert {"trivial", "thm11", "thm13", "prop41", "subfield"} <= names


def test_directions_sharp_example(capsys):
    payload = _json_out(capsys,
                        ["directions", "3", "2",
                         "--A", "subfield:1", "--B", "subfield:1"])
    assert payload["size"] == 4
    assert payload["bound"] == 4
    assert payload["sharp"] is True


def test_directions_explicit_and_range(capsys):
    payload = _json_out(capsys,
                        ["directions", "3", "2", "--A", "0,1", "--B", "range:2"])
    assert payload["m"] == payload["n"] == 2
    assert payload["size"] >= payload["bound"]


def test_clique_enumerate(capsys):
    payload = _json_out(capsys,
                        ["clique", "13", "1", "2", "--enumerate"])
    assert payload["clique"]["size"] == 3
    assert payload["clique"]["witness"] == [0, 1, 4]
    assert payload["count"] == len(payload["maximum_cliques"])
    assert all(len(c) == 3 for c in payload["maximum_cliques"])


def test_clique_contains(capsys):
    payload = _json_out(capsys,
                        ["clique", "7", "3", "19", "--contains", "0,1"])
    assert payload["maximum_cliques"] == [[0, 1, 2, 3, 4, 5, 6]]


def test_family_commands(capsys):
    payload = _json_out(capsys, ["family", "ex42", "7"])
    assert payload["d"] == 19

    payload = _json_out(capsys, ["family", "ex44", "1"], expect_code=2)
    assert payload["rejected"] is True


def test_verify_exit_zero(capsys):
    payload = _json_out(capsys, ["verify", "arith", "--trials", "50"])
    assert payload["passed"] is True


def test_precondition_exit_code(capsys):
    assert run(["bound", "3", "2", "3"]) == 2
    err = capsys.readouterr().err
    assert "error:" in err
    assert run(["field", "4", "1"]) == 2
    assert run(["graph", "13", "1", "4", "--index-set", "0"]) == 2
    assert run(["directions", "3", "2", "--A", "junk", "--B", "0,1"]) == 2


def test_timeout_exit_code(capsys):
    assert run(["clique", "19", "2", "2", "--time-limit", "0"]) == 4


def test_csv_and_text_formats(capsys):
    assert run(["--format", "csv", "bound", "3", "3", "13", "--all"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "bound,kind,value,applicable,reason"

    assert run(["--format", "text", "field", "3", "2"]) == 0
    out = capsys.readouterr().out
    assert "primitive_root = 4" in out


def test_byte_identical_output(capsys):
    first = run(["verify", "redei", "--trials", "3", "--seed", "9"])
    out1 = capsys.readouterr().out
    second = run(["verify", "redei", "--trials", "3", "--seed", "9"])
    out2 = capsys.readouterr().out
    assert first == second == 0
    assert out1 == out2

    run(["clique", "3", "2", "2"])
    out1 = capsys.readouterr().out
    run(["clique", "3", "2", "2"])
    out2 = capsys.readouterr().out
    assert out1 == out2
    assert "seconds" not in out1

import json

import pytest

from bolza.cli import run


def _json(capsys, argv):
    code = run(argv)
    return code, json.loads(capsys.readouterr().out)


def test_help(capsys):
    assert run(["help"]) == 0
    assert "usage" in capsys.readouterr().out


def test_no_command_prints_help(capsys):
    assert run([]) == 0


@pytest.mark.parametrize("argv", [["bogus"], ["eval", "--nope"], ["search", "--p", "7"], ["eval", "--word", "abc"], ["reduce", "--ideal", "3", "--word", "a"]])
def test_usage_errors(argv, capsys):
    assert run(argv) == 2
    assert capsys.readouterr().err


def test_verify_order_suite(capsys):
    assert run(["verify", "--suite", "order"]) == 0
    out = capsys.readouterr().out
    assert out.count("[PASS]") == 3


def test_verify_is_deterministic(capsys):
    run(["verify", "--suite", "covers", "--format", "json"])
    first = capsys.readouterr().out
    run(["verify", "--suite", "covers", "--format", "json"])
    assert capsys.readouterr().out == first


def test_verify_reports_failure_with_exit_one(capsys):
    assert run(["verify", "--suite", "bolza"]) == 1
    assert "[FAIL] criterion  4" in capsys.readouterr().out


def test_eval_trace(capsys):
    code, data = _json(capsys, ["eval", "--word", "abAB", "--trace", "--format", "json"])
    assert code == 0
    assert data["trace_text"] == str(data["trace_text"])
    assert set(data["trace"]) == {"a", "b"}


def test_eval_named(capsys):
    code, data = _json(capsys, ["eval", "--named", "p7_1", "--trace", "--format", "json"])
    assert data["trace_text"] == "7+4*r2"
    assert data["registry"]["sign"] == -1


def test_factor(capsys):
    code, data = _json(capsys, ["factor", "7", "--format", "json"])
    assert data["kind"] == "split"
    code, data = _json(capsys, ["factor", "633+449*r2", "--format", "json"])
    assert code == 0 and data["factors"]


def test_disc(capsys):
    code, data = _json(capsys, ["disc", "--format", "json"])
    assert data["bolza"] == "0+1*r2"


def test_quotient(capsys):
    code, data = _json(capsys, ["quotient", "--format", "json", "--bolza"])
    assert data["layers"] == [3, 4, 4, 4]
    assert data["bolza"]["normal_closure_order"] == 4


def test_cover_ideal(capsys):
    code, data = _json(capsys, ["cover", "--ideal", "1+2*r2", "--schreier", "--format", "json"])
    assert data["index"] == 168 and data["genus"] == 8
    assert data["min_trace_decimal"] == "12.657"


def test_cover_relators(capsys):
    code, data = _json(capsys, ["cover", "--relators", "yxyxyxyxYxYxYxYx", "--triangle", "238", "--format", "json"])
    assert data["index"] == 48


def test_search_requires_seed_and_is_reproducible(capsys):
    code, a = _json(capsys, ["search", "--p", "7", "--seed", "5", "--count", "4", "--classify", "--format", "json"])
    code, b = _json(capsys, ["search", "--p", "7", "--seed", "5", "--count", "4", "--classify", "--format", "json"])
    assert a == b and a["accepted"] == 4


def test_reduce(capsys):
    code, data = _json(capsys, ["reduce", "--ideal", "1+2*r2", "--word", "aBaBaBaB", "--format", "json"])
    assert data["matrix"] == [[6, 0], [0, 6]] and data["congruence"] == -1


def test_bounds(capsys):
    code, data = _json(capsys, ["bounds", "--ideal", "11-5*r2", "--format", "json"])
    assert data["lambda"] == "3/2"
    assert data["ideal"]["decimal"] == "1267.982"


def test_table(capsys):
    assert run(["table", "--primes", "7,17"]) == 0
    out = capsys.readouterr().out
    assert "158.196" in out
    code, data = _json(capsys, ["table", "--primes", "71", "--format", "json"])
    assert len(data["rows"]) == 2 and data["notes"]

"""
Contract tests for the mpae command line
"""

import json

import pytest

from src.cli.main import run
from src.utils.config import get_settings


def invoke(capsys, *argv):
    """Run one command line, returning (exit code, stdout, stderr)"""
    code = run([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err.strip()


def invoke_json(capsys, *argv):
    code, out, _ = invoke(capsys, *argv)
    assert code == 0
    return json.loads(out)


class TestCheck:
    """Contract tests for mpae check"""

    def test_summary(self, capsys, two_counters_file):
        data = invoke_json(capsys, "check", two_counters_file)
        assert data["result"] == "ok"
        assert data["automata"]["A1"]["semantics"] == "liminf"
        assert data["payoffs"]["P"]["dimension"] == 2
        assert data["expressions"]["Ediff"] == {
            "n": 2, "sum_ops": 1, "leaves": ["A1", "A2#neg"], "tree": "sum(A1, A2#neg)"
        }

    def test_parse_error(self, capsys, tmp_path):
        path = tmp_path / "broken.mpa"
        path.write_text("automaton A liminf {", encoding="utf-8")
        code, out, err = invoke(capsys, "check", path)
        assert code == 2
        assert out == ""
        assert json.loads(err)["error"] == "ParseException"

    def test_validation_error(self, capsys, tmp_path):
        path = tmp_path / "partial.mpa"
        path.write_text("automaton A liminf { alphabet a, b; initial q; q -a/1-> q; }", encoding="utf-8")
        code, _, err = invoke(capsys, "check", path)
        assert code == 2
        assert json.loads(err)["error"] == "ValidationException"

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = invoke(capsys, "check", tmp_path / "absent.mpa")
        assert code == 2
        assert "cannot read" in json.loads(err)["message"]

    def test_unknown_subcommand(self, capsys, two_counters_file):
        code, _, _ = invoke(capsys, "frobnicate", two_counters_file)
        assert code == 2


class TestValueCommands:
    """Contract tests for vector-set and value-set"""

    def test_vector_set(self, capsys, two_counters_file):
        data = invoke_json(capsys, "vector-set", two_counters_file, "--expr", "Emax")
        assert data["leaves"] == ["A1", "A2"]
        assert len(data["result"]) == 1
        assert data["result"][0]["scc"] == 0
        assert sorted(data["result"][0]["vertices"]) == [["0", "0"], ["0", "1"], ["1", "0"]]
        assert "cycles" not in data

    def test_vector_set_dumps(self, capsys, two_counters_file):
        data = invoke_json(capsys, "vector-set", two_counters_file, "--expr", "Emax",
                           "--dump-cycles", "--dump-geometry")
        assert sorted(data["cycles"]["0"]) == [["0", "1"], ["1", "0"]]
        assert data["result"][0]["constraints"]

    def test_value_set(self, capsys, two_counters_file):
        data = invoke_json(capsys, "value-set", two_counters_file, "--expr", "Ediff")
        assert data == {"result": [{"lo": "-1", "hi": "1"}]}

    def test_value_set_text(self, capsys, branching_file):
        code, out, _ = invoke(capsys, "value-set", branching_file, "--expr", "Eb", "--format", "text")
        assert code == 0
        assert out == "[1, 1] u [2, 2]"

    def test_unknown_expression(self, capsys, two_counters_file):
        code, _, _ = invoke(capsys, "value-set", two_counters_file, "--expr", "Nope")
        assert code == 2

    def test_cycle_budget(self, capsys, two_counters_file):
        code, _, err = invoke(capsys, "value-set", two_counters_file, "--expr", "Emax", "--cycle-budget", "1")
        assert code == 4
        assert json.loads(err)["error"] == "ResourceBudgetException"


class TestDecisionCommands:
    """Contract tests for threshold, comparison and cut-point commands"""

    def test_empty(self, capsys, two_counters_file):
        assert invoke_json(capsys, "empty", two_counters_file, "--expr", "Emax", "--nu", "1") == \
            {"result": True, "scc": 0}
        assert invoke_json(capsys, "empty", two_counters_file, "--expr", "Emax", "--nu", "101/100") == \
            {"result": False}

    def test_universal_negative_threshold(self, capsys, two_counters_file):
        data = invoke_json(capsys, "universal", two_counters_file, "--expr", "Ediff", "--nu=-1")
        assert data == {"result": True}

    def test_bad_rational(self, capsys, two_counters_file):
        code, _, _ = invoke(capsys, "empty", two_counters_file, "--expr", "Emax", "--nu", "1/0")
        assert code == 2

    def test_includes_and_equiv(self, capsys, two_counters_file):
        assert invoke_json(capsys, "includes", two_counters_file, "--lhs", "Emin", "--rhs", "Emax") == \
            {"result": True}
        assert invoke_json(capsys, "equiv", two_counters_file, "--lhs", "Emin", "--rhs", "Emax") == \
            {"result": False}

    def test_distance(self, capsys, two_counters_file):
        assert invoke_json(capsys, "distance", two_counters_file, "--lhs", "E1", "--rhs", "A1twice") == \
            {"result": "1"}

    def test_cutpoint(self, capsys, two_counters_file):
        assert invoke_json(capsys, "cutpoint", two_counters_file, "--expr", "Emin", "--eta", "3/4") == \
            {"result": True, "gap": "1/4"}
        assert invoke_json(capsys, "cutpoint", two_counters_file, "--expr", "Emin", "--eta", "1/4") == \
            {"result": False}

    def test_buchi_json(self, capsys, branching_file):
        data = invoke_json(capsys, "buchi", branching_file, "--expr", "Eb", "--eta", "3/2")
        buchi = data["result"]
        assert buchi["initial"] == "(s)"
        assert buchi["accepting"] == ["(p)"]
        assert ["(s)", "a", "(p)"] in buchi["edges"]
        assert len(buchi["edges"]) == 6

    def test_buchi_text(self, capsys, branching_file):
        code, out, _ = invoke(capsys, "buchi", branching_file, "--expr", "Eb", "--eta", "3/2", "--format", "text")
        assert code == 0
        lines = out.splitlines()
        assert lines[:5] == ["state (p)", "state (r)", "state (s)", "initial (s)", "accepting (p)"]
        assert "edge (s) b (r)" in lines

    def test_buchi_not_isolated(self, capsys, two_counters_file):
        code, out, err = invoke(capsys, "buchi", two_counters_file, "--expr", "Emin", "--eta", "1/4")
        assert code == 3
        assert out == ""
        assert json.loads(err)["error"] == "QueryException"


class TestQueryAndWitness:
    """Contract tests for query and witness"""

    def test_query_sat(self, capsys, two_counters_file):
        data = invoke_json(capsys, "query", two_counters_file, "--query", "inf(1) >= 1/2 && inf(2) >= 1/2")
        assert data["result"] == "sat"
        assert data["scc"] == 0
        assert len(data["point"]) == 4

    def test_query_unsat(self, capsys, two_counters_file):
        data = invoke_json(capsys, "query", two_counters_file, "--payoff", "P",
                           "--query", "inf(1) >= 1/2 && inf(2) > 1/2")
        assert data == {"result": "unsat"}

    def test_query_syntax_error(self, capsys, two_counters_file):
        code, _, err = invoke(capsys, "query", two_counters_file, "--query", "inf(1) >>= 0")
        assert code == 2
        assert json.loads(err)["error"] == "ParseException"

    def test_query_out_of_range(self, capsys, two_counters_file):
        code, _, _ = invoke(capsys, "query", two_counters_file, "--query", "sup(3) > 0")
        assert code == 3

    def test_witness(self, capsys, two_counters_file):
        data = invoke_json(capsys, "witness", two_counters_file, "--expr", "Emax", "--nu", "1", "--eps", "1/10")
        assert data == {"result": {"prefix": [], "cycle": ["a"]}, "value": "1", "scc": 0}

    def test_witness_text(self, capsys, two_counters_file):
        code, out, _ = invoke(capsys, "witness", two_counters_file, "--expr", "Emax", "--nu", "1", "--eps", "1/10",
                              "--format", "text")
        assert code == 0
        assert out.splitlines() == ["(a)^w", "scc: 0", "value: 1"]

    @pytest.mark.parametrize("nu,code", [("2", 3)])
    def test_witness_unreachable(self, capsys, two_counters_file, nu, code):
        assert invoke(capsys, "witness", two_counters_file, "--expr", "Emax", "--nu", nu, "--eps", "1/10")[0] == code


class TestOutputAndSettings:
    """Byte-level output format and environment settings"""

    @pytest.fixture
    def fresh_settings(self):
        get_settings.cache_clear()
        yield
        get_settings.cache_clear()

    def test_json_is_compact(self, capsys, two_counters_file):
        code, out, _ = invoke(capsys, "value-set", two_counters_file, "--expr", "Emin")
        assert code == 0
        assert out == '{"result":[{"hi":"1/2","lo":"0"}]}'

    def test_error_is_compact(self, capsys, tmp_path):
        code, _, err = invoke(capsys, "check", tmp_path / "absent.mpa")
        assert code == 2
        assert err.startswith('{"error":"ValidationException","message":')

    def test_invalid_environment_value(self, capsys, monkeypatch, two_counters_file, fresh_settings):
        monkeypatch.setenv("MPAE_CYCLE_BUDGET", "abc")
        code, out, err = invoke(capsys, "check", two_counters_file)
        assert code == 2
        assert out == ""
        error = json.loads(err)
        assert error["error"] == "ConfigurationException"
        assert "cycle_budget" in error["message"]

    def test_non_positive_environment_budget(self, capsys, monkeypatch, two_counters_file, fresh_settings):
        monkeypatch.setenv("MPAE_CYCLE_BUDGET", "0")
        code, _, err = invoke(capsys, "check", two_counters_file)
        assert code == 2
        assert json.loads(err)["error"] == "ConfigurationException"

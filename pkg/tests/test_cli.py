import json
import os
from fractions import Fraction

import pytest

from modmat.cli import (
    Outcome,
    RunConfig,
    main,
    parse_args,
    parse_range,
    render_csv,
    render_json,
    summary,
    write_atomic,
)
from modmat.cli import suites
from modmat.errors import ConfigError
from modmat.objects import VerificationReport


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["verify"],
        ["verify", "--n", "5"],
        ["verify", "--n", "10", "--qprec", "3"],
        ["verify", "--n", "10", "--n-range", "10..12"],
        ["psi", "--n", "10", "--checks", "bogus"],
        ["chain", "--s", "x", "--t", "5"],
        ["chain", "--s", "2", "--t", "5", "--format", "xml"],
        ["numeric-oracle", "--n", "10", "--tau", "-1j"],
        ["cusp", "--n", "10", "--kind", "other"],
        ["matroid", "--n", "7", "--log-level", "LOUD"],
    ],
)
def test_bad_command_lines(argv):
    with pytest.raises(ConfigError):
        parse_args(argv)


def test_parse_args_chain():
    config = parse_args(["chain", "--s", "2", "--t", "5/3", "--range", "-4..8"])
    assert config.command == "chain"
    assert config.kwargs["s"] == 2
    assert config.kwargs["t"] == Fraction(5, 3)
    assert config.kwargs["window"] == (-4, 8)
    assert config.fmt == "json"
    assert config.qprec == 25


def test_parse_args_levels():
    config = parse_args(["verify", "--n-range", "10..12", "--checks", "cusp,collinearity"])
    assert config.levels == [10, 11, 12]
    assert config.kwargs["checks"] == ["cusp", "collinearity"]
    assert parse_args(["numeric-oracle", "--n", "10"]).qprec == 30


def test_parse_range():
    assert parse_range("-4..8") == (-4, 8)
    for bad in ("5", "3..1", "a..b"):
        with pytest.raises(ConfigError):
            parse_range(bad)


def test_thread_cap(monkeypatch):
    config = RunConfig("verify", levels=[10], threads=4)
    monkeypatch.delenv("MODMAT_THREADS", raising=False)
    assert config.workers == 4
    monkeypatch.setenv("MODMAT_THREADS", "2")
    assert config.workers == 2
    monkeypatch.setenv("MODMAT_THREADS", "0")
    assert config.workers == 1
    monkeypatch.setenv("MODMAT_THREADS", "many")
    with pytest.raises(ConfigError):
        config.workers


def test_outcome_rendering():
    report = VerificationReport(10, "cusp", True, qprec=1)
    outcome = Outcome("verify", {"levels": [10]}, [report])
    data = json.loads(render_json(outcome))
    assert data["passed"] is True
    assert data["reports"][0]["check"] == "cusp"
    assert render_csv(outcome).splitlines()[0] == "level,check,status,qprec,residual_order"
    assert summary(outcome).endswith("1 passed, 0 failed")


def test_write_atomic(tmp_path):
    target = tmp_path / "out" / "report.json"
    write_atomic(str(target), "first\n")
    write_atomic(str(target), "second\n")
    assert target.read_text() == "second\n"
    assert os.listdir(target.parent) == ["report.json"]


def _chain(tmp_path, *extra):
    path = tmp_path / "chain.out"
    code = main(["chain", "--s", "2", "--t", "5", "--output", str(path), *extra])
    return code, path.read_text()


def test_chain_command(tmp_path):
    code, text = _chain(tmp_path, "--range", "-4..8")
    assert code == 0
    data = json.loads(text)
    assert data["command"] == "chain"
    assert data["passed"] is True
    assert set(data["residuals"].values()) == {"0"}
    assert data["window"][1] >= 8
    assert data["points"]["4"] == ["1", "5/2", "1/2"]


def test_chain_command_is_deterministic(tmp_path):
    assert _chain(tmp_path) == _chain(tmp_path)


def test_chain_command_csv(tmp_path):
    code, text = _chain(tmp_path, "--format", "csv")
    assert code == 0
    assert text.splitlines()[0] == "k,point,residual"


def test_excluded_chain_parameters_exit_with_two(tmp_path):
    assert main(["chain", "--s", "1", "--t", "5"]) == 2
    assert main(["chain", "--s", "bad", "--t", "5"]) == 2


def test_matroid_command(tmp_path, capsys):
    path = tmp_path / "t7.json"
    assert main(["matroid", "--n", "7", "--t", "2", "--output", str(path)]) == 0
    data = json.loads(path.read_text())
    assert data["matroid"] == "T7"
    assert "1 passed, 0 failed" in capsys.readouterr().out


def test_qseries_command(capsys):
    assert main(["qseries", "--n", "10", "--a", "3", "--qprec", "6"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["n"] == 10
    assert len(data["sigma"]) == 6


def _fake_suite(status):
    def suite(n, qprec, zprec):
        return [VerificationReport(n, "collinearity", status, qprec=qprec)]

    return suite


@pytest.mark.parametrize("status, code", [(True, 0), (False, 1)])
def test_verify_exit_code_follows_the_reports(tmp_path, monkeypatch, status, code):
    monkeypatch.setitem(suites.SUITES, "collinearity", _fake_suite(status))
    path = tmp_path / "verify.json"
    argv = ["verify", "--n", "10", "--checks", "collinearity", "--output", str(path)]
    assert main(argv) == code
    data = json.loads(path.read_text())
    assert data["passed"] is status
    assert data["checks"] == ["collinearity"]


def test_failing_library_call_becomes_a_failed_report(monkeypatch):
    def broken(n, qprec, zprec):
        raise ConfigError("broken")

    monkeypatch.setitem(suites.SUITES, "cusp", broken)
    (report,) = suites.run_job("cusp", 10, 8, 4)
    assert not report
    assert report.details["error"] == "broken"
    assert report.details["type"] == "ConfigError"


def test_arithmetic_error_in_a_check_still_writes_the_report(tmp_path, monkeypatch):
    def inexact(n, qprec, zprec):
        raise ArithmeticError("inexact division")

    monkeypatch.setitem(suites.SUITES, "cusp", inexact)
    path = tmp_path / "verify.json"
    argv = ["verify", "--n", "10", "--checks", "cusp", "--output", str(path)]
    assert main(argv) == 1
    data = json.loads(path.read_text())
    assert data["passed"] is False
    (report,) = data["reports"]
    assert report["status"] is False
    assert report["details"] == {"error": "inexact division", "type": "ArithmeticError"}

"""Command line behavior: outputs, exit codes, error reporting."""

import json

import pytest

from tensornorm.cli import main


FIELDS = "p 2\nlevels 4\nbase closure\nK t:-1\nL u:-1\n"


@pytest.fixture()
def fields_file(tmp_path):
    path = tmp_path / "fields.cfg"
    path.write_text(FIELDS)
    return str(path)


def test_norm_command(fields_file, capsys):
    code = main(["norm", fields_file, "t (x) 1 + 1 (x) u"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.splitlines()[0] == "2^-1"
    assert "certified norm: 2^-1" in out
    assert "|u||v|" in out


def test_norm_of_zero(fields_file, capsys):
    code = main(["norm", fields_file, "t (x) u + t (x) u"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.splitlines()[0] == "0"


def test_reduce_command_default_fields(capsys):
    code = main(["reduce", "(1 + t) (x) u + 1 (x) u"])
    out = capsys.readouterr().out
    assert code == 0
    assert "reduced representation (1 terms):" in out
    assert "certified norm: 2^-2" in out


def test_decompose_command(capsys):
    code = main(["decompose", "t (x) 1 + 1 (x) u"])
    out = capsys.readouterr().out
    assert code == 0
    assert "alpha: 2^0" in out
    assert "beta: 2^-1" in out
    assert "pure part: 1 (x) u" in out
    assert "tail: t (x) 1" in out


def test_decompose_zero_is_usage_error(capsys):
    code = main(["decompose", "t (x) u + t (x) u"])
    err = capsys.readouterr().err
    assert code == 2
    assert "error:" in err


def test_check_counterexample(capsys):
    code = main(["check", "counterexample"])
    out = capsys.readouterr().out
    assert code == 0
    assert "failures: 0" in out


def test_check_small_suite(capsys):
    code = main(["check", "crossnorm", "--trials", "10", "--seed", "3"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("suite: crossnorm")


def test_check_json(capsys):
    code = main(["check", "ultrametric", "--trials", "5", "--seed", "3", "--json"])
    out = capsys.readouterr().out
    assert code == 0
    assert json.loads(out)["trials"] == 5


def test_check_prime_base(capsys):
    code = main(["check", "submult", "--trials", "5", "--seed", "3", "--base", "1"])
    assert code == 0
    capsys.readouterr()


def test_unknown_suite_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["check", "bogus-suite"])
    assert exc.value.code == 2


def test_invalid_trials_is_usage_error(capsys):
    code = main(["check", "ultrametric", "--trials", "0"])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_parse_error_reports_position(fields_file, capsys):
    code = main(["norm", fields_file, "t (x) %"])
    err = capsys.readouterr().err
    assert code == 2
    assert "position" in err


def test_missing_setup_file(capsys):
    code = main(["norm", "/nonexistent/fields.cfg", "t (x) 1"])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_check_deterministic_stdout(capsys):
    main(["check", "symmetry", "--trials", "8", "--seed", "5"])
    first = capsys.readouterr().out
    main(["check", "symmetry", "--trials", "8", "--seed", "5"])
    second = capsys.readouterr().out
    assert first == second


def test_failing_suite_exits_one(monkeypatch, capsys):
    from tensornorm import cli
    from tensornorm.suites import SuiteReport, TrialFailure

    def fake_run_suite(name, scenario):
        fail = TrialFailure(offset=3, inputs=("t (x) 1",),
                            relation="r", observed="o")
        return SuiteReport(name, trials=scenario.trials, failures=[fail])

    monkeypatch.setattr(cli, "run_suite", fake_run_suite)
    code = main(["check", "mult-closed", "--trials", "5"])
    out = capsys.readouterr().out
    assert code == 1
    assert "failures: 1" in out

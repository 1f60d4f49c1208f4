import json

from click.testing import CliRunner

from schurasym.cli import main


def run(*args, env=None):
    return CliRunner().invoke(main, list(args), env=env)


def test_eval_schur():
    r = run("eval", "--family", "schur", "--lambda", "1,0", "--x", "3", "--N", "2")
    assert r.exit_code == 0
    out = json.loads(r.stdout)
    assert out["value"] == "2"
    assert out["config"]["params"]["lambda"] == [1, 0]


def test_asm_count():
    r = run("asm", "count", "--n", "4")
    assert r.exit_code == 0 and json.loads(r.stdout)["count"] == 42


def test_asympt_gue():
    r = run("asympt", "gue", "--profile", "halfstair", "--h", "0", "--N", "100")
    out = json.loads(r.stdout)
    assert r.exit_code == 0 and float(out["prediction"]) == 1
    assert (out["E"], out["S"]) == ("1/4", "5/48")


def test_usage_errors():
    assert run("eval", "--family", "nope", "--lambda", "1", "--x", "2").exit_code == 2
    assert run("suite", "nope").exit_code == 2
    assert run("eval", "--family", "schur", "--lambda", "1,0", "--x", "3", "--N", "3").exit_code == 2
    assert run("asm", "count", "--n", "3", env={"SCHURASYM_PREC": "x"}).exit_code == 2


def test_module_error_exit():
    r = run("asm", "count", "--n", "9")
    assert r.exit_code == 1
    r = run("eval", "--family", "schur", "--lambda", "1,-1", "--x", "0")
    assert r.exit_code == 1


def test_csv_deterministic(tmp_path):
    outs = []
    path = tmp_path / "s.csv"
    for _ in range(2):
        r = run("tilings", "sample", "--lambda", "3,1,0", "--count", "4", "--seed", "5",
                "--format", "csv", "--output", str(path))
        assert r.exit_code == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    assert outs[0].startswith(b"# {")


def test_precision_env():
    r = run("asm", "count", "--n", "2", env={"SCHURASYM_PREC": "200"})
    assert json.loads(r.stdout)["config"]["precision_bits"] == 200


def test_suite_exit_code():
    r = run("suite", "asm")
    assert r.exit_code == 0
    assert json.loads(r.stdout)["passed"] is True

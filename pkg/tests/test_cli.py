from fractions import Fraction as Fr

import pytest

from yflab.cli import main
from yflab.experiments import IdentityResult, SuiteReport


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_f_command(capsys):
    code, out, _ = run(capsys, "f", "21221", "0", "0")
    assert code == 0
    assert out == "1/720\n"


def test_dcount_both(capsys):
    code, out, _ = run(capsys, "dcount", "eps", "21221", "--method", "both")
    assert code == 0
    assert out == "56 56 MATCH\n"


def test_dcount_single_methods(capsys):
    assert run(capsys, "dcount", "eps", "221", "--method", "dp")[1] == "8\n"
    assert run(capsys, "dcount", "eps", "221", "--method", "formula")[1] == "8\n"


def test_level(capsys):
    code, out, _ = run(capsys, "level", "2")
    assert code == 0
    assert out == "11\n2\n"
    code, out, _ = run(capsys, "level", "0", "--format", "csv")
    assert out == "word\neps\n"


def test_scalar_commands(capsys):
    assert run(capsys, "g", "21221")[1] == "2,4,7\n"
    assert run(capsys, "q", "122")[1] == "1/40\n"
    assert run(capsys, "pi", "221")[1] == "3/8\n"
    assert run(capsys, "dbeta", "2")[1] == "1/2,0,-1/2\n"
    assert run(capsys, "dprime", "eps", "--w", "22", "--beta", "1/2")[1] == "1\n"


def test_measure_masses_sum_to_one(capsys):
    code, out, _ = run(capsys, "measure", "--w", "eps", "--beta", "1/2", "--n", "3",
                       "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "word,mass"
    masses = [Fr(line.split(",")[1]) for line in lines[1:]]
    assert len(masses) == 3
    assert sum(masses) == 1


def test_magic_csv(capsys):
    code, out, _ = run(capsys, "magic", "--w", "2", "--beta", "1/2", "--n", "5",
                       "--symbolic")
    assert code == 0
    assert out.splitlines()[0] == "word,0,1,2,3,4,5"
    assert any(line.startswith("122,") and "(3/40;eps;0;3)" in line
               for line in out.splitlines())


def test_magic_cap(capsys):
    code, _, err = run(capsys, "magic", "--w", "2", "--beta", "1/2", "--n", "17")
    assert code == 2
    assert "cap" in err
    code, out, _ = run(capsys, "magic", "--w", "2", "--beta", "1/2", "--n", "17",
                       "--cap", "18")
    assert code == 0
    assert len(out.splitlines()) == 1 + 2584  # fibonacci(18) rows


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--mode", "suffix", "--w", "22",
                       "--beta", "1/2", "--l", "2", "--n", "4..8..2",
                       "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "mode,core,beta,param,n,tail,head,arithmetic"
    assert [line.split(",")[4] for line in lines[1:]] == ["4", "6", "8"]
    tail, head = lines[1].split(",")[5:7]
    assert Fr(tail) + Fr(head) == 1


def test_sweep_requires_exactly_one_parameter(capsys):
    code, _, err = run(capsys, "sweep", "--mode", "suffix", "--w", "22",
                       "--beta", "1/2", "--n", "4")
    assert code == 2
    code, _, err = run(capsys, "sweep", "--mode", "pi", "--w", "22",
                       "--beta", "1/2", "--l", "1", "--n", "4")
    assert code == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--max-rank", "3")
    assert code == 0
    assert "ALL IDENTITIES PASS" in out


def test_verify_exit_code_on_failure(capsys, monkeypatch):
    failing = SuiteReport(3, (IdentityResult("evtuh5", 4, 1, "x=21"),))
    monkeypatch.setattr("yflab.cli.identity_suite", lambda max_rank: failing)
    code, out, _ = run(capsys, "verify", "--max-rank", "3")
    assert code == 1
    assert "FAIL" in out


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "f", "13", "0", "0")[0] == 2
    assert run(capsys, "q", "103")[0] == 2
    assert run(capsys, "measure", "--w", "2", "--beta", "3/2", "--n", "3")[0] == 2
    assert run(capsys, "dcount", "21", "2")[0] == 2  # rank order violation
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_byte_identical_output(capsys):
    args = ["measure", "--w", "212", "--beta", "3/4", "--n", "7", "--format", "csv"]
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second


def test_output_file_and_env_dir(tmp_path, monkeypatch, capsys):
    target = tmp_path / "out.csv"
    code, out, _ = run(capsys, "level", "3", "--format", "csv", "--output", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == "word\n111\n12\n21\n"
    monkeypatch.setenv("YFLAB_OUTPUT_DIR", str(tmp_path))
    code, _, _ = run(capsys, "level", "3", "--format", "csv", "--output", "rel.csv")
    assert code == 0
    assert (tmp_path / "rel.csv").read_text() == "word\n111\n12\n21\n"

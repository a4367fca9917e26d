import subprocess
import sys

import pytest

from gainrank.cli import main
from gainrank.fileformat import parse

C4_B = "gaingraph v1\nn 4\ne 1 2 1/2\ne 2 3 1\ne 3 4 1\ne 4 1 1\n"
C6_A = "gaingraph v1\nn 6\ne 1 2 1/2\ne 2 3 1\ne 3 4 1\ne 4 5 1\ne 5 6 1\ne 6 1 1\n"
TREE = "gaingraph v1\nn 4\ne 1 2 1/4\ne 2 3 1/8\ne 2 4 1\n"
BOWTIE = "gaingraph v1\nn 5\ne 1 2 1\ne 2 3 1\ne 1 3 1\ne 3 4 1\ne 4 5 1\ne 3 5 1\n"
TRI_PATH = "gaingraph v1\nn 5\ne 1 2 1\ne 2 3 1\ne 1 3 1/4\ne 3 4 1\ne 4 5 1\n"


@pytest.fixture
def gfile(tmp_path):
    def make(text, name="g.gg"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return make


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rank(gfile, capsys):
    code, out, _ = run(["rank", gfile(C4_B)], capsys)
    assert code == 0
    assert "r(Phi) 4" in out and "r(G) 2" in out and "method exact" in out and "tolerance none" in out


def test_rank_numeric(gfile, capsys):
    code, out, _ = run(["rank", gfile(TREE)], capsys)
    assert code == 0 and "method numeric" in out and "stable true" in out


def test_inertia(gfile, capsys):
    assert run(["inertia", gfile(C4_B)], capsys)[:2] == (0, "inertia 2 2 0\n")


def test_theta_tree(gfile, capsys):
    code, out, _ = run(["theta", gfile(TREE)], capsys)
    assert code == 0 and out.splitlines() == ["theta 0", "omega 1"]


def test_cycles(gfile, capsys):
    code, out, _ = run(["cycles", gfile(C4_B)], capsys)
    assert code == 0 and out == "cycle 1 2 3 4\tgain 1/2\ttype B\tp_mod_4 0\n"
    code, out, _ = run(["cycles", gfile(BOWTIE)], capsys)
    assert code == 0 and out.startswith("not-disjoint shared-vertex 3")


def test_check_bounds_upper_optimal(gfile, capsys):
    code, out, _ = run(["check-bounds", gfile(C4_B)], capsys)
    assert code == 0 and "upper_optimal true" in out and "lower_optimal false" in out


def test_check_bounds_violation_exit(gfile, capsys, monkeypatch):
    import gainrank.cli as cli
    from gainrank.optimality import BoundsReport
    monkeypatch.setattr(cli, "bounds", lambda phi: BoundsReport(9, 2, 1, "exact"))
    code, _, err = run(["check-bounds", gfile(C4_B)], capsys)
    assert code == 2 and "SOUNDNESS" in err


def test_check_optimal(gfile, capsys):
    code, out, _ = run(["check-optimal", gfile(C6_A), "--direction", "lower", "--explain"], capsys)
    assert code == 0
    assert "direct true" in out and "structural true" in out and "type A, p mod 4 = 2, ok" in out
    code, out, _ = run(["check-optimal", gfile(C6_A), "--direction", "upper"], capsys)
    assert code == 0 and "direct false" in out and "structural false" in out


def test_check_optimal_mismatch_exit(gfile, capsys, monkeypatch):
    import gainrank.cli as cli
    real = cli.characterize

    def flipped(phi, direction):
        rep = real(phi, direction)
        object.__setattr__(rep, "condition_crucial", not rep.condition_crucial)
        return rep
    monkeypatch.setattr(cli, "characterize", flipped)
    assert run(["check-optimal", gfile(C4_B), "--direction", "upper"], capsys)[0] == 3


def test_crucial(gfile, capsys):
    code, out, _ = run(["crucial", gfile(TRI_PATH)], capsys)
    assert code == 0
    assert out.startswith("delta 1: pendant 5 neighbor 4\nk 1\nresidual vertices 1 2 3\n")
    residual = out[out.index("gaingraph v1"):]
    assert parse(residual).gain(0, 2) == parse(TRI_PATH).gain(0, 2)


def test_contract(gfile, capsys):
    code, out, _ = run(["contract", gfile(TRI_PATH)], capsys)
    assert code == 0
    assert "t 6 = cycle 1 2 3" in out and "C_G 6" in out and "U 4 5" in out
    assert out.count("gaingraph v1") == 2


def test_contract_refuses(gfile, capsys):
    code, _, err = run(["contract", gfile(BOWTIE)], capsys)
    assert code == 1 and "not pairwise vertex-disjoint" in err


def test_verify_example(capsys):
    code, out, _ = run(["verify", "bounds_3_2", "--n", "5", "--q", "4", "--trials", "8", "--exhaustive"], capsys)
    assert code == 0 and out.startswith("# PASS bounds_3_2: 8800 instances, 0 failures")


def test_verify_failure_lines(capsys):
    code, out, _ = run(["verify", "theta_3_1", "--n", "4", "--q", "4", "--trials", "1", "--exhaustive"], capsys)
    assert code == 1
    lines = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert lines and all(len(ln.split("\t")) == 5 for ln in lines)
    assert run(["replay", "theta_3_1", lines[0].split("\t")[2]], capsys)[0] == 1


def test_verify_unknown_campaign(capsys):
    assert run(["verify", "bogus"], capsys)[0] == 64


def test_gen_random(capsys):
    code, out, _ = run(["gen-random", "--n", "6", "--p", "1/2", "--q", "8", "--seed", "7"], capsys)
    assert code == 0 and len(parse(out)) == 6
    assert run(["gen-random", "--n", "6", "--p", "1/2", "--q", "8", "--seed", "7"], capsys)[1] == out


@pytest.mark.parametrize("argv", [["bogus"], ["rank"], ["rank", "a", "--bad-flag"], [],
                                  ["check-optimal", "x", "--direction", "sideways"],
                                  ["gen-random", "--n", "3", "--p", "2"], ["verify", "bounds_3_2", "--q", "a,b"]])
def test_usage_errors_exit_64(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 64
    assert "usage" in capsys.readouterr().err


def test_missing_file_exit_66(tmp_path, capsys):
    assert run(["rank", str(tmp_path / "missing.gg")], capsys)[0] == 66


def test_malformed_file_exit_66(gfile, capsys):
    code, _, err = run(["theta", gfile("gaingraph v1\nn 2\ne 1 1 1\n")], capsys)
    assert code == 66 and "self-loop" in err


def test_module_entry_point(gfile):
    proc = subprocess.run([sys.executable, "-m", "gainrank", "theta", gfile(TREE)], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("theta 0")
    proc = subprocess.run([sys.executable, "-m", "gainrank", "nope"], capture_output=True, text=True)
    assert proc.returncode == 64

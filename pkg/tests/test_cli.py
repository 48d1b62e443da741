import json

import pytest

from revca.cli import main, state_from_text, state_to_text
from revca.grid import single_seed
from revca.rules import Rule, evolve


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_simulate_txt(capsys):
    code, out, _ = run(capsys, "simulate", "--rule", "R1", "--steps", "7")
    assert code == 0
    assert out == "n=7 R1=64 R2=21 R3=0 R=85\n"


def test_simulate_zero_steps(capsys):
    code, out, _ = run(capsys, "simulate", "--rule", "R1", "--steps", "0")
    assert code == 0
    assert out == "n=0 R1=1 R2=0 R3=0 R=1\n"


def test_simulate_json(capsys):
    code, out, _ = run(capsys, "simulate", "--rule", "R2", "--steps", "3",
                       "--format", "json")
    assert json.loads(out) == {"n": 3, "R1": 16, "R2": 5, "R3": 0, "R": 21}


def test_simulate_save_load_round_trip(tmp_path, capsys):
    st = tmp_path / "state.txt"
    code, _, _ = run(capsys, "simulate", "--rule", "R2", "--steps", "-3",
                     "--save", str(st))
    assert code == 0
    code, out, _ = run(capsys, "simulate", "--rule", "R2", "--steps", "3",
                       "--load", str(st))
    assert code == 0
    assert out == "n=3 R1=1 R2=0 R3=0 R=1\n"  # back at the seed


def test_state_text_round_trip():
    s = evolve(Rule.C1, single_seed(), 4)
    assert state_from_text(state_to_text(s)) == s


def test_sequence_csv_matches_table(capsys):
    code, out, _ = run(capsys, "sequence", "--which", "R", "--max", "15",
                       "--method", "recursive", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,R"
    assert len(lines) == 17
    assert lines[1] == "0,1" and lines[8] == "7,85" and lines[16] == "15,341"


def test_sequence_full_table(capsys):
    code, out, _ = run(capsys, "sequence", "--max", "2")
    assert out == "n,R,R1,R2\n0,1,1,0\n1,5,4,1\n2,9,5,4\n"


def test_sequence_r2_base(capsys):
    code, out, _ = run(capsys, "sequence", "--which", "R2", "--max", "1")
    assert out.strip().splitlines()[1:] == ["0,0", "1,1"]


def test_sequence_check_and_methods_agree(capsys):
    baseline = None
    for method in ("recursive", "alt", "sim", "poly"):
        code, out, _ = run(capsys, "sequence", "--max", "40",
                           "--method", method, "--format", "json")
        assert code == 0
        rows = json.loads(out)
        baseline = baseline or rows
        assert rows == baseline
    code, _, _ = run(capsys, "sequence", "--which", "R", "--max", "40",
                     "--check")
    assert code == 0


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "counts", "--max", "64")
    assert code == 0
    assert "counts" in out and "PASS" in out


def test_verify_env_default(capsys, monkeypatch):
    monkeypatch.setenv("CA_DEFAULT_MAX", "16")
    code, out, _ = run(capsys, "verify", "--suite", "sublattice")
    assert code == 0
    assert "n=0..16" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "diamond", "--max", "2",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)[0]["passed"] is True


def test_render_txt(capsys):
    code, out, _ = run(capsys, "render", "--rule", "R1", "--step", "1",
                       "--format", "txt")
    assert code == 0
    assert out == "1.1\n.2.\n1.1\n"


def test_render_to_file(tmp_path, capsys):
    out_file = tmp_path / "img.ppm"
    code, _, _ = run(capsys, "render", "--rule", "R1", "--step", "7",
                     "--format", "ppm", "--out", str(out_file))
    assert code == 0
    assert out_file.read_text().startswith("P3\n15 15\n255")


def test_export(capsys):
    code, out, _ = run(capsys, "export", "--rule", "R1", "--steps", "1")
    assert code == 0
    assert out.count("#bgrid v1") == 2
    assert state_from_text(out) == evolve(Rule.C1, single_seed(), 1)


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["simulate", "--steps", "3"])  # missing --rule
    assert e.value.code == 2
    assert main(["simulate", "--rule", "R9", "--steps", "1"]) == 2


def test_io_error_exit_1(capsys):
    code = main(["simulate", "--rule", "R1", "--steps", "1",
                 "--out", "/nonexistent-dir/x.txt"])
    assert code == 1


def test_deterministic_output(capsys):
    a = run(capsys, "verify", "--suite", "replication", "--max", "3")
    b = run(capsys, "verify", "--suite", "replication", "--max", "3")
    assert a == b

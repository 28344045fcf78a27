import json
from pathlib import Path

import pytest

from recdet import identities
from recdet.cli import main
from recdet.exact import ONE

GOLDEN = Path(__file__).parent / "golden" / "small_sweep.json"
PINNED = ["--format", "json", "--seed", "7", "verify", "--family", "fib", "--family", "1,2,-1;1,1,2",
          "--random-specs", "1", "--s", "0..1", "--k", "0..1", "--n", "0..1", "--m", "1..2",
          "--ij", "-1..1", "--profiles", "1", "--corollary", "C5"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_seq_fibonacci_negative_range(capsys):
    code, out, _ = run(capsys, "seq", "fib", "-2..4")
    assert code == 0
    assert out.splitlines() == ["-2: -x", "-1: 1", "0: 0", "1: 1", "2: x", "3: x^2 + 1", "4: x^3 + 2*x"]


def test_seq_literal_and_single(capsys):
    assert run(capsys, "seq", "2,1,0;1,0,1", "0..2")[1].splitlines() == ["0: 2", "1: x", "2: x^2 + 2"]
    assert run(capsys, "seq", "fib", "0..0")[1] == "0: 0\n"


def test_seq_json(capsys):
    code, out, _ = run(capsys, "seq", "lucas", "0..1", "--format", "json")
    assert code == 0
    assert json.loads(out) == [{"n": 0, "term": "2"}, {"n": 1, "term": "x"}]


def test_det_matrix_files(capsys, tmp_path):
    f = tmp_path / "m.txt"
    f.write_text("0 | 1\n1 | x\n")
    assert run(capsys, "det", "--matrix-file", str(f)) == (0, "-1\n", "")
    f.write_text("1 | 0 | 0\n0 | 1 | 0\n0 | 0 | 1\n")
    assert run(capsys, "det", "--matrix-file", str(f), "--engine", "condense")[1] == "1\n"
    f.write_text("(1)/(x) | 1\n1 | 1\n")
    assert run(capsys, "det", "--matrix-file", str(f))[1] == "(-x + 1)/(x)\n"


def test_det_all_engines(capsys):
    code, out, _ = run(capsys, "det", "--theorem", "2", "--family", "fib", "--s", "0", "--k", "1",
                       "--n", "0", "--m", "1", "--engine", "all")
    assert code == 0
    lines = out.splitlines()
    assert lines == ["bareiss: -1", "gauss: -1", "condense: -1", "laplace: -1", "consistent: true"]


def test_det_all_skips_laplace_when_large(capsys):
    code, out, _ = run(capsys, "--engine", "all", "--format", "json", "det", "--theorem", "2",
                       "--family", "chebT", "--m", "6")
    data = json.loads(out)
    assert code == 0 and data["consistent"] is True
    assert "laplace" in data["skipped"] and len(data["engines"]) == 3


def test_det_theorem3_profile(capsys):
    code, out, _ = run(capsys, "det", "--theorem", "3", "--m", "2", "--d-seq", "0,1", "--e-seq", "2,-1")
    assert code == 0 and out.strip()


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["seq", "notafamily", "0..3"],
    ["seq", "fib", "3..x"],
    ["seq", "1,2,3;1,1,0", "0..3"],
    ["det"],
    ["det", "--theorem", "3", "--m", "2"],
    ["det", "--theorem", "2", "--m", "9", "--engine", "laplace"],
    ["det", "--theorem", "3.5", "--family", "fib", "--n", "0"],
    ["verify", "--m", "0"],
    ["verify", "--theorem", "7"],
    ["verify", "--config", "/nonexistent/config.txt"],
    ["--format", "yaml", "seq", "fib", "0..1"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("recdet: error")


def test_det_bad_matrix_file(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("1 | 2\n3\n")
    assert run(capsys, "det", "--matrix-file", str(f))[0] == 2


def test_verify_zero_window_continues(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify", "--theorem", "3.5", "--family", "fib",
                       "--n", "0", "--s", "0", "--k", "1", "--m", "1")
    report = json.loads(out)
    assert code == 0
    statuses = [v["status"] for v in report["verdicts"]]
    assert "error" in statuses
    assert report["summary"]["total"] == len(statuses)


def test_verify_integer_point(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify", "--x", "1", "--theorem", "2",
                       "--family", "fib", "--k", "1..2")
    report = json.loads(out)
    assert code == 0
    assert report["summary"]["unequal"] == 0
    for v in report["verdicts"]:
        assert v["params"]["x"] == "1"
        assert "x" not in v["lhs"]


def test_golden_report_is_stable(capsys):
    first = run(capsys, *PINNED)
    second = run(capsys, *PINNED)
    assert first[0] == 0
    assert first[1] == second[1]
    assert first[1] == GOLDEN.read_text(encoding="utf-8")


def test_worker_pool_preserves_order(capsys):
    serial = run(capsys, *PINNED)[1]
    pooled = run(capsys, *PINNED, "--jobs", "2")[1]
    assert pooled == serial


def test_config_file_matches_flags(capsys, tmp_path):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text(
        "# pinned sweep\nfamilies = fib 1,2,-1;1,1,2\nrandom_specs = 1\ns = 0..1\nk = 0..1\n"
        "n = 0..1\nm = 1..2\nij = -1..1\nprofiles = 1\ncorollaries = C5\nseed = 7\nformat = json\n"
    )
    assert run(capsys, "verify", "--config", str(cfg))[1] == GOLDEN.read_text(encoding="utf-8")


def test_output_file(capsys, tmp_path):
    out = tmp_path / "report.json"
    code, printed, _ = run(capsys, *PINNED, "--output", str(out))
    assert code == 0 and printed == ""
    assert out.read_text(encoding="utf-8") == GOLDEN.read_text(encoding="utf-8")


def test_corrupted_rhs_exits_1(capsys, monkeypatch):
    original = identities.rhs_theorem2

    def corrupted(case, disc=None):
        return original(case, disc) + ONE

    monkeypatch.setattr(identities, "rhs_theorem2", corrupted)
    code, out, _ = run(capsys, "--format", "json", "verify", "--theorem", "2", "--family", "fib",
                       "--m", "1")
    assert code == 1
    assert json.loads(out)["summary"]["unequal"] > 0
    code, out, _ = run(capsys, "verify", "--theorem", "2", "--family", "fib", "--m", "1")
    assert code == 1 and "[UNEQUAL]" in out


def test_text_report(capsys):
    code, out, _ = run(capsys, "verify", "--family", "fib", "--m", "1", "--theorem", "4")
    assert code == 0
    assert "theorem 4 reading supported: corrected" in out
    assert "[expected]" in out

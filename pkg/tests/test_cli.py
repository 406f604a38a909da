"""CLI: subcommand contracts, fixtures, determinism, exit codes."""

import json

import pytest

from edgeprobe.cli import main
from edgeprobe.instances import parse_line


def test_gen_emits_parseable_fixture(capsys, tmp_path):
    assert main(["gen", "--family", "matching", "--n", "6", "--seed", "3"]) == 0
    line = capsys.readouterr().out.strip()
    inst = parse_line(line)
    assert inst.n == 6
    out = tmp_path / "fix.txt"
    assert main(["gen", "--family", "half_graph", "--n", "4", "--seed", "1",
                 "--out", str(out)]) == 0
    assert parse_line(out.read_text().strip()).n == 4


def test_gen_is_deterministic(capsys):
    main(["gen", "--family", "col_permuted", "--n", "9", "--seed", "12"])
    first = capsys.readouterr().out
    main(["gen", "--family", "col_permuted", "--n", "9", "--seed", "12"])
    assert capsys.readouterr().out == first


def test_learn_from_fixture_and_transcript(capsys, tmp_path):
    fix = tmp_path / "inst.txt"
    main(["gen", "--family", "half_graph", "--n", "8", "--seed", "5", "--out", str(fix)])
    capsys.readouterr()
    tr = tmp_path / "transcript.csv"
    rc = main(["learn", "--learner", "quicksort", "--in", str(fix),
               "--cost-model", "sampling", "--transcript", str(tr)])
    out = capsys.readouterr().out
    assert rc == 0
    assert "correct:       1" in out
    lines = tr.read_text().splitlines()
    assert lines[0] == "kind,args...,answer,charge"
    assert len(lines) > 8


def test_learn_adversary_prints_exact_count(capsys):
    assert main(["learn", "--learner", "greedy_adversary", "--n", "10"]) == 0
    assert "total_queries: 45" in capsys.readouterr().out


def test_learn_rejects_family_mismatch(capsys, tmp_path):
    fix = tmp_path / "inst.txt"
    main(["gen", "--family", "matching", "--n", "4", "--seed", "0", "--out", str(fix)])
    assert main(["learn", "--learner", "quicksort", "--in", str(fix)]) == 2


def test_sweep_fit_round_trip(capsys, tmp_path):
    csv_path = tmp_path / "sweep.csv"
    rc = main(["sweep", "--family", "col_permuted", "--learner", "binary_search",
               "--sizes", "8,16,32,64", "--trials", "3", "--seed", "2",
               "--out", str(csv_path)])
    assert rc == 0
    capsys.readouterr()
    rc = main(["fit", "--in", str(csv_path), "--model", "nlogn"])
    assert rc == 0
    fit = json.loads(capsys.readouterr().out)
    assert set(fit) == {"model", "constant", "slope", "residual"}
    assert 0.9 <= fit["slope"] <= 1.5  # n log n growth in log-log space


def test_sweep_rerun_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["sweep", "--family", "half_graph", "--learner", "quicksort",
            "--cost-model", "sampling", "--sizes", "4,8", "--trials", "2",
            "--seed", "9"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_sweep_config_file(capsys, tmp_path):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text("family=matching\nlearner=greedy_adversary\nsizes=2,4,8\n"
                   "trials=2\nseed=5\n# comment\n")
    out = tmp_path / "out.csv"
    assert main(["sweep", "--config", str(cfg), "--out", str(out)]) == 0
    body = out.read_text().splitlines()
    assert len(body) == 1 + 3 * 2
    assert body[1].split(",")[1] == "matching"


def test_sweep_missing_args_is_usage_error(capsys, tmp_path):
    assert main(["sweep", "--out", str(tmp_path / "x.csv")]) == 2


def test_bounds_table(capsys):
    assert main(["bounds", "--max-n", "4"]) == 0
    out = capsys.readouterr().out
    for needle in ("det_depth(matching)", "cra(matching)", "adversary_params",
                   "all match"):
        assert needle in out
    # matching depths 1, 3, 6 with match flags
    rows = [line for line in out.splitlines() if line.startswith("det_depth(matching)")]
    assert [r.split()[1:3] for r in rows] == [["2", "1"], ["3", "3"], ["4", "6"]]
    assert all(r.split()[-1] == "yes" for r in rows)


def test_certify_n6(capsys):
    assert main(["certify", "--n", "6"]) == 0
    out = capsys.readouterr().out
    assert "9 cells" in out
    assert "UNIQUE=true" in out
    # the 9-cell two-superdiagonal pattern, row by row
    assert ". 0 0 . . ." in out


def test_usage_errors_exit_nonzero():
    with pytest.raises(SystemExit) as exc:
        main(["learn"])  # missing required --learner
    assert exc.value.code != 0
    with pytest.raises(SystemExit):
        main(["no_such_command"])

"""CLI behavior tests: records, exit codes, sweep CSV, checkpoint resume."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("RAINBOW_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="RAINBOW_CLI not set")


def run(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert proc.returncode == expect, proc.stderr
    return proc.stdout


def test_count_record():
    out = run("count", "--eq", "1,1,2", "--cyclic", "-n", "9", "--coloring", "mod3-cyclic")
    rec = json.loads(out)
    assert rec["record"] == "count_summary/1"
    assert rec["total"] == 81
    assert rec["rainbow"] == 54
    assert rec["rb"] == "2/3"
    assert rec["mono_prop"] == "1/3"
    assert rec["rainbow_baseline"] == "2/9"
    assert rec["mono_baseline"] == "1/9"


def test_count_schur_record():
    out = run("count", "--eq", "1,1,1", "--cyclic", "-n", "25", "--coloring", "mod5-schur")
    rec = json.loads(out)
    assert rec["mono"] == 25
    assert rec["mono_prop"] == "1/25"


def test_count_interval_no_dichromatic():
    out = run("count", "--eq", "1,1,2", "--interval", "-n", "9", "--coloring", "mod3-interval")
    assert json.loads(out)["dichromatic"] == 0


def test_usage_errors_exit_2():
    proc = subprocess.run([CLI, "count", "--eq", "1,1,2", "--cyclic", "-n", "9",
                           "--coloring", "nope"], capture_output=True, text=True)
    assert proc.returncode == 2
    assert proc.stderr.strip()
    proc = subprocess.run([CLI, "count", "--eq", "1,1,2", "-n", "9",
                           "--coloring", "mod3-cyclic"], capture_output=True, text=True)
    assert proc.returncode == 2  # no ground kind flag
    proc = subprocess.run([CLI, "count", "--eq", "1,1,2", "--cyclic", "--interval", "-n", "9",
                           "--coloring", "mod3-cyclic"], capture_output=True, text=True)
    assert proc.returncode == 2  # both ground kinds


def test_verify_suite_records():
    out = run("verify", "--suite", "figure1", "--max-n", "30")
    recs = [json.loads(line) for line in out.splitlines()]
    assert len(recs) == 1
    assert recs[0]["record"] == "verify_check/1"
    assert recs[0]["pass"] is True


def test_sweep_csv(tmp_path):
    path = tmp_path / "sweep.csv"
    run("sweep", "--eq", "1,1,2", "--cyclic", "--n-from", "3", "--n-to", "99",
        "--coloring", "mod3-cyclic", "--out", str(path))
    lines = path.read_text().splitlines()
    assert lines[0] == "n,total,rainbow,mono,dichromatic,rb_decimal,rb_fraction"
    assert len(lines) == 98
    for line in lines[1:]:
        row = line.split(",")
        n = int(row[0])
        assert int(row[1]) == n * n
        if n % 3 == 0:
            assert row[-1] == "2/3"
    row9 = lines[7].split(",")
    assert row9[0] == "9" and row9[1] == "81" and row9[2] == "54"

    empty = tmp_path / "empty.csv"
    run("sweep", "--eq", "1,1,2", "--cyclic", "--n-from", "5", "--n-to", "4",
        "--coloring", "mod3-cyclic", "--out", str(empty))
    assert empty.read_text().splitlines() == ["n,total,rainbow,mono,dichromatic,rb_decimal,rb_fraction"]


def test_construct_and_file_round_trip(tmp_path):
    path = tmp_path / "c.coloring"
    run("construct", "--cyclic", "-n", "10", "--coloring", "mod5-schur", "--out", str(path))
    assert path.read_text() == "cyclic 10\n1 2 3 3 2 1 2 3 3 2\n"
    out = run("count", "--eq", "1,1,1", "--cyclic", "-n", "10", "--coloring", f"file:{path}")
    direct = run("count", "--eq", "1,1,1", "--cyclic", "-n", "10", "--coloring", "mod5-schur")
    assert json.loads(out)["mono"] == json.loads(direct)["mono"]


SEARCH_ARGS = ["search", "--objective", "max-rainbow", "--eq", "1,1,2", "--cyclic", "-n", "12",
               "--mode", "local", "--seed", "9", "--budget", "200", "--restarts", "6"]


def test_checkpoint_resume_after_interrupt(tmp_path):
    full_ck = tmp_path / "full.ck"
    full_out = run(*SEARCH_ARGS, "--checkpoint", str(full_ck))
    final_full = full_out.strip().splitlines()[-1]
    assert json.loads(final_full)["record"] == "search_final/1"

    # Simulate an interrupt: keep the header, two checkpoints, and a torn line.
    lines = full_ck.read_text().splitlines(keepends=True)
    assert sum("search_checkpoint/1" in l for l in lines) == 6
    torn = tmp_path / "torn.ck"
    torn.write_text("".join(lines[:3]) + lines[3][: len(lines[3]) // 2])

    resumed_out = run(*SEARCH_ARGS, "--checkpoint", str(torn))
    assert resumed_out.strip().splitlines()[-1] == final_full
    # Only restarts 2..5 were recomputed after the two surviving checkpoints.
    assert sum("search_checkpoint/1" in l for l in torn.read_text().splitlines()) == 6

    # A checkpoint for different flags is unresumable.
    proc = subprocess.run([CLI, *SEARCH_ARGS[:-1], "7", "--checkpoint", str(torn)],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert "unresumable" in proc.stderr


def test_finished_checkpoint_is_idempotent(tmp_path):
    ck = tmp_path / "done.ck"
    first = run(*SEARCH_ARGS, "--checkpoint", str(ck))
    again = run(*SEARCH_ARGS, "--checkpoint", str(ck))
    assert again.strip() == first.strip().splitlines()[-1]


def test_exhaustive_search_final_record():
    out = run("search", "--objective", "max-rainbow", "--eq", "1,1,2", "--cyclic", "-n", "6",
              "--mode", "exhaustive")
    final = json.loads(out.strip().splitlines()[-1])
    assert final["record"] == "search_final/1"
    assert final["best_value"] == 24
    assert final["complete"] is True

    proc = subprocess.run([CLI, "search", "--objective", "max-rainbow", "--eq", "1,1,2",
                           "--cyclic", "-n", "18", "--mode", "exhaustive"],
                          capture_output=True, text=True)
    assert proc.returncode == 2  # guard without --allow-large

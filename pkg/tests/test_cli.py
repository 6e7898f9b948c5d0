import json
import os
import subprocess
import sys
from pathlib import Path

SRC = Path(__file__).resolve().parents[1] / "src"


def run_cli(*args, binary=False):
    env = os.environ.copy()
    env["PYTHONPATH"] = str(SRC) + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run(
        [sys.executable, "-m", "paircodes", *args],
        capture_output=True,
        text=not binary,
        env=env,
    )


def test_table_tsv_exact_bytes():
    proc = run_cli("table", "--p", "2", "--e", "1", "--m", "1", "--format", "tsv")
    assert proc.returncode == 0
    assert proc.stdout == (
        "i\tdimension\td_hamming\td_pair\tbranch\tmds_pair\n"
        "0\t2\t1\t2\ti+2\ttrue\n"
        "1\t1\t2\t2\tn=2\tfalse\n"
        "2\t0\t0\t0\t0\tfalse\n"
    )


def test_table_json_columns():
    proc = run_cli("table", "--p", "3", "--e", "2", "--m", "1", "--format", "json")
    assert proc.returncode == 0
    records = json.loads(proc.stdout)
    assert [r["d_pair"] for r in records] == [2, 3, 4, 4, 6, 6, 6, 9, 9, 0]
    assert [r["d_hamming"] for r in records] == [1, 2, 2, 2, 3, 3, 3, 6, 9, 0]
    proc = run_cli("table", "--p", "5", "--e", "1", "--m", "1", "--format", "json")
    assert [r["d_pair"] for r in json.loads(proc.stdout)] == [2, 3, 4, 5, 5, 0]


def test_table_rejects_bad_parameters():
    proc = run_cli("table", "--p", "4", "--e", "2", "--m", "1")
    assert proc.returncode == 2
    proc = run_cli("table", "--p", "3", "--e", "0", "--m", "1")
    assert proc.returncode == 2


def test_tsv_has_no_trailing_whitespace_and_lf_endings():
    proc = run_cli(
        "verify", "--p", "2", "--e", "2", "--m", "1", "--format", "tsv", binary=True
    )
    assert proc.returncode == 0
    data = proc.stdout
    assert b"\r" not in data
    for line in data.decode().splitlines():
        assert line == line.rstrip()


def test_verify_all_match_exit_zero():
    proc = run_cli("verify", "--p", "3", "--e", "2", "--m", "1", "--format", "json")
    assert proc.returncode == 0
    records = json.loads(proc.stdout)
    assert len(records) == 10
    assert all(r["status"] == "match" for r in records)
    assert all(r["oracle_d_pair"] == r["formula_d_pair"] for r in records)


def test_verify_extension_field_exit_zero():
    proc = run_cli("verify", "--p", "2", "--e", "2", "--m", "2")
    assert proc.returncode == 0


def test_verify_budget_exit_three():
    proc = run_cli(
        "verify", "--p", "7", "--e", "3", "--m", "2",
        "--max-enum", "1000", "--format", "json",
    )
    assert proc.returncode == 3
    records = json.loads(proc.stdout)
    statuses = {r["status"] for r in records}
    assert statuses == {"match", "skipped"}
    skipped = [r for r in records if r["status"] == "skipped"]
    assert all(r["oracle_d_pair"] is None and r["witness"] is None for r in skipped)


def test_verify_byte_deterministic():
    runs = [
        run_cli("verify", "--p", "3", "--e", "2", "--m", "1", "--format", "json", binary=True)
        for _ in range(2)
    ]
    jobs = [
        run_cli(
            "verify", "--p", "3", "--e", "2", "--m", "1",
            "--format", "json", "--jobs", "4", binary=True,
        )
        for _ in range(2)
    ]
    assert runs[0].stdout == runs[1].stdout
    assert jobs[0].stdout == jobs[1].stdout
    assert runs[0].stdout == jobs[0].stdout


def test_weight_examples():
    proc = run_cli(
        "weight", "--p", "3", "--m", "1",
        "--vector", "2,1,0,0,0,0,0,0,0", "--format", "json",
    )
    assert proc.returncode == 0
    rec = json.loads(proc.stdout)[0]
    assert rec["hamming_weight"] == 2
    assert rec["pair_weight"] == 3
    assert rec["pair_read"].startswith("(2,1),(1,0),(0,0)")

    proc = run_cli("weight", "--p", "2", "--m", "1", "--vector", "1,0,1,0,0", "--format", "json")
    rec = json.loads(proc.stdout)[0]
    assert rec["hamming_weight"] == 2 and rec["pair_weight"] == 4

    proc = run_cli("weight", "--p", "2", "--m", "1", "--vector", "0,0,0", "--format", "json")
    rec = json.loads(proc.stdout)[0]
    assert rec["hamming_weight"] == 0 and rec["pair_weight"] == 0


def test_weight_input_errors():
    assert run_cli("weight", "--p", "3", "--m", "1", "--vector", "1,4,0").returncode == 2
    assert run_cli("weight", "--p", "3", "--m", "1", "--vector", "1,x,0").returncode == 2
    assert run_cli("weight", "--p", "3", "--m", "1", "--vector", "1").returncode == 2


def test_weight_with_modulus_override():
    proc = run_cli(
        "weight", "--p", "2", "--m", "3", "--modulus", "1,1,0,1",
        "--vector", "5,0,3", "--format", "json",
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)[0]["hamming_weight"] == 2
    # (x+1)^2 is reducible: rejected
    proc = run_cli(
        "weight", "--p", "2", "--m", "2", "--modulus", "1,0,1", "--vector", "1,0"
    )
    assert proc.returncode == 2


def test_pairdist_examples():
    proc = run_cli(
        "pairdist", "--p", "2", "--m", "1",
        "--x", "1,0,1,0,0", "--y", "0,0,0,0,0", "--format", "json",
    )
    assert proc.returncode == 0
    rec = json.loads(proc.stdout)[0]
    assert (rec["d_hamming"], rec["block_count"], rec["d_pair"]) == (2, 2, 4)
    assert rec["identity"] == "ok"

    proc = run_cli(
        "pairdist", "--p", "2", "--m", "1",
        "--x", "1,0,0,0,1", "--y", "0,0,0,0,0", "--format", "json",
    )
    rec = json.loads(proc.stdout)[0]
    assert (rec["d_hamming"], rec["block_count"], rec["d_pair"]) == (2, 1, 3)

    proc = run_cli(
        "pairdist", "--p", "3", "--m", "1", "--x", "1,2,0", "--y", "1,2,0",
        "--format", "json",
    )
    rec = json.loads(proc.stdout)[0]
    assert rec["d_hamming"] == 0 and rec["d_pair"] == 0
    assert rec["identity"] == "n/a"


def test_pairdist_length_mismatch():
    proc = run_cli("pairdist", "--p", "2", "--m", "1", "--x", "1,0", "--y", "1,0,0")
    assert proc.returncode == 2


def test_mds_sets():
    proc = run_cli("mds", "--p", "5", "--e", "1", "--m", "1", "--format", "json")
    assert [r["i"] for r in json.loads(proc.stdout)] == [0, 1, 2, 3]
    proc = run_cli("mds", "--p", "3", "--e", "2", "--m", "1", "--format", "json")
    assert [r["i"] for r in json.loads(proc.stdout)] == [0, 1, 2, 4, 7]
    proc = run_cli("mds", "--p", "2", "--e", "3", "--m", "1", "--format", "json")
    assert [r["i"] for r in json.loads(proc.stdout)] == [0, 1, 2, 6]


def test_simulate_guaranteed_regime():
    proc = run_cli(
        "simulate", "--p", "3", "--e", "2", "--m", "1", "--i", "4",
        "--t", "2", "--trials", "20", "--seed", "7", "--format", "json",
    )
    assert proc.returncode == 0
    rec = json.loads(proc.stdout)[0]
    assert rec["d_pair"] == 6
    assert rec["max_guaranteed_t"] == 2
    assert rec["success_rate"] == 1.0

    proc = run_cli(
        "simulate", "--p", "2", "--e", "2", "--m", "1", "--i", "1",
        "--t", "1", "--trials", "20", "--seed", "1", "--format", "json",
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)[0]["success_rate"] == 1.0

    proc = run_cli(
        "simulate", "--p", "2", "--e", "2", "--m", "1", "--i", "1",
        "--t", "0", "--trials", "10", "--seed", "2", "--format", "json",
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)[0]["success_rate"] == 1.0


def test_simulate_requires_seed():
    proc = run_cli(
        "simulate", "--p", "3", "--e", "2", "--m", "1", "--i", "4",
        "--t", "2", "--trials", "10",
    )
    assert proc.returncode == 2


def test_simulate_deterministic():
    args = (
        "simulate", "--p", "3", "--e", "2", "--m", "1", "--i", "4",
        "--t", "2", "--trials", "20", "--seed", "7", "--format", "tsv",
    )
    assert run_cli(*args, binary=True).stdout == run_cli(*args, binary=True).stdout


def test_jobs_flag_validation():
    proc = run_cli("table", "--p", "2", "--e", "1", "--m", "1", "--jobs", "0")
    assert proc.returncode == 2

"""End-to-end tests for the weylgrowth command line tool.

The binary path comes from WEYLGROWTH_CLI; test data dir from
WEYLGROWTH_DATA.
"""

import json
import os
import subprocess

import pytest

CLI = os.environ["WEYLGROWTH_CLI"]
DATA = os.environ["WEYLGROWTH_DATA"]

H48_SERIES = [
    1, 6, 20, 52, 117, 237, 445, 791, 1347, 2216, 3550, 5568, 8582, 13044,
    19604, 29189, 43129, 63332, 92518, 134572, 195052, 281882, 406361,
    584620, 839655, 1204232,
]


def run(*args, env=None, check=True):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    proc = subprocess.run(
        [CLI, *args], capture_output=True, text=True, env=full_env
    )
    if check and proc.returncode != 0:
        raise AssertionError(
            f"exit {proc.returncode}\nstdout: {proc.stdout}\nstderr: {proc.stderr}"
        )
    return proc


def records(stdout):
    return [json.loads(line) for line in stdout.splitlines() if line.strip()]


def test_growth_h48_reproduces_the_table():
    proc = run("growth", "--algebra", "H48", "--order", "25",
               "--format", "records")
    recs = records(proc.stdout)
    levels = [r for r in recs if r.get("event") == "level"]
    assert [r["coefficient"] for r in levels] == H48_SERIES
    summary = recs[-1]
    assert summary["event"] == "summary"
    assert summary["series"] == H48_SERIES
    assert summary["complete"] is False


def test_output_is_identical_across_worker_counts():
    outs = []
    for workers in ("1", "3"):
        for cmd in (
            ["growth", "--algebra", "H48", "--order", "10"],
            ["cosets", "--algebra", "H48", "--J", "1,2,3,4", "--order", "10"],
        ):
            proc = run(*cmd, "--workers", workers, "--format", "records")
            outs.append(proc.stdout)
    assert outs[0] == outs[2]
    assert outs[1] == outs[3]


def test_cosets_listing_counts():
    proc = run("cosets", "--algebra", "H48", "--J", "1,2,3,4",
               "--order", "6", "--format", "csv")
    rows = proc.stdout.splitlines()
    assert rows[0] == "level,coefficient,frontier"
    assert [int(r.split(",")[1]) for r in rows[1:]] == [1, 2, 3, 7, 12, 19, 32]


def test_classify_file_and_builtins():
    proc = run("classify", "--file", os.path.join(DATA, "a2.json"))
    assert "class: Finite" in proc.stdout
    proc = run("classify", "--algebra", "affine:D4", "--format", "records")
    rec = records(proc.stdout)[0]
    assert rec["class"] == "Affine"
    assert rec["determinant"] == 0
    proc = run("classify", "--algebra", "H48", "--format", "records")
    rec = records(proc.stdout)[0]
    assert rec["class"] == "Indefinite"
    assert rec["hyperbolic"] is True


def test_usage_errors_exit_1():
    proc = run("classify", "--algebra", "H3", check=False)
    assert proc.returncode == 1
    assert "no built-in matrix" in proc.stderr
    proc = run("classify", "--file", "/no/such.json", check=False)
    assert proc.returncode == 1
    proc = run("growth", "--algebra", "A2", check=False)  # missing --order
    assert proc.returncode != 0


def test_poincare_plain_and_records():
    proc = run("poincare", "--type", "A4")
    assert "coefficients: 1, 4, 9, 15, 20, 22, 20, 15, 9, 4, 1" in proc.stdout
    proc = run("poincare", "--type", "affine:D4", "--order", "6",
               "--format", "records")
    rec = records(proc.stdout)[0]
    assert rec["coefficients"] == [1, 5, 14, 32, 63, 110, 179]


def test_fit_and_search():
    proc = run("fit", "--algebra", "H48", "--type", "B5", "--order", "25",
               "--format", "records")
    rec = records(proc.stdout)[0]
    assert rec["status"] == "fit"
    assert rec["observed_degree"] == 24
    assert rec["positive_roots"] == 25
    assert rec["q"][:4] == [1, -1, 0, -2]

    proc = run("search", "--algebra", "H48", "--order", "25",
               "--max-rank", "5", "--format", "records")
    recs = records(proc.stdout)
    assert {r["g"] for r in recs} == {"B5", "C5"}


def test_fit_from_series_file(tmp_path):
    series = tmp_path / "growth.txt"
    series.write_text("1, 3, 5, 7, 9, 12, 16, 21\n")
    proc = run("fit", "--series-file", str(series), "--type", "G2",
               "--format", "records")
    rec = records(proc.stdout)[0]
    assert rec["status"] == "fit"
    assert rec["q"] == [1, -1, 0, 0, 0, -1]


def test_verify_catalog_statuses_and_exit_codes(tmp_path):
    proc = run("verify-catalog", "--entry", "48", "--entry", "7",
               "--format", "records")
    recs = records(proc.stdout)
    by_id = {r["id"]: r for r in recs}
    assert by_id[48]["status"] == "Verified"
    assert by_id[7]["status"] == "MatrixUnavailable"

    proc = run("verify-catalog", "--entry", "24",
               "--file", os.path.join(DATA, "rank3_external.json"),
               "--format", "records")
    assert records(proc.stdout)[0]["status"] == "Verified"

    # a hyperbolic matrix attached to the wrong entry must mismatch (exit 2)
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps(
        [{"id": 1, "rank": 3, "cartan": [[2, -2, 0], [-2, 2, -1], [0, -1, 2]]}]
    ))
    proc = run("verify-catalog", "--entry", "1", "--file", str(wrong),
               check=False)
    assert proc.returncode == 2
    assert "Mismatch" in proc.stdout


def test_checkpoint_stream(tmp_path):
    path = tmp_path / "levels.jsonl"
    run("growth", "--algebra", "A3", "--order", "6",
        "--checkpoint", str(path))
    lines = [json.loads(l) for l in path.read_text().splitlines()]
    assert [l["level"] for l in lines] == list(range(7))
    assert all("elapsed" in l and "frontier" in l for l in lines)


def test_memory_budget_env_var():
    proc = run("growth", "--algebra", "H48", "--order", "20",
               "--format", "records", env={"WEYLGROWTH_MAX_BYTES": "4000"})
    summary = records(proc.stdout)[-1]
    assert summary["budget_exceeded"] is True
    assert len(summary["series"]) < 21


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))

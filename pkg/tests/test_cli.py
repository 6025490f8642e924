"""Command-line interface: subcommands, exit codes, stream protocol."""

import subprocess
import sys
from pathlib import Path

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

G1 = str(DATA / "g1.txt")
G1_PAIRS = str(DATA / "g1_pairs.txt")
G2 = str(DATA / "g2.txt")
G2_PAIRS = str(DATA / "g2_pairs.txt")
G2_PAIR14 = str(DATA / "g2_pair14.txt")
K2 = str(DATA / "k2.txt")
K2_PAIRS = str(DATA / "k2_pairs.txt")


def run_cli(*args, stdin=""):
    return subprocess.run(
        [sys.executable, "-m", "bptol.cli", *args],
        input=stdin,
        capture_output=True,
        text=True,
        timeout=120,
    )


def test_validate_accepts_good_graph():
    r = run_cli("validate", G1)
    assert r.returncode == 0
    assert "valid" in r.stdout


def test_validate_rejects_duplicate_capacity():
    r = run_cli("validate", str(DATA / "dup_cap.txt"))
    assert r.returncode == 1
    assert "capacity" in (r.stdout + r.stderr)


def test_validate_break_ties_allows_duplicates():
    r = run_cli("validate", "--break-ties", str(DATA / "dup_cap.txt"))
    assert r.returncode == 0


def test_validate_missing_file_is_usage_error():
    r = run_cli("validate", str(DATA / "no_such_file.txt"))
    assert r.returncode == 2


def test_validate_rejects_malformed_graph():
    r = run_cli("validate", str(DATA / "bad_tokens.txt"))
    assert r.returncode == 1
    assert "line 3" in (r.stdout + r.stderr)


def test_serve_endpoint_form():
    r = run_cli("serve", G1, G1_PAIRS, stdin="2 3\n")
    assert r.returncode == 0
    assert r.stdout == "1 1 3 2 inf\n\n"


def test_serve_edge_form():
    r = run_cli("serve", G2, G2_PAIR14, stdin="edge 5\n")
    assert r.returncode == 0
    assert r.stdout == "1 1 4 inf 4\n\n"


def test_serve_unknown_edge_continues_session():
    r = run_cli("serve", G1, G1_PAIRS, stdin="9 9\nedge 2\n")
    assert r.returncode == 0
    assert r.stdout == "error unknown-edge\n1 1 3 2 inf\n\n"


def test_serve_malformed_request():
    r = run_cli("serve", G1, G1_PAIRS, stdin="edge two\n1 2 3\n")
    assert r.returncode == 0
    assert r.stdout.count("error unknown-edge") == 2


def test_serve_empty_session():
    r = run_cli("serve", G1, G1_PAIRS, stdin="")
    assert r.returncode == 0
    assert r.stdout == ""


def test_all_matches_golden_files():
    for graph, pairs, golden in (
        (G1, G1_PAIRS, "g1_all.txt"),
        (G2, G2_PAIRS, "g2_all.txt"),
    ):
        r = run_cli("all", graph, pairs)
        assert r.returncode == 0
        assert r.stdout == (GOLDEN / golden).read_text()


def test_all_is_deterministic_across_runs():
    first = run_cli("all", G2, G2_PAIRS)
    second = run_cli("all", G2, G2_PAIRS)
    assert first.stdout == second.stdout
    assert first.returncode == second.returncode == 0


def test_all_bridge_case():
    r = run_cli("all", K2, K2_PAIRS)
    assert r.returncode == 0
    assert r.stdout == "2 1 1\n1 1 2 inf inf\n"


def test_all_with_no_pairs_emits_header_only():
    r = run_cli("all", G1, str(DATA / "no_pairs.txt"))
    assert r.returncode == 0
    assert r.stdout == "3 3 0\n"


def test_serve_agrees_with_all_record_for_record():
    dump = run_cli("all", G2, G2_PAIRS).stdout.splitlines()
    n, m, k = map(int, dump[0].split())
    records = dump[1:]
    stdin = "".join(f"edge {e}\n" for e in range(1, m + 1))
    r = run_cli("serve", G2, G2_PAIRS, stdin=stdin)
    assert r.returncode == 0
    served = [line for line in r.stdout.splitlines() if line]
    assert served == records


def test_verify_small_run_passes():
    r = run_cli("verify", "--max-n", "5", "--instances", "25", "--seed", "7")
    assert r.returncode == 0, r.stdout + r.stderr
    assert "result PASS" in r.stdout


def test_verify_single_edge_family():
    r = run_cli("verify", "2", "10", "3")
    assert r.returncode == 0
    assert "result PASS" in r.stdout


def test_bench_degenerate_run():
    r = run_cli("bench", "2", "1", "1", "1", "7")
    assert r.returncode == 0
    keys = {line.split()[0] for line in r.stdout.splitlines()}
    assert {"n", "m", "k", "queries", "preprocess_seconds",
            "query_mean_seconds"} <= keys


def test_bench_small_graph_timings():
    r = run_cli("bench", "100", "200", "1", "1000", "7")
    assert r.returncode == 0
    values = dict(line.split() for line in r.stdout.splitlines())
    assert float(values["preprocess_seconds"]) < 1.0


def test_bench_infeasible_size_is_usage_error():
    r = run_cli("bench", "10", "200", "1", "1", "7")
    assert r.returncode == 2


def test_unknown_subcommand_is_usage_error():
    r = run_cli("frobnicate")
    assert r.returncode == 2

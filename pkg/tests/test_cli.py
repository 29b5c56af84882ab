"""Command-line interface, exercised through subprocess like a user would."""

import csv
import io
import json
import subprocess
import sys

import pytest

CMD = [sys.executable, "-m", "deltafock"]


def run_cli(*args, check=False):
    result = subprocess.run(
        CMD + list(args), capture_output=True, text=True, timeout=300
    )
    if check and result.returncode != 0:
        raise AssertionError(
            f"command failed ({result.returncode}): {result.stderr}"
        )
    return result


def parse_csv(text):
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    return list(csv.reader(io.StringIO("\n".join(lines))))


def test_hermite_known_row():
    result = run_cli("hermite", "--smax", "2", "--index", "2", check=True)
    rows = parse_csv(result.stdout)
    assert rows[0] == ["power", "rec_num", "rec_den", "closed_num",
                       "closed_den", "classical"]
    assert rows[-1] == ["2", "2", "1", "2", "1", "4"]


def test_hermite_index_zero():
    result = run_cli("hermite", "--smax", "5", "--index", "0", check=True)
    rows = parse_csv(result.stdout)
    assert rows[1:] == [["0", "1", "1", "1", "1", "1"]]


def test_hermite_out_of_range_is_usage_error():
    result = run_cli("hermite", "--smax", "1", "--index", "2")
    assert result.returncode == 2
    assert "error" in result.stderr


def test_hermite_json_schema():
    result = run_cli("hermite", "--smax", "3", "--index", "2",
                     "--format", "json", check=True)
    payload = json.loads(result.stdout)
    assert payload["command"] == "hermite"
    assert payload["params"] == {"s_max": 3, "delta_sq": "1/3"}
    row = payload["data"][2]
    assert row["power"] == 2
    assert row["rec"] == {"num": "8", "den": "3"}
    assert row["classical"] == {"num": "4", "den": "1"}


def test_gram_smax1_exact():
    result = run_cli("gram", "--smax", "1", "--method", "exact", check=True)
    assert result.stdout.startswith("# scale=sqrt(s_max/pi)\n")
    rows = parse_csv(result.stdout)
    table = {(r[0], r[1]): r[2:] for r in rows[1:]}
    assert table[("0", "0")] == ["1", "2", "1"]
    assert table[("1", "1")] == ["1", "1", "1"]
    assert table[("0", "1")] == ["0", "1", "1"]
    assert table[("1", "0")] == ["0", "1", "1"]


@pytest.mark.parametrize("s_max", [1, 2, 4, 6])
def test_gram_both_all_match(s_max):
    result = run_cli("gram", "--smax", str(s_max), "--method", "both", check=True)
    rows = parse_csv(result.stdout)
    assert rows[0][-1] == "match"
    assert all(r[-1] == "true" for r in rows[1:])


def test_gram_irrational_entry_has_radicand():
    result = run_cli("gram", "--smax", "2", "--method", "exact", check=True)
    rows = parse_csv(result.stdout)
    table = {(r[0], r[1]): r[2:] for r in rows[1:]}
    assert table[("0", "2")] == ["1", "24", "6"]


def test_gram_unknown_method_is_usage_error():
    result = run_cli("gram", "--smax", "2", "--method", "bogus")
    assert result.returncode == 2


def test_verify_algebra():
    result = run_cli("verify", "--smax", "3", "--suite", "algebra", check=True)
    assert "exact-pass" in result.stdout
    assert "fail" not in result.stdout.replace("exact-pass", "")


def test_verify_fock_smax1_truncation_line():
    result = run_cli("verify", "--smax", "1", "--suite", "fock", check=True)
    assert "state past the top equals the state two below" in result.stdout


def test_verify_all_exit_zero():
    result = run_cli("verify", "--smax", "4", "--suite", "all")
    assert result.returncode == 0


def test_verify_json():
    result = run_cli("verify", "--smax", "2", "--suite", "limits",
                     "--format", "json", check=True)
    payload = json.loads(result.stdout)
    statuses = {c["status"] for s in payload["data"] for c in s["checks"]}
    assert statuses <= {"exact-pass", "pass", "reported"}


def test_states_csv(tmp_path):
    out = tmp_path / "states.csv"
    run_cli("states", "--smax", "2", "--samples", "33",
            "--out", str(out), check=True)
    text = out.read_text()
    assert text.startswith("#")
    rows = parse_csv(text)
    assert rows[0] == ["phi", "f_0", "f_1", "f_2"]
    assert len(rows) == 1 + 33
    mid = rows[1 + 16]  # phi = 0 at the center of an odd sample count
    assert float(mid[0]) == 0.0
    assert float(mid[1]) == pytest.approx(0.7511, abs=5e-5)
    assert float(mid[2]) == 0.0


def test_states_rejects_tiny_sample_count():
    result = run_cli("states", "--smax", "2", "--samples", "8")
    assert result.returncode == 2


def test_states_byte_stable(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run_cli("states", "--smax", "3", "--samples", "17", "--out", str(a), check=True)
    run_cli("states", "--smax", "3", "--samples", "17", "--out", str(b), check=True)
    assert a.read_bytes() == b.read_bytes()


def test_limit_gaussian_decreasing():
    result = run_cli("limit", "--quantity", "gaussian",
                     "--smax-list", "4", "16", "64", check=True)
    rows = parse_csv(result.stdout)
    values = [float(r[1]) for r in rows[1:]]
    assert values[0] > values[1] > values[2]


def test_limit_vacuum_norm_approaches_one():
    result = run_cli("limit", "--quantity", "vacuum_norm",
                     "--smax-list", "8", "32", "128", check=True)
    rows = parse_csv(result.stdout)
    values = [float(r[1]) for r in rows[1:]]
    assert abs(values[-1] - 1.0) < abs(values[0] - 1.0)
    assert abs(values[-1] - 1.0) < 1 / 128


def test_limit_hermite_index_one_zero_column():
    result = run_cli("limit", "--quantity", "hermite", "--index", "1",
                     "--smax-list", "1", "2", "10", check=True)
    rows = parse_csv(result.stdout)
    assert all(float(r[1]) == 0.0 for r in rows[1:])


def test_limit_unknown_quantity_is_usage_error():
    result = run_cli("limit", "--quantity", "nope", "--smax-list", "4")
    assert result.returncode == 2


def test_missing_subcommand_is_usage_error():
    result = run_cli()
    assert result.returncode == 2

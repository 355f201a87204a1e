import csv
import io
import json

import pytest
from click.testing import CliRunner

from qcdist.cli import cli, parse_grid
from qcdist.errors import UsageError


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args, env=None):
        return runner.invoke(cli, list(args), env=env)
    return invoke


def test_eval_values(run):
    r = run("eval", "mu", "0.70710678118654757")
    assert r.exit_code == 0 and float(r.output) == pytest.approx(1.5707963267949)
    r = run("eval", "eta", "2", "2", "1")
    assert float(r.output) == pytest.approx(32.9705627485, rel=1e-10)
    r = run("eval", "eta", "2", "3", "1")
    assert r.exit_code == 0 and "bound-only" in r.output
    r = run("eval", "rho", "0,0", "0.5,0")
    assert float(r.output) == pytest.approx(1.09861228867)
    r = run("eval", "mycor", "20", "3")
    assert r.exit_code == 0 and "not applicable" in r.output


@pytest.mark.parametrize("args", [
    ("eval", "mu", "1.5"),
    ("eval", "mu", "abc"),
    ("eval", "nope", "1"),
    ("eval", "phi_K", "2"),
    ("eval", "tau_n", "2.5", "1"),
    ("eval", "rho", "0,0", "0,0,0"),
    ("table", "c1", "--K", "5:1:10"),
    ("table", "c1", "--K", "1:2"),
    ("scan-conjecture", "--t", "0.5:1.5:3"),
])
def test_usage_and_domain_errors_exit_2(run, args):
    r = run(*args)
    assert r.exit_code == 2, r.output


def test_unknown_command_exit_2(run):
    assert run("frobnicate").exit_code == 2


def test_verify_passes(run):
    r = run("verify", "--suite", "mn-lemma", "--suite", "elliptic", "--points", "10")
    assert r.exit_code == 0
    assert "0 failed" in r.output


def test_verify_json(run):
    r = run("verify", "--suite", "mn-lemma", "--format", "json", "--points", "5")
    assert r.exit_code == 0
    lines = [json.loads(x) for x in r.stdout.splitlines()]
    assert lines and all(set(d) >= {"check_id", "lhs", "rhs", "margin", "pass", "suite"} for d in lines)


def test_verify_failures_only(run):
    r = run("verify", "--suite", "rings", "--failures-only", "--points", "5")
    assert r.exit_code == 0
    assert r.output.strip().startswith("#")


def test_table_c1_csv(run):
    r = run("table", "c1", "--K", "1.01:5:7")
    assert r.exit_code == 0
    rows = list(csv.DictReader(io.StringIO(r.output)))
    assert len(rows) == 7
    for row in rows:
        assert float(row["c1_lower"]) < float(row["c1"]) < float(row["c1_upper"])


def test_table_bounds_json(run):
    r = run("table", "bounds", "--K", "1:20:5", "--format", "json", "--n", "3")
    assert r.exit_code == 0
    rows = [json.loads(x) for x in r.output.splitlines()]
    assert rows[-1]["mycor_bound"] == "inf"


def test_table_mn_lemma(run):
    r = run("table", "mn-lemma")
    rows = list(csv.DictReader(io.StringIO(r.output)))
    assert len(rows) == 37 and float(rows[36]["a_k"]) > 17


def test_table_output_file(run, tmp_path):
    out = tmp_path / "c1.csv"
    r = run("table", "c1", "--K", "1.1:2:3", "-o", str(out))
    assert r.exit_code == 0 and out.read_text().startswith("K,c1")


def test_mn_lemma_command(run):
    r = run("mn-lemma")
    assert r.exit_code == 0
    assert "a_36        17.0235" in r.output
    assert run("mn-lemma", "--max-steps", "3").exit_code == 1


def test_scan_conjecture(run):
    r = run("scan-conjecture", "--K", "1:2:3", "--t", "0.2:0.8:3", "--r", "0.1:0.9:5")
    assert r.exit_code == 0
    recs = [json.loads(x) for x in r.stdout.splitlines()]
    assert len(recs) == 3 * 4 * 5
    assert sum(1 for d in recs if d["pass"] is not None) == 15
    assert "min exploratory margin" in r.stderr


def test_thread_count_does_not_change_output(run):
    args = ("table", "bounds", "--K", "1:10:19")
    serial = run(*args, env={"QCDIST_THREADS": "1"}).output
    threaded = run(*args, env={"QCDIST_THREADS": "4"}).output
    assert serial == threaded


def test_parse_grid():
    assert parse_grid("K", "2.5") == [2.5]
    assert parse_grid("K", "1:3:3") == [1.0, 2.0, 3.0]
    assert parse_grid("K", "1:100:3", "log") == pytest.approx([1, 10, 100])
    with pytest.raises(UsageError):
        parse_grid("K", "1:3:1")
    with pytest.raises(UsageError):
        parse_grid("K", "a:b:c")

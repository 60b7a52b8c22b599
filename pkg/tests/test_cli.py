import json

import pytest

from boxball.main import run

from conftest import EXAMPLE_STATE
from test_automata import FIGURE


@pytest.fixture
def cli(tmp_path, capsys):
    config = str(tmp_path / "config.yaml")

    def invoke(*argv):
        code = run(["-c", config, *argv])
        out, err = capsys.readouterr()
        return code, out, err

    return invoke


def test_simulate_figure(cli):
    code, out, _ = cli("simulate", "--bbs", FIGURE[0], "--steps", "3", "--window", "0:19")
    assert code == 0
    assert out.splitlines() == [f"t={t}:".ljust(7) + row.ljust(20, ".") for t, row in enumerate(FIGURE)]


def test_simulate_periodic_csv(cli):
    code, out, _ = cli("simulate", "--state", "1...", "--steps", "1", "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "t,n,U"
    assert lines[1:5] == ["0,0,1", "0,1,0", "0,2,0", "0,3,0"]
    assert lines[5:9] == ["1,0,0", "1,1,1", "1,2,0", "1,3,0"]


def test_simulate_json(cli):
    code, out, _ = cli("simulate", "--pbbs", EXAMPLE_STATE, "--steps", "1", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"window": [0, 10], "rows": [EXAMPLE_STATE, "...11..1.."]}


def test_simulate_state_file(cli, tmp_path):
    path = tmp_path / "states.txt"
    path.write_text("# two states\n1...\n\n.1..  # trailing comment\n")
    code, out, _ = cli("simulate", "--state-file", str(path), "--steps", "0")
    assert code == 0
    assert out.splitlines() == ["t=0:   1...", "t=0:   .1.."]


def test_analyze_example(cli):
    code, out, _ = cli("analyze", "--state", EXAMPLE_STATE)
    doc = json.loads(out)
    assert code == 0
    assert doc["solitons"] == [1, 2]
    assert doc["c0"] == ["0/1", "3/1"]
    assert [p["segment"] for p in doc["divisor_points"]] == ["gamma+(1)", "theta_1(3)"]


def test_analyze_writes_svg(cli, tmp_path):
    target = tmp_path / "curve.svg"
    code, _, _ = cli("analyze", "--state", EXAMPLE_STATE, "--svg", str(target))
    assert code == 0
    assert target.read_text().lstrip().startswith("<?xml")


def test_verify_periodic_passes(cli):
    code, out, _ = cli("verify", "--state", EXAMPLE_STATE, "--mode", "periodic", "--steps", "10")
    assert code == 0
    assert out.strip() == f"{EXAMPLE_STATE}  periodic: PASS (110 cells)"


def test_verify_both(cli):
    code, out, _ = cli("verify", "--state", EXAMPLE_STATE, "--steps", "8")
    assert code == 0
    assert [line.split("  ")[1].split(":")[0] for line in out.splitlines()] == ["periodic", "limit"]


def test_verify_fails_with_corrupted_c0(cli):
    code, out, _ = cli("verify", "--state", EXAMPLE_STATE, "--mode", "periodic", "--c0-override", "1/2,3")
    assert code == 3
    assert "FAIL" in out


def test_stability_report(cli):
    code, out, _ = cli("stability", "--state", EXAMPLE_STATE, "--m-range", "1:40")
    assert code == 0
    assert "verdict: stable for M > " in out
    assert "limit tau: min[0, -n+2t+1, -n+t+4, -2n+3t+7]" in out


def test_stability_json(cli):
    code, out, _ = cli("stability", "--state", EXAMPLE_STATE, "--m-range", "1:4", "--format", "json")
    report = json.loads(out)[0]
    assert code == 0
    assert report["stable"] is False
    assert [row["M"] for row in report["rows"]] == [1, 2, 3, 4]


def test_overfull_state_is_a_domain_error(cli):
    code, _, err = cli("analyze", "--state", "11..")
    assert code == 1
    assert "overfull" in err


@pytest.mark.parametrize("argv", [
    ("simulate", "--state", "1.x."),
    ("simulate",),
    ("simulate", "--state", "1...", "--window", "5:2"),
    ("analyze", "--bbs", "11"),
    ("analyze", "--state", EXAMPLE_STATE, "--c0-override", "a,b"),
])
def test_usage_errors(cli, argv):
    code, _, err = cli(*argv)
    assert code == 2
    assert "error:" in err

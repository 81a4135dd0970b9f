"""Report serialization and the command-line entry point."""

import json
import math

import numpy as np
import pytest

from zetares import PredictionReport, emit_report
from zetares.cli import main
from zetares.reports import _round15


# ---------------------------------------------------------------------------
# report semantics

def test_compare_two_sided():
    ok = PredictionReport.compare("a", 1.05, 1.0, tolerance=0.10)
    assert ok.passed and ok.ratio == pytest.approx(1.05)
    bad = PredictionReport.compare("b", 1.25, 1.0, tolerance=0.10)
    assert not bad.passed
    low = PredictionReport.compare("c", 0.85, 1.0, tolerance=0.10)
    assert not low.passed
    zero_pred = PredictionReport.compare("d", 1.0, 0.0, tolerance=0.10)
    assert zero_pred.ratio == math.inf and not zero_pred.passed


def test_upper_bound_one_sided():
    ok = PredictionReport.upper_bound("a", 0.5, 1.0)
    assert ok.passed and ok.one_sided
    edge = PredictionReport.upper_bound("b", 1.0, 1.0)
    assert edge.passed                     # equality allowed via slack
    bad = PredictionReport.upper_bound("c", 1.1, 1.0)
    assert not bad.passed
    # pass verdicts are plain bools even from numpy comparisons
    npcase = PredictionReport.upper_bound("d", np.float64(0.5),
                                          np.float64(1.0))
    assert npcase.passed is True


def test_round15_normalizes_scalars():
    doc = _round15({
        "f": np.float64(1.23456789012345678),
        "b": np.bool_(True),
        "i": np.int64(7),
        "c": complex(1.0, -2.0),
        "nested": [np.float64(0.1)],
        "inf": math.inf,
    })
    assert isinstance(doc["b"], bool) and doc["b"] is True
    assert isinstance(doc["i"], int)
    assert doc["c"] == {"re": 1.0, "im": -2.0}
    assert doc["inf"] == math.inf
    json.dumps({k: v for k, v in doc.items() if k != "inf"})


def test_emit_json_roundtrip_identical():
    rep = PredictionReport.compare("x", 1.0000000001, 1.0, 0.01)
    a = emit_report(rep, "json")
    b = emit_report(rep, "json")
    assert a == b
    doc = json.loads(a)
    assert doc["schema_version"] == 1
    check = doc["checks"][0]
    assert check["label"] == "x" and check["pass"] is True


def test_emit_csv_list_and_escaping():
    reps = [PredictionReport.compare('we,ird "label"', 2.0, 1.0, 0.1),
            PredictionReport.upper_bound("plain", 0.1, 1.0)]
    text = emit_report(reps, "csv")
    lines = text.strip().split("\n")
    assert lines[0].startswith("label,")
    assert '"we,ird ""label"""' in lines[1]
    assert len(lines) == 3
    with pytest.raises(ValueError):
        emit_report(reps, "yaml")


# ---------------------------------------------------------------------------
# command line

def test_cli_verify_single_criterion(capsys):
    assert main(["verify", "--only", "5"]) == 0
    out = capsys.readouterr().out
    assert "[PASS] criterion_5" in out


def test_cli_large_run_and_report_roundtrip(tmp_path, capsys):
    out_path = tmp_path / "run.json"
    rc = main(["large", "--mode", "tau_r", "--r", "2", "--M", "50",
               "--t2", "5000", "--out", str(out_path)])
    assert rc == 0
    doc = json.loads(out_path.read_text())
    assert doc["mode"] == "large_tau_r"
    assert doc["all_pass"] is True
    capsys.readouterr()

    assert main(["report", str(out_path), "--format", "csv"]) == 0
    csv_text = capsys.readouterr().out
    assert csv_text.startswith("index,gamma,")

    assert main(["report", str(out_path)]) == 0
    again = json.loads(capsys.readouterr().out)
    assert again["config"]["M"] == 50


def test_cli_small_run_stdout(capsys):
    rc = main(["small", "--t1", "1000", "--t2", "2000", "--format", "json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["mode"] == "small_values"
    assert doc["S2"] == 868.0


def test_cli_config_overrides_flags(tmp_path, capsys):
    conf = tmp_path / "run.conf"
    conf.write_text("M = 30        # shrink\n"
                    "t2 = 3000.0\n"
                    "tolerance = 0.5\n")
    out_path = tmp_path / "o.json"
    rc = main(["--config", str(conf), "large", "--M", "999",
               "--t2", "5000", "--out", str(out_path)])
    assert rc == 0
    doc = json.loads(out_path.read_text())
    assert doc["config"]["M"] == 30
    assert doc["config"]["t2"] == 3000.0
    assert doc["config"]["tolerance"] == 0.5
    capsys.readouterr()


def test_cli_config_window_and_unknown_key(tmp_path, capsys):
    good = tmp_path / "w.conf"
    good.write_text("window = 83,113\nmcap = 9000\n")
    rc = main(["--config", str(good), "small", "--t1", "1000",
               "--t2", "2000", "--mcap", "1"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["config"]["window"] == [83.0, 113.0]

    bad = tmp_path / "b.conf"
    bad.write_text("emm = 30\n")
    assert main(["--config", str(bad), "verify", "--only", "5"]) == 2
    assert "unknown config key" in capsys.readouterr().err


def test_cli_zeros_scan(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("ZETARES_CACHE_DIR", str(tmp_path))
    rc = main(["zeros", "scan", "--from", "0", "--to", "100",
               "--csv", str(tmp_path / "z.csv")])
    assert rc == 0
    out = capsys.readouterr().out
    assert "29 zeros in (2, 100]" in out
    lines = (tmp_path / "z.csv").read_text().strip().split("\n")
    assert lines[0] == "index,gamma"
    assert len(lines) == 30
    assert (tmp_path / "zeros_2_100.zrc").exists()


def test_cli_domain_errors_exit_2(capsys):
    assert main(["small", "--t1", "50", "--t2", "60",
                 "--mcap", "200000"]) == 2
    assert "zetares: error:" in capsys.readouterr().err
    assert main(["report", "/nonexistent/path.json"]) == 2
    capsys.readouterr()


def test_cli_bad_flags_exit_via_argparse():
    with pytest.raises(SystemExit):
        main(["large", "--window", "83"])       # malformed window
    with pytest.raises(SystemExit):
        main(["verify", "--only", "11"])
    with pytest.raises(SystemExit):
        main([])                                # subcommand required

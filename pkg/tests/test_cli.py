import csv
import io
import json
import math
import subprocess
import sys

import jsonschema
import pytest

from qosc import __version__
from qosc.cli import EXIT_INVALID, EXIT_NO_REP, EXIT_OK, build_parser, glue_negative_values, main, parse_real, parse_values
from qosc.report import REPORT_SCHEMA


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_OK, err
    doc = json.loads(out)
    jsonschema.validate(doc, REPORT_SCHEMA)
    return doc


def run_csv(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "csv")
    assert code == EXIT_OK, err
    return list(csv.DictReader(io.StringIO(out)))


def test_classify_fock(capsys):
    doc = run_json(capsys, "classify", "--q", "2", "--alpha", "1", "--nu0", "0", "--B", "1", "--lambda0", "0")
    assert doc["class"]["family"] == "Fock"
    assert doc["tool_version"] == __version__
    assert doc["label"] == {"nu0": 0.0, "B": 1.0, "lambda0": 0.0}
    assert doc["spectrum"]["values"][:4] == [0.0, 2.0, 4.0, 8.5]
    assert doc["tolerances"]["rel_tol"] == 1e-9


def test_classify_without_lambda0_lists_families(capsys):
    doc = run_json(capsys, "classify", "--q", "0.5", "--alpha", "1", "--nu0", "0", "--B", "-1")
    assert [c["family"] for c in doc["classes"]] == ["OneDimensional"]
    assert doc["label"] is None


def test_classify_no_representation(capsys):
    code, out, err = run(capsys, "classify", "--q", "2", "--alpha", "1", "--nu0", "0", "--B", "-2", "--lambda0", "0")
    assert code == EXIT_NO_REP == 2
    assert out == ""
    assert "no representation" in err


def test_classify_suggests_renumbering(capsys):
    # the Fock rep relabelled from Psi_2: its lowest vector sits at n = -2
    code, _, err = run(capsys, "classify", "--q", "2", "--nu0", "2", "--B", "1", "--lambda0", "4")
    assert code == EXIT_NO_REP
    assert "vanishes at n=-2" in err
    assert "hint: try --nu0 0.0 --B 1.0 --lambda0 0.0" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "--q", "1", "--B", "0"],
        ["classify", "--q", "-2", "--B", "0"],
        ["classify", "--q", "2", "--alpha", "0", "--B", "0"],
        ["classify", "--q", "2", "--B", "0", "--lambda0", "-1"],
        ["classify", "--q", "2", "--B", "nan"],
        ["classify", "--B", "0"],
        ["scan", "--q", "2", "--B", "1:0:0"],
        ["spectrum", "--q", "2", "--B", "1", "--range", "3:1"],
        ["matrix", "--q", "2", "--B", "1", "--family", "fock"],
        ["matrix", "--q", "2", "--B", "1", "--family", "nonsense", "--dim", "4"],
        ["limits", "--family", "fock", "--q-path", "0.5,x"],
        ["equiv", "--q", "0.5", "--a", "0,0,1", "--b", "0,-1,0"],
    ],
)
def test_invalid_input_exits_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_INVALID == 1
    assert err


def test_scan_small_q_row(capsys):
    rows = run_csv(capsys, "scan", "--q", "0.5", "--B", "-3,-5/3,-1,0,5/3,3")
    assert [r["families"] for r in rows] == [
        "AntiFock",
        "TwoDimensionalOdd",
        "OneDimensional",
        "Fock+Unbounded",
        "TwoDimensionalEven+Unbounded",
        "none",
    ]
    assert [r["boundary"] for r in rows] == ["false", "true", "true", "false", "true", "false"]


def test_scan_large_q_row(capsys):
    rows = run_csv(capsys, "scan", "--q", "2", "--B", "-2,-1,0")
    assert [r["families"] for r in rows] == ["none", "OneDimensional", "Fock"]


def test_scan_json_matches_csv(capsys):
    doc = run_json(capsys, "scan", "--q", "0.5,2", "--B", "-2:2:5", "--format", "json")
    rows = run_csv(capsys, "scan", "--q", "0.5,2", "--B", "-2:2:5")
    assert len(rows) == 10
    assert len(doc["grid"]["cells"]) == 2 and len(doc["grid"]["cells"][0]) == 5
    flat = ["+".join(c) or "none" for row in doc["grid"]["cells"] for c in row]
    assert flat == [r["families"] for r in rows]


def test_spectrum_csv(capsys):
    rows = run_csv(capsys, "spectrum", "--q", "2", "--nu0", "0", "--B", "1", "--lambda0", "0", "--range", "0:3")
    assert [float(r["lambda"]) for r in rows] == [0.0, 2.0, 4.0, 8.5]
    assert [int(r["n"]) for r in rows] == [0, 1, 2, 3]


def test_spectrum_methods_agree(capsys):
    base = ["spectrum", "--q", "0.5", "--nu0", "0.3", "--B", "-2/3", "--lambda0", "2", "--range", "-6:6"]
    closed = run_json(capsys, *base, "--method", "closed")
    rec = run_json(capsys, *base, "--method", "recurrence")
    for x, y in zip(closed["spectrum"]["values"], rec["spectrum"]["values"]):
        assert x == pytest.approx(y, rel=1e-12, abs=1e-12)


def test_matrix_two_dimensional_odd(capsys):
    doc = run_json(capsys, "matrix", "--q", "0.5", "--B", "-5/3", "--family", "two-dim-odd")
    m = doc["matrices"]
    assert doc["index_offset"] == -1
    assert m["a"][0][1] == pytest.approx(math.sqrt(4 / 3), abs=1e-15)
    assert m["K"][0][0] == pytest.approx(5 / 6) and m["K"][1][1] == pytest.approx(-5 / 6)


def test_verify_fock_dim_32(capsys):
    doc = run_json(capsys, "verify", "--q", "2", "--B", "1", "--family", "fock", "--dim", "32")
    res = doc["residuals"]
    assert res["interior_dim"] == 30
    assert res["rel1_norm"] <= 1e-9 * res["scale"]


def test_equiv(capsys):
    doc = run_json(capsys, "equiv", "--q", "0.5", "--a", "0,0,1", "--b", "1,0,1.5")
    assert doc["equivalent"] is True and doc["shift"] == 1
    doc = run_json(capsys, "equiv", "--q", "0.5", "--a", "0,0,1", "--b", "1,0,1.6")
    assert doc["equivalent"] is False and doc["shift"] is None


def test_limits_anti_fock(capsys):
    rows = run_csv(capsys, "limits", "--family", "anti-fock", "--q-path", "0.5,0.9,0.99,1.5", "--B", "-3")
    assert [r["exists"] for r in rows] == ["true", "false", "false", "false"]


def test_limits_two_dim_odd_tracks_threshold(capsys):
    rows = run_csv(capsys, "limits", "--family", "two-dim-odd", "--q-path", "0.9,0.99,0.999", "--track", "b_star")
    assert all(r["exists"] == "true" for r in rows)
    lam0 = [float(r["lambda0"]) for r in rows]
    assert lam0 == sorted(lam0)
    assert lam0[-1] > 900


def test_limits_fock_survives(capsys):
    rows = run_csv(capsys, "limits", "--family", "fock", "--q-path", "0.5,0.9,0.99", "--B", "0.5")
    assert all(r["exists"] == "true" for r in rows)


def test_csv_round_trips_floats(capsys):
    values = "0.1,0.30000000000000004,1e-300,2.5"
    rows = run_csv(capsys, "scan", "--q", "0.7", "--B", values)
    assert [float(r["B"]) for r in rows] == [float(v) for v in values.split(",")]
    rows = run_csv(capsys, "spectrum", "--q", "0.3", "--nu0", "0.1", "--B", "0.7", "--lambda0", "0.2", "--range", "-5:5")
    doc = run_json(capsys, "spectrum", "--q", "0.3", "--nu0", "0.1", "--B", "0.7", "--lambda0", "0.2", "--range", "-5:5")
    assert [float(r["lambda"]) for r in rows] == doc["spectrum"]["values"]


def test_output_is_deterministic(capsys):
    argv = ["classify", "--q", "0.5", "--nu0", "0.25", "--B", "0.5", "--lambda0", "3"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "classify", "--q", "2", "--B", "1", "--lambda0", "0", "--out", str(target))
    assert code == EXIT_OK and out == ""
    jsonschema.validate(json.loads(target.read_text()), REPORT_SCHEMA)


def test_parse_helpers():
    assert parse_real("-5/3") == pytest.approx(-5 / 3)
    assert parse_real("0.25") == 0.25
    assert parse_values("1,2/3") == [1.0, pytest.approx(2 / 3)]
    assert parse_values("0:1:3") == [0.0, 0.5, 1.0]
    assert parse_values("") == []
    assert glue_negative_values(["classify", "--B", "-5/3"], build_parser()) == ["classify", "--B=-5/3"]


def test_negative_values_on_the_command_line(capsys):
    doc = run_json(capsys, "classify", "--q", "0.5", "--B", "-5/3")
    assert doc["classes"][0]["family"] == "TwoDimensionalOdd"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qosc", "classify", "--q", "2", "--B", "-2", "--lambda0", "0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    proc = subprocess.run([sys.executable, "-m", "qosc", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and __version__ in proc.stdout

import json
import math

import numpy as np
import pytest

from dunkl.cli import main
from dunkl import DunklParams, make_grid, read_csv_function, sample_family, write_csv_function
from dunkl.maximal import centered_maximal
from dunkl.norms import default_radius_grid


def _write_constant_csv(path, value=1.0, half=20.0):
    xs = np.linspace(-half, half, 41)
    path.write_text("".join(f"{float(x)!r},{float(value)!r}\n" for x in xs))


def test_verify_single_suite_and_report(tmp_path, capsys):
    report = tmp_path / "report.json"
    code = main(
        [
            "verify",
            "--suite",
            "measure_lemmas",
            "--grid-n",
            "256",
            "--domain-l",
            "8",
            "--seed",
            "7",
            "--report",
            str(report),
        ]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "[PASS] measure_lemmas" in out
    payload = json.loads(report.read_text())
    assert payload["suite"] == "measure_lemmas"
    assert payload["summary"]["n_failed"] == 0


def test_verify_unknown_suite_exits_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["verify", "--suite", "nosuch"])
    assert err.value.code == 2
    assert "valid suites" in capsys.readouterr().err


def test_verify_list(capsys):
    assert main(["verify", "--list"]) == 0
    out = capsys.readouterr().out
    assert "kernel" in out and "theorem_weakmaxi" in out


def test_verify_determinism_byte_identical(tmp_path):
    args = [
        "verify",
        "--suite",
        "kernel",
        "--grid-n",
        "256",
        "--domain-l",
        "8",
        "--seed",
        "7",
    ]
    r1, r2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(args + ["--report", str(r1)]) == 0
    assert main(args + ["--report", str(r2)]) == 0
    assert r1.read_bytes() == r2.read_bytes()


def test_norm_amalgam_constant_one(tmp_path, capsys):
    csv = tmp_path / "one.csv"
    _write_constant_csv(csv)
    code = main(
        [
            "norm",
            "--which",
            "amalgam",
            "--q",
            "2",
            "--p",
            "inf",
            "--r",
            "1",
            "--kappa",
            "0",
            "--grid-n",
            "2048",
            "--input",
            str(csv),
        ]
    )
    assert code == 0
    captured = capsys.readouterr()
    value = float(captured.out.strip().splitlines()[0])
    assert value == pytest.approx(math.sqrt(0.5), abs=1e-2)
    assert "radius grid" in captured.err


def test_norm_exponent_order_violation_exits_2(tmp_path, capsys):
    csv = tmp_path / "one.csv"
    _write_constant_csv(csv)
    with pytest.raises(SystemExit) as err:
        main(
            [
                "norm",
                "--which",
                "fofana",
                "--q",
                "4",
                "--alpha",
                "2",
                "--p",
                "8",
                "--input",
                str(csv),
            ]
        )
    assert err.value.code == 2


def test_norm_empty_csv_exits_3(tmp_path, capsys):
    csv = tmp_path / "empty.csv"
    csv.write_text("")
    code = main(["norm", "--which", "weak", "--input", str(csv)])
    assert code == 3
    assert "malformed CSV" in capsys.readouterr().err


def test_norm_missing_input_exits_2():
    with pytest.raises(SystemExit) as err:
        main(["norm", "--which", "weak"])
    assert err.value.code == 2


def test_maximal_roundtrip_matches_in_process(tmp_path, capsys):
    p = DunklParams(0.5)
    g = make_grid(p, 16.0, 512)
    f = sample_family("gaussian", [0.5], g)
    src = tmp_path / "f.csv"
    dst = tmp_path / "mf.csv"
    write_csv_function(src, f)
    code = main(
        [
            "maximal",
            "--op",
            "centered",
            "--input",
            str(src),
            "--output",
            str(dst),
            "--kappa",
            "0.5",
            "--grid-n",
            "512",
        ]
    )
    assert code == 0
    back = read_csv_function(dst, g)
    expected = centered_maximal(f, default_radius_grid(g))
    assert np.max(np.abs(back.values - expected.values)) < 1e-12


def test_maximal_missing_input_exits_2():
    with pytest.raises(SystemExit) as err:
        main(["maximal", "--op", "dunkl", "--output", "x.csv"])
    assert err.value.code == 2


def test_maximal_unreadable_input_exits_3(tmp_path, capsys):
    code = main(
        [
            "maximal",
            "--op",
            "interval",
            "--input",
            str(tmp_path / "missing.csv"),
            "--output",
            str(tmp_path / "out.csv"),
        ]
    )
    assert code == 3


def test_sample_writes_family(tmp_path):
    out = tmp_path / "g.csv"
    code = main(
        ["sample", "--family", "gaussian", "--params", "0.5", "--grid-n", "256", "--output", str(out)]
    )
    assert code == 0
    g = make_grid(DunklParams(0.5), 16.0, 256)
    f = read_csv_function(out, g)
    assert f.values[128] == pytest.approx(math.exp(-0.5 * g.nodes[128] ** 2), rel=1e-12)


def test_environment_variable_override(tmp_path, monkeypatch, capsys):
    csv = tmp_path / "one.csv"
    _write_constant_csv(csv)
    monkeypatch.setenv("DUNKL_WHICH", "weak")
    monkeypatch.setenv("DUNKL_INPUT", str(csv))
    monkeypatch.setenv("DUNKL_GRID_N", "512")
    assert main(["norm"]) == 0
    value = float(capsys.readouterr().out.strip().splitlines()[0])
    assert value > 0.0

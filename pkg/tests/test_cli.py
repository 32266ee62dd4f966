"""CLI: golden files for every subcommand, byte determinism, exit codes.

Set WWMTC_REGEN_GOLDEN=1 to rewrite the golden files after an intentional
output change, then review the diff.
"""

import json
import math
import os
from pathlib import Path

import pytest

from wwmtc.cli import dispatch
from wwmtc.fileio import read_curve_csv, read_muscle_spec

from conftest import DATA_DIR, GOLDEN_DIR

REGEN = os.environ.get("WWMTC_REGEN_GOLDEN") == "1"


def check_golden(name: str, produced: bytes) -> None:
    path = GOLDEN_DIR / name
    if REGEN:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(produced)
        return
    assert path.exists(), f"golden file {name} missing; run with WWMTC_REGEN_GOLDEN=1"
    assert produced == path.read_bytes(), f"output differs from golden {name}"


def run(args, capsys) -> tuple[int, str, str]:
    code = dispatch(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- elliptic ------------------------------------------------------------------

def test_elliptic_eval_k_zero(capsys):
    code, out, err = run(["elliptic", "eval", "--kind", "K", "--p", "0"], capsys)
    assert code == 0 and err == ""
    assert out.strip() == format(math.pi / 2, ".15g")
    check_golden("elliptic_eval_K0.txt", out.encode())


def test_elliptic_eval_incomplete(capsys):
    code, out, _ = run(
        ["elliptic", "eval", "--kind", "F", "--phi", "0.7853981633974483", "--p", "0.9"],
        capsys,
    )
    assert code == 0
    assert float(out) == pytest.approx(0.8579401978855108, rel=1e-12)


def test_elliptic_eval_missing_phi(capsys):
    code, _, err = run(["elliptic", "eval", "--kind", "F", "--p", "0.9"], capsys)
    assert code == 2
    assert "--phi" in err


def test_elliptic_eval_spurious_phi(capsys):
    code, _, err = run(
        ["elliptic", "eval", "--kind", "K", "--phi", "0.5", "--p", "0.9"], capsys
    )
    assert code == 2
    assert "--phi" in err


def test_elliptic_eval_bad_modulus(capsys):
    code, _, err = run(["elliptic", "eval", "--kind", "K", "--p", "1.0"], capsys)
    assert code == 2
    assert "modulus" in err


# --- beam ------------------------------------------------------------------------

def test_beam_solve_row_and_json(capsys):
    code, out, _ = run(["beam", "solve", "--L", "27", "--p", "0.85"], capsys)
    assert code == 0
    check_golden("beam_solve.txt", out.encode())

    code, out_json, _ = run(["beam", "solve", "--L", "27", "--p", "0.85", "--json"], capsys)
    assert code == 0
    obj = json.loads(out_json)
    assert obj["w_mm"] == pytest.approx(8.143443230024689, rel=1e-9)
    assert obj["h_mm"] == pytest.approx(25.477469756472694, rel=1e-9)
    assert obj["psi0_deg"] == pytest.approx(math.degrees(obj["psi0_rad"]), rel=1e-12)


def test_beam_solve_domain_error_names_range(capsys):
    code, out, err = run(["beam", "solve", "--L", "27", "--p", "1.2"], capsys)
    assert code == 2 and out == ""
    assert err.startswith("error:") and err.count("\n") == 1
    assert "0.70710" in err  # names the valid range


def test_unknown_flag_rejected(capsys):
    code, _, err = run(["beam", "solve", "--L", "27", "--p", "0.8", "--bogus"], capsys)
    assert code == 2
    assert "bogus" in err


# --- muscle ------------------------------------------------------------------------

def test_muscle_curve_csv(tmp_path, capsys):
    out_csv = tmp_path / "c.csv"
    code, _, err = run(
        ["muscle", "curve", "--spec", str(DATA_DIR / "radial.json"),
         "--samples", "100", "--out", str(out_csv)],
        capsys,
    )
    assert code == 0, err
    text = out_csv.read_text()
    lines = text.strip().split("\n")
    assert lines[0] == "p,width_mm,length_mm,contraction_mm,psi0_deg"
    assert len(lines) == 101  # header + 100 samples
    first = lines[1].split(",")
    assert float(first[0]) == pytest.approx(1 / math.sqrt(2), rel=1e-15)
    assert first[1] == "0"
    assert first[2] == "238"
    check_golden("muscle_curve_radial.csv", out_csv.read_bytes())


def test_muscle_curve_round_trip(tmp_path, capsys):
    # written CSV re-parses to the same states at full printed precision
    out_csv = tmp_path / "c.csv"
    run(["muscle", "curve", "--spec", str(DATA_DIR / "radial.json"),
         "--samples", "25", "--out", str(out_csv)], capsys)
    spec = read_muscle_spec(DATA_DIR / "radial.json")
    reparsed = read_curve_csv(out_csv, spec)
    from wwmtc.muscle import curve

    original = curve(spec, 25)
    for a, b in zip(original.samples, reparsed.samples):
        for field in ("p", "width", "length", "contraction"):
            x, y = getattr(a, field), getattr(b, field)
            assert format(x, ".15g") == format(y, ".15g")
        # the printed column is degrees; the deg->rad->deg conversion may
        # wobble the 15th digit, so compare at printed precision
        assert math.degrees(b.psi0) == pytest.approx(math.degrees(a.psi0), rel=1e-14)


def test_muscle_curve_svg_overlay(tmp_path, capsys):
    svg = tmp_path / "fig.svg"
    code, _, err = run(
        ["muscle", "curve",
         "--spec", str(DATA_DIR / "radial.json"),
         "--spec", str(DATA_DIR / "planar.json"),
         "--samples", "60", "--svg", str(svg)],
        capsys,
    )
    assert code == 0, err
    body = svg.read_text()
    assert body.count("<polyline") == 2
    assert body.count('font-size="12"') == 2  # legend entries, input order
    assert "radial" in body and "planar" in body
    assert "length [mm]" in body and "width [mm]" in body
    check_golden("muscle_curves.svg", svg.read_bytes())


def test_muscle_curve_two_point_svg(tmp_path, capsys):
    svg = tmp_path / "two.svg"
    code, _, _ = run(
        ["muscle", "curve", "--spec", str(DATA_DIR / "radial.json"),
         "--samples", "2", "--svg", str(svg), "--out", str(tmp_path / "c.csv")],
        capsys,
    )
    assert code == 0
    body = svg.read_text()
    assert body.count("<polyline") == 1
    pts = body.split('points="')[1].split('"')[0].split()
    assert len(pts) == 2  # a single segment


def test_unwritable_output_path(tmp_path, capsys):
    code, _, err = run(
        ["muscle", "curve", "--spec", str(DATA_DIR / "radial.json"),
         "--samples", "5", "--out", str(tmp_path / "no_such_dir" / "c.csv")],
        capsys,
    )
    assert code == 2
    assert "cannot write" in err


def test_muscle_curve_csv_needs_single_spec(tmp_path, capsys):
    code, _, err = run(
        ["muscle", "curve", "--spec", str(DATA_DIR / "radial.json"),
         "--spec", str(DATA_DIR / "planar.json"), "--samples", "10",
         "--out", str(tmp_path / "c.csv")],
        capsys,
    )
    assert code == 2
    assert "exactly one" in err


def test_muscle_invert(capsys):
    code, out, _ = run(
        ["muscle", "invert", "--spec", str(DATA_DIR / "radial.json"),
         "--length", "238"],
        capsys,
    )
    assert code == 0
    row = out.strip().split("\n")[1].split(",")
    assert float(row[1]) == 0.0 and float(row[2]) == 238.0
    check_golden("muscle_invert_natural.txt", out.encode())


def test_muscle_invert_out_of_range(capsys):
    code, _, err = run(
        ["muscle", "invert", "--spec", str(DATA_DIR / "radial.json"),
         "--length", "239"],
        capsys,
    )
    assert code == 2
    assert "feasible interval" in err


def test_p_cap_env_override(capsys, monkeypatch):
    monkeypatch.setenv("WWMTC_P_CAP", "0.9")
    code, out, _ = run(
        ["muscle", "curve", "--spec", str(DATA_DIR / "radial.json"), "--samples", "3"],
        capsys,
    )
    assert code == 0
    last_p = float(out.strip().split("\n")[-1].split(",")[0])
    assert last_p == 0.9

    # explicit flag beats the environment
    code, out, _ = run(
        ["muscle", "curve", "--spec", str(DATA_DIR / "radial.json"),
         "--samples", "3", "--p-cap", "0.95"],
        capsys,
    )
    last_p = float(out.strip().split("\n")[-1].split(",")[0])
    assert last_p == 0.95


# --- design ------------------------------------------------------------------------

def test_design_search(tmp_path, capsys):
    out_json = tmp_path / "res.json"
    out_csv = tmp_path / "res.csv"
    code, _, err = run(
        ["design", "search", "--constraints", str(DATA_DIR / "constraints.json"),
         "--out", str(out_json), "--csv", str(out_csv)],
        capsys,
    )
    assert code == 0
    results = json.loads(out_json.read_text())
    assert any(r["spec"]["n"] == 8 and abs(r["spec"]["L_mm"] - 27.0) < 0.1
               for r in results)
    assert "infeasible" in err  # per-n diagnostics on stderr
    check_golden("design_search.json", out_json.read_bytes())
    check_golden("design_search.csv", out_csv.read_bytes())


# --- tendon / winch -------------------------------------------------------------------

def test_tendon_fit(capsys):
    code, out, _ = run(
        ["tendon", "fit", "--data", str(DATA_DIR / "tendon_bench.csv")], capsys
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["a_N"] == pytest.approx(50.0, rel=1e-6)
    assert obj["b"] == pytest.approx(8.0, rel=1e-6)
    assert obj["eps0"] == pytest.approx(0.02, rel=1e-12)
    check_golden("tendon_fit.json", out.encode())


def test_winch_fit(capsys):
    code, out, _ = run(
        ["winch", "fit", "--data", str(DATA_DIR / "winch_bench.csv")], capsys
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["c_N_per_A"] == pytest.approx(20.0, abs=1e-9)
    assert obj["r_N"] == pytest.approx(5.0, abs=1e-9)
    check_golden("winch_fit.json", out.encode())


def test_winch_simulate(tmp_path, capsys):
    out_csv = tmp_path / "sim.csv"
    svg = tmp_path / "loop.svg"
    code, _, err = run(
        ["winch", "simulate", "--params", str(DATA_DIR / "winch_params.json"),
         "--profile", str(DATA_DIR / "triangle_profile.csv"),
         "--out", str(out_csv), "--svg", str(svg)],
        capsys,
    )
    assert code == 0, err
    lines = out_csv.read_text().strip().split("\n")
    assert lines[0] == "time_s,current_A,tension_N"
    # simulated output reproduces the bench tensions (same operator, T0=0)
    bench = (DATA_DIR / "winch_bench.csv").read_text().strip().split("\n")
    assert [ln.split(",")[2] for ln in lines[1:]] == [ln.split(",")[2] for ln in bench[1:]]
    body = svg.read_text()
    assert "current [A]" in body and "tension [N]" in body
    check_golden("winch_simulate.csv", out_csv.read_bytes())
    check_golden("winch_loop.svg", svg.read_bytes())


def test_winch_simulate_loop_closes(tmp_path, capsys):
    out_csv = tmp_path / "sim.csv"
    run(
        ["winch", "simulate", "--params", str(DATA_DIR / "winch_params.json"),
         "--profile", str(DATA_DIR / "triangle_profile.csv"), "--out", str(out_csv)],
        capsys,
    )
    rows = [ln.split(",") for ln in out_csv.read_text().strip().split("\n")[1:]]
    n_per = (len(rows) - 1) // 3
    first, last = rows[-n_per - 1], rows[-1]
    assert first[1] == last[1] and first[2] == last[2]


# --- determinism -------------------------------------------------------------------

def test_byte_identical_reruns(tmp_path, capsys):
    """Two identical invocations produce byte-identical CSV and SVG."""
    paths = []
    for tag in ("one", "two"):
        csv_path = tmp_path / f"curve_{tag}.csv"
        svg_path = tmp_path / f"curve_{tag}.svg"
        code, _, _ = run(
            ["muscle", "curve", "--spec", str(DATA_DIR / "radial.json"),
             "--spec", str(DATA_DIR / "planar.json"),
             "--samples", "80", "--svg", str(svg_path)],
            capsys,
        )
        assert code == 0
        code, _, _ = run(
            ["muscle", "curve", "--spec", str(DATA_DIR / "radial.json"),
             "--samples", "80", "--out", str(csv_path)],
            capsys,
        )
        assert code == 0
        paths.append((csv_path, svg_path))
    assert paths[0][0].read_bytes() == paths[1][0].read_bytes()
    assert paths[0][1].read_bytes() == paths[1][1].read_bytes()


def test_help_exits_zero(capsys):
    assert dispatch(["--help"]) == 0
    capsys.readouterr()

"""File formats: muscle-spec JSON, experiment CSVs, fitted-parameter JSON.

CSV dialect everywhere: comma separator, ``.`` decimal point, mandatory
header row, UTF-8, LF line endings.  Numbers are printed with 15
significant digits so written files are stable, diffable test fixtures.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .actuators import HysteresisParams, TendonFit
from .design import DesignResult
from .errors import DomainError
from .muscle import DeformationCurve, MuscleSpec, MuscleState

CURVE_HEADER = "p,width_mm,length_mm,contraction_mm,psi0_deg"
TENDON_HEADER = "time_s,load_N,strain,cycle"
WINCH_HEADER = "time_s,current_A,tension_N"


def fmt(value: float) -> str:
    """Render a number at the package-wide 15-significant-digit precision."""
    return format(float(value), ".15g")


# ---------------------------------------------------------------------------
# muscle specs and curves
# ---------------------------------------------------------------------------

def read_muscle_spec(path: str | Path) -> MuscleSpec:
    """Load a muscle spec from its JSON file schema."""
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read muscle spec {path}: {exc}") from exc
    try:
        return MuscleSpec(
            n=int(raw["n"]),
            L=float(raw["L_mm"]),
            h0=float(raw["h0_mm"]),
            kind=str(raw.get("kind", "radial")),
        )
    except KeyError as exc:
        raise DomainError(f"muscle spec {path} missing field {exc}") from exc


def muscle_spec_to_json(spec: MuscleSpec) -> dict:
    return {"n": spec.n, "L_mm": spec.L, "h0_mm": spec.h0, "kind": spec.kind}


def _state_row(state: MuscleState) -> str:
    psi0_deg = state.psi0 * 180.0 / np.pi
    return ",".join(
        fmt(v) for v in (state.p, state.width, state.length, state.contraction, psi0_deg)
    )


def curve_to_csv(curve: DeformationCurve) -> str:
    lines = [CURVE_HEADER]
    lines.extend(_state_row(s) for s in curve.samples)
    return "\n".join(lines) + "\n"


def state_to_csv(state: MuscleState) -> str:
    return CURVE_HEADER + "\n" + _state_row(state) + "\n"


def read_curve_csv(path: str | Path, spec: MuscleSpec) -> DeformationCurve:
    """Re-parse a written curve CSV (used by round-trip checks)."""
    rows = _read_csv(path, CURVE_HEADER)
    samples = []
    for row in rows:
        p, width, length, contraction, psi0_deg = map(float, row)
        samples.append(
            MuscleState(
                p=p,
                width=width,
                length=length,
                contraction=contraction,
                psi0=psi0_deg * np.pi / 180.0,
            )
        )
    return DeformationCurve(spec=spec, samples=tuple(samples))


def _read_csv(path: str | Path, expected_header: str) -> list[list[str]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}") from exc
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != expected_header:
        raise DomainError(
            f"{path}: expected header {expected_header!r}, got "
            f"{lines[0].strip() if lines else '<empty>'!r}"
        )
    return [ln.split(",") for ln in lines[1:]]


# ---------------------------------------------------------------------------
# experiment logs
# ---------------------------------------------------------------------------

def read_tendon_csv(path: str | Path):
    """-> (time_s, load_N, strain, cycle) arrays."""
    rows = _read_csv(path, TENDON_HEADER)
    if not rows:
        raise DomainError(f"{path}: no data rows")
    data = np.array([[float(v) for v in row] for row in rows])
    return data[:, 0], data[:, 1], data[:, 2], data[:, 3].astype(int)


def read_winch_csv(path: str | Path):
    """-> (time_s, current_A, tension_N) arrays."""
    rows = _read_csv(path, WINCH_HEADER)
    if not rows:
        raise DomainError(f"{path}: no data rows")
    data = np.array([[float(v) for v in row] for row in rows])
    return data[:, 0], data[:, 1], data[:, 2]


def winch_series_to_csv(time_s, current_a, tension_n) -> str:
    lines = [WINCH_HEADER]
    for t, i, f in zip(time_s, current_a, tension_n):
        lines.append(f"{fmt(t)},{fmt(i)},{fmt(f)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# fitted parameters
# ---------------------------------------------------------------------------

def tendon_fit_to_json(fit: TendonFit) -> str:
    obj = {
        "a_N": float(fit.a),
        "b": float(fit.b),
        "eps0": float(fit.eps0),
        "rms_residual_N": float(fit.rms_residual),
    }
    return json.dumps(obj, indent=2) + "\n"


def winch_params_to_json(params: HysteresisParams) -> str:
    obj = {
        "c_N_per_A": float(params.c),
        "r_N": float(params.r),
        "rms_residual_N": float(params.rms_residual),
    }
    return json.dumps(obj, indent=2) + "\n"


def read_winch_params(path: str | Path) -> tuple[HysteresisParams, float]:
    """-> (params, initial_tension_N); the initial state defaults to 0."""
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
        params = HysteresisParams(c=float(raw["c_N_per_A"]), r=float(raw["r_N"]))
        t0 = float(raw.get("initial_tension_N", 0.0))
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"cannot read winch params {path}: {exc}") from exc
    return params, t0


# ---------------------------------------------------------------------------
# design constraints / results
# ---------------------------------------------------------------------------

def read_design_constraints(path: str | Path):
    from .design import DesignConstraints

    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read constraints {path}: {exc}") from exc
    try:
        return DesignConstraints(
            natural_length_range=tuple(float(v) for v in raw["natural_length_range_mm"]),
            min_stroke=float(raw["min_stroke_mm"]),
            max_width_at_full=float(raw["max_width_at_full_mm"]),
            min_width_at_full=float(raw.get("min_width_at_full_mm", 0.0)),
            h0=float(raw["h0_mm"]),
            n_range=tuple(int(v) for v in raw["n_range"]),
            L_range=tuple(float(v) for v in raw["L_range_mm"]),
            kind=str(raw.get("kind", "radial")),
        )
    except KeyError as exc:
        raise DomainError(f"constraints {path} missing field {exc}") from exc


def design_results_to_json(results: list[DesignResult]) -> str:
    out = []
    for res in results:
        out.append(
            {
                "spec": muscle_spec_to_json(res.spec),
                "achieved": {
                    "natural_length_mm": res.achieved.natural_length,
                    "stroke_mm": res.achieved.stroke,
                    "width_at_full_mm": res.achieved.width_at_full,
                },
                "feasible": res.feasible,
                "L_interval_mm": list(res.L_interval),
            }
        )
    return json.dumps(out, indent=2) + "\n"


DESIGN_CSV_HEADER = (
    "n,L_mm,h0_mm,natural_length_mm,stroke_mm,width_at_full_mm,L_lo_mm,L_hi_mm"
)


def design_results_to_csv(results: list[DesignResult]) -> str:
    lines = [DESIGN_CSV_HEADER]
    for res in results:
        lines.append(
            ",".join(
                [str(res.spec.n)]
                + [
                    fmt(v)
                    for v in (
                        res.spec.L,
                        res.spec.h0,
                        res.achieved.natural_length,
                        res.achieved.stroke,
                        res.achieved.width_at_full,
                        res.L_interval[0],
                        res.L_interval[1],
                    )
                ]
            )
        )
    return "\n".join(lines) + "\n"

"""Detuning sweeps and tables behind the command-line front end."""
from __future__ import annotations

import csv
import io
import json
import math

import numpy as np

from .antistokes import AntiStokesParams, diagonalize_antistokes
from .environment import thermal_occupation
from .errors import DegenerateCoupling, StabilityViolation
from .stokes import StokesParams, diagonalize_stokes, squeezed_amplitudes, squeezed_statistics

STOKES_COLUMNS = (
    "delta_s", "omega_alpha", "omega_beta", "omega_0", "cosh2", "sinh2", "r", "entropy", "status",
)
ANTISTOKES_COLUMNS = (
    "delta_as", "omega_plus", "omega_minus",
    "x_plus_sq", "y_plus_sq", "x_minus_sq", "y_minus_sq", "status",
)
STATE_COLUMNS = ("n", "amplitude", "ratio")
THERMAL_COLUMNS = ("temperature_k", "n_thermal")

OK = "ok"


def detuning_grid(lo: float, hi: float, points: int) -> np.ndarray:
    grid = np.linspace(lo, hi, points)
    # pin the exact zero so resonance rows are exact
    grid[np.isclose(grid, 0.0, atol=1e-12 * max(abs(lo), abs(hi)))] = 0.0
    return grid


def stokes_row(delta_s: float, Omega_s: float, f_s: float) -> dict:
    row = dict.fromkeys(STOKES_COLUMNS, math.nan)
    row["delta_s"] = float(delta_s)
    try:
        d = diagonalize_stokes(StokesParams.from_detuning(delta_s, Omega_s, f_s))
    except StabilityViolation:
        row["status"] = StabilityViolation.__name__
        return row
    row.update(
        omega_alpha=d.omega_alpha,
        omega_beta=d.omega_beta,
        omega_0=d.omega_0,
        cosh2=d.cosh2,
        sinh2=d.sinh2,
        r=d.r,
        entropy=squeezed_statistics(d.r)["entanglement_entropy"],
        status=OK,
    )
    return row


def stokes_sweep(deltas, Omega_s: float, f_s: float) -> list[dict]:
    return [stokes_row(d, Omega_s, f_s) for d in deltas]


def antistokes_row(delta_as: float, Omega_as: float, f_as: complex) -> dict:
    row = dict.fromkeys(ANTISTOKES_COLUMNS, math.nan)
    row["delta_as"] = float(delta_as)
    try:
        d = diagonalize_antistokes(AntiStokesParams.from_detuning(delta_as, Omega_as, f_as))
    except DegenerateCoupling:
        row["status"] = DegenerateCoupling.__name__
        return row
    row.update(
        omega_plus=d.Omega_plus,
        omega_minus=d.Omega_minus,
        x_plus_sq=d.x_plus_sq,
        y_plus_sq=d.y_plus_sq,
        x_minus_sq=d.x_minus_sq,
        y_minus_sq=d.y_minus_sq,
        status=OK,
    )
    return row


def antistokes_sweep(deltas, Omega_as: float, f_as: complex) -> list[dict]:
    return [antistokes_row(d, Omega_as, f_as) for d in deltas]


def state_table(r: float, n_max: int) -> list[dict]:
    """Pair amplitudes of the squeezed state; exactly-zero amplitudes are dropped."""
    amps = squeezed_amplitudes(r, n_max).amplitudes
    rows = []
    for n, c in enumerate(amps):
        if c == 0.0:
            continue
        ratio = c / amps[n - 1] if n > 0 else math.nan
        rows.append({"n": n, "amplitude": float(c), "ratio": float(ratio)})
    return rows


def thermal_table(freq_hz: float, temperatures) -> list[dict]:
    occ = np.atleast_1d(thermal_occupation(freq_hz, np.asarray(temperatures, dtype=float)))
    return [{"temperature_k": float(T), "n_thermal": float(n)} for T, n in zip(temperatures, occ)]


def check_rows(rows: list[dict], tol: float = 1e-9) -> list[str]:
    """Spot-check owning-module invariants on emitted rows; returns problems found."""
    problems = []
    for i, row in enumerate(rows):
        if row.get("status") != OK:
            continue
        if "cosh2" in row:
            if abs(row["cosh2"] - row["sinh2"] - 1.0) > tol:
                problems.append(f"row {i}: cosh2 - sinh2 != 1")
            if abs(row["omega_alpha"] - row["omega_beta"] - 2 * row["delta_s"]) > tol:
                problems.append(f"row {i}: omega_alpha - omega_beta != 2 delta_s")
            if row["omega_0"] > 0:
                problems.append(f"row {i}: omega_0 > 0")
        if "x_plus_sq" in row:
            for s in ("plus", "minus"):
                if abs(row[f"x_{s}_sq"] + row[f"y_{s}_sq"] - 1.0) > tol:
                    problems.append(f"row {i}: {s} mode not normalized")
            if row["omega_plus"] < row["omega_minus"]:
                problems.append(f"row {i}: omega_plus below omega_minus")
    return problems


def _fmt(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(value)
    return f"{value:.9g}"


def to_csv(rows: list[dict], columns) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt(row[c]) for c in columns])
    return buf.getvalue()


def to_json(rows: list[dict], columns) -> str:
    def clean(v):
        if isinstance(v, (float, np.floating)):
            return float(f"{v:.9g}") if math.isfinite(v) else None
        return v

    return json.dumps([{c: clean(row[c]) for c in columns} for row in rows], indent=1) + "\n"

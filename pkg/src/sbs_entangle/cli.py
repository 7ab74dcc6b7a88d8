"""Command-line front end.

Commands: ``stokes-sweep``, ``antistokes-sweep``, ``verify``, ``state``,
``thermal``. Exit codes: 0 success, 1 validation error, 2 verification
failure.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

import numpy as np

from . import sweeps
from .config import load_config
from .stokes import StokesParams, diagonalize_stokes
from .verify import run_checks

log = logging.getLogger("sbs_entangle")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VERIFY_FAILED = 2


def _common(p: argparse.ArgumentParser):
    p.add_argument("--config", type=Path, help="INI scenario file (defaults to the silicon-nanowire parameters)")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--points", type=int)
    p.add_argument("--min", type=float, dest="lo")
    p.add_argument("--max", type=float, dest="hi")
    p.add_argument("--truncation", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sbs-entangle",
        description="Photon-phonon entangled states from inter-modal Brillouin scattering.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stokes-sweep", help="Bogoliubov modes and squeezing vs detuning delta_s (GHz)")
    _common(p)
    p = sub.add_parser("antistokes-sweep", help="polariton branches and fractions vs detuning delta_as (GHz)")
    _common(p)
    p = sub.add_parser("verify", help="run the truncated-Fock oracle against the closed forms")
    _common(p)
    p.add_argument("--delta", type=float, default=0.0, help="Stokes half-detuning delta_s in GHz")
    p = sub.add_parser("state", help="Fock amplitudes of the two-mode squeezed state")
    _common(p)
    p.add_argument("--r", type=float, help="squeeze parameter (default: resonant Stokes value)")
    p = sub.add_parser("thermal", help="thermal phonon occupation over a temperature range (K)")
    _common(p)
    p.add_argument("--freq-ghz", type=float, help="phonon frequency (default: config phonon)")
    return parser


def _emit(rows, columns, fmt: str, out: str | None):
    text = sweeps.to_csv(rows, columns) if fmt == "csv" else sweeps.to_json(rows, columns)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _grid(cfg, args):
    lo = cfg.min_ghz if args.lo is None else args.lo
    hi = cfg.max_ghz if args.hi is None else args.hi
    if not lo < hi:
        raise ValueError(f"--min ({lo}) must be below --max ({hi})")
    return lo, hi


def run(args) -> int:
    cfg = load_config(args.config).with_overrides(
        format=args.format, points=args.points, n_max=args.truncation, path=args.out
    )
    out = cfg.path or None
    Omega = cfg.omega_phonon_ghz

    if args.command == "stokes-sweep":
        lo, hi = _grid(cfg, args)
        rows = sweeps.stokes_sweep(sweeps.detuning_grid(lo, hi, cfg.points), Omega, cfg.f_s_ghz())
        _report_rows(rows)
        _emit(rows, sweeps.STOKES_COLUMNS, cfg.format, out)
    elif args.command == "antistokes-sweep":
        lo, hi = _grid(cfg, args)
        rows = sweeps.antistokes_sweep(sweeps.detuning_grid(lo, hi, cfg.points), Omega, cfg.f_as_ghz())
        _report_rows(rows)
        _emit(rows, sweeps.ANTISTOKES_COLUMNS, cfg.format, out)
    elif args.command == "state":
        r = args.r
        if r is None:
            r = diagonalize_stokes(StokesParams(Omega, Omega, cfg.f_s_ghz())).r
        _emit(sweeps.state_table(r, cfg.n_max), sweeps.STATE_COLUMNS, cfg.format, out)
    elif args.command == "thermal":
        lo = 1e-3 if args.lo is None else args.lo
        hi = 300.0 if args.hi is None else args.hi
        if not 0 < lo < hi:
            raise ValueError(f"temperature range must satisfy 0 < min < max, got {lo}, {hi}")
        freq = (args.freq_ghz if args.freq_ghz is not None else Omega) * 1e9
        temps = np.geomspace(lo, hi, cfg.points)
        _emit(sweeps.thermal_table(freq, temps), sweeps.THERMAL_COLUMNS, cfg.format, out)
    elif args.command == "verify":
        delta_omega_s = Omega + 2.0 * args.delta
        checks = run_checks(delta_omega_s, Omega, cfg.f_s_ghz(), cfg.f_as_ghz(), cfg.n_max)
        for c in checks:
            print(c.line())
        failed = [c for c in checks if not c.passed]
        print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
        return EXIT_VERIFY_FAILED if failed else EXIT_OK
    return EXIT_OK


def _report_rows(rows):
    flagged = sum(r["status"] != sweeps.OK for r in rows)
    if flagged:
        log.warning("%d of %d sweep points flagged (see status column)", flagged, len(rows))
    for problem in sweeps.check_rows(rows):
        log.error(problem)


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except (ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

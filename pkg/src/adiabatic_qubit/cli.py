"""Command-line driver: parameter sweeps, figure data, oracle comparisons.

Precedence for every option: command-line flag > TOML config file (--config)
> built-in default.  All CSV numbers are printed as %.12e so identical inputs
produce byte-identical files.

Exit codes: 0 success, 2 invalid arguments, 3 numerical failure.

Energy conventions: the adiabatic solver reports E0 including the oscillator
zero-point (H/omega = (Q^2 + P^2)/2 + ...), while the Fock-basis oracle uses
H/omega = a^dag a + ..., half a quantum lower.  compare-exact aligns them.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from . import asymptotics, exact, model, observables, solver
from .errors import ConvergenceError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

DEFAULTS = {
    "big_d": [10.0],
    "big_w": [0.0],
    "alpha": [2.0],
    "n_points": solver.DEFAULT_N_POINTS,
    "q_max": None,
    "n_boson": None,
    "out": None,
    "format": "csv",
}


def _fmt(x: float) -> str:
    return "%.12e" % x


def _parse_float_list(text: str) -> list[float]:
    try:
        values = [float(t) for t in text.split(",") if t.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad number list {text!r}") from exc
    if not values:
        raise argparse.ArgumentTypeError("empty number list")
    return values


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--big-d", type=_parse_float_list, help="qubit frequency D = 2*Delta/omega (comma list for sweeps)")
    sub.add_argument("--big-w", type=_parse_float_list, help="asymmetry W = 2*epsilon/omega (comma list for sweeps)")
    sub.add_argument("--alpha", type=_parse_float_list, help="coupling alpha = L^2/(2D) (comma list for sweeps)")
    sub.add_argument("--n-points", type=int, help="grid points for the 1D solver")
    sub.add_argument("--q-max", type=float, help="override the automatic symmetric grid half-width")
    sub.add_argument("--n-boson", type=int, help="Fock truncation for compare-exact")
    sub.add_argument("--out", help="output path (default: stdout)")
    sub.add_argument("--format", choices=["csv", "json"], help="output format")
    sub.add_argument("--config", help="TOML config file; flags override it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adiabatic-qubit",
        description="Ground state, Bloch vector and tangle of a qubit "
        "coupled to a slow oscillator mode (adiabatic approximation).",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("potential", "lower/upper adiabatic potentials on a Q grid"),
        ("wavefunction", "ground-state wavefunction on the lower potential"),
        ("sweep", "Bloch vector, tangle and E0 over an (alpha, D, W) grid"),
        ("compare-exact", "adiabatic vs truncated-Fock exact diagonalization"),
        ("massive", "closed-form massive-limit Bloch vector and tangle"),
    ):
        _add_common(subs.add_parser(name, help=help_text))
    return parser


def _resolve(args: argparse.Namespace) -> dict:
    """Merge defaults, TOML config, and CLI flags (highest precedence last)."""
    merged = dict(DEFAULTS)
    if args.config:
        with open(args.config, "rb") as f:
            cfg = tomllib.load(f)
        for key, value in cfg.items():
            key = key.replace("-", "_")
            if key not in merged:
                raise ValueError(f"unknown config key {key!r}")
            if key in ("big_d", "big_w", "alpha") and not isinstance(value, list):
                value = [float(value)]
            merged[key] = value
    for key in merged:
        cli_value = getattr(args, key, None)
        if cli_value is not None:
            merged[key] = cli_value
    for key in ("big_d", "big_w", "alpha"):
        merged[key] = [float(v) for v in merged[key]]
    if any(d <= 0 for d in merged["big_d"]):
        raise ValueError("all D values must be positive")
    if any(a < 0 for a in merged["alpha"]):
        raise ValueError("all alpha values must be nonnegative")
    return merged


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as f:
            f.write(text)


def _csv(header: list[str], rows: list[list[str]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def _single(values: list[float], name: str) -> float:
    if len(values) != 1:
        raise ValueError(f"{name} must be a single value for this command")
    return values[0]


def _solve(opts: dict, big_d: float, big_w: float, alpha: float) -> tuple:
    dp = model.DimensionlessParams.from_alpha(big_d, big_w, alpha)
    if opts["q_max"] is not None:
        grid = solver.Grid.symmetric(opts["q_max"], opts["n_points"])
        sol = solver.solve_ground(dp, grid)
    else:
        sol = solver.solve_ground_auto(dp, opts["n_points"])
    return dp, sol


def cmd_potential(opts: dict) -> str:
    big_d = _single(opts["big_d"], "--big-d")
    big_w = _single(opts["big_w"], "--big-w")
    alpha = _single(opts["alpha"], "--alpha")
    dp = model.DimensionlessParams.from_alpha(big_d, big_w, alpha)
    grid = (
        solver.Grid.symmetric(opts["q_max"], opts["n_points"])
        if opts["q_max"] is not None
        else solver.auto_grid(dp, opts["n_points"])
    )
    q = grid.points()
    lower = model.adiabatic_potential(dp, q, model.AdiabaticBranch.LOWER)
    upper = model.adiabatic_potential(dp, q, model.AdiabaticBranch.UPPER)
    rows = [[_fmt(qi), _fmt(lo), _fmt(up)] for qi, lo, up in zip(q, lower, upper)]
    return _csv(["Q", "U_lower", "U_upper"], rows)


def cmd_wavefunction(opts: dict) -> str:
    big_d = _single(opts["big_d"], "--big-d")
    big_w = _single(opts["big_w"], "--big-w")
    alpha = _single(opts["alpha"], "--alpha")
    _, sol = _solve(opts, big_d, big_w, alpha)
    rows = [
        [_fmt(qi), _fmt(pi)] for qi, pi in zip(sol.grid.points(), sol.wavefunction)
    ]
    return _csv(["Q", "phi0"], rows)


def cmd_sweep(opts: dict) -> str:
    records = []
    for alpha in opts["alpha"]:
        for big_d in opts["big_d"]:
            for big_w in opts["big_w"]:
                rec: dict = {"alpha": alpha, "D": big_d, "W": big_w}
                try:
                    dp, sol = _solve(opts, big_d, big_w, alpha)
                    state = observables.bloch_vector(dp, sol)
                    rec.update(
                        bx=state.b_x,
                        bz=state.b_z,
                        tangle=observables.tangle(state).value,
                        E0=sol.energy,
                    )
                except (ValueError, ConvergenceError) as exc:
                    rec["error"] = str(exc)
                records.append(rec)
    if opts["format"] == "json":
        return json.dumps(records, indent=2) + "\n"
    rows = []
    for rec in records:
        if "error" in rec:
            rows.append(
                [_fmt(rec["alpha"]), _fmt(rec["D"]), _fmt(rec["W"])]
                + ["error"] * 4
            )
        else:
            rows.append(
                [
                    _fmt(rec["alpha"]),
                    _fmt(rec["D"]),
                    _fmt(rec["W"]),
                    _fmt(rec["bx"]),
                    _fmt(rec["bz"]),
                    _fmt(rec["tangle"]),
                    _fmt(rec["E0"]),
                ]
            )
    return _csv(["alpha", "D", "W", "bx", "bz", "tangle", "E0"], rows)


def cmd_compare_exact(opts: dict) -> str:
    big_d = _single(opts["big_d"], "--big-d")
    big_w = _single(opts["big_w"], "--big-w")
    alpha = _single(opts["alpha"], "--alpha")
    dp, sol = _solve(opts, big_d, big_w, alpha)
    tau_ad = observables.tangle(observables.bloch_vector(dp, sol)).value
    tr = (
        exact.FockTruncation(opts["n_boson"])
        if opts["n_boson"] is not None
        else None
    )
    g = exact.ground_state_converged(dp, tr)
    tau_ex = observables.tangle(exact.exact_qubit_state(g)).value
    record = {
        "tau_adiabatic": tau_ad,
        "tau_exact": tau_ex,
        "delta": tau_ad - tau_ex,
        # adiabatic E0 carries the oscillator zero-point; shift the Fock
        # value by +1/2 to the same convention
        "E0_adiabatic": sol.energy,
        "E0_exact": g.energy + 0.5,
        "n_boson": g.truncation.n_boson,
    }
    return json.dumps(record, indent=2) + "\n"


def cmd_massive(opts: dict) -> str:
    big_w = _single(opts["big_w"], "--big-w")
    rows = []
    for alpha in opts["alpha"]:
        if big_w == 0.0:
            b_x = -1.0 if alpha <= 1.0 else -1.0 / alpha
            b_z = 0.0
            tau = asymptotics.massive_tangle(alpha)
            degenerate = alpha > 1.0
        else:
            # reference scales omega = m = Delta = 1, so epsilon = W/2
            p = model.ModelParams(
                delta=1.0,
                epsilon=0.5 * big_w,
                omega=1.0,
                lambda_=math.sqrt(max(alpha, 0.0)),
                mass=1.0,
            )
            state = asymptotics.massive_bloch(p)
            b_x, b_z = state.b_x, state.b_z
            tau = max(0.0, 1.0 - b_x**2 - b_z**2)
            degenerate = False
        rows.append([_fmt(alpha), _fmt(b_x), _fmt(b_z), _fmt(tau), str(int(degenerate))])
    return _csv(["alpha", "bx", "bz", "tangle", "degenerate"], rows)


COMMANDS = {
    "potential": cmd_potential,
    "wavefunction": cmd_wavefunction,
    "sweep": cmd_sweep,
    "compare-exact": cmd_compare_exact,
    "massive": cmd_massive,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        opts = _resolve(args)
    except (ValueError, OSError, tomllib.TOMLDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        text = COMMANDS[args.command](opts)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    _write(text, opts["out"])
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands:
    spectrum    table of eigenenergies, concurrences, and Bell weights
    dynamics    CSV trajectory of populations and concurrence
    sweep       CSV concurrence map (eigen, tunneling-dynamics, or
                detuning-dynamics kind) with optional PGM heatmap
    bell-times  tunneling ratio and earliest maximal-entanglement time
    verify      run the built-in invariant battery

Parameter precedence is command-line flags over config-file keys over
defaults (j = 25 ueV, detunings and tunnelings 0).  Config files are
line-oriented `key = value` text with `#` comments.  Every CSV starts
with a `# key = value` header that fully reproduces the run; exit codes
are 0 (ok), 2 (bad input), 3 (numeric failure), 4 (no solution).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from .dynamics import bell_condition, propagate, trajectory
from .entanglement import concurrence_pure
from .errors import ConfigError, NoRealSolution, QmolError
from .hamiltonian import SystemParams
from .serialize import (
    fmt6,
    parse_metadata,
    pgm_bytes,
    sweep_csv_bytes,
    table_csv_bytes,
    trajectory_csv_bytes,
)
from .spectrum import eigensystem
from .states import BELL_DISPLAY, BELL_LABELS, POSITIONAL_LABELS, basis_state
from .sweep import dynamics_detuning_map, dynamics_tunneling_map, eigen_concurrence_map
from .verify import run_all

__all__ = ["RunConfig", "main", "build_config", "config_from_metadata"]

SWEEP_KINDS = ("eigen", "tunneling-dynamics", "detuning-dynamics")
_STATE_LABELS = POSITIONAL_LABELS + BELL_LABELS


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved inputs of one CLI invocation."""

    command: str
    params: SystemParams
    init: str = "RL"
    tmax: float = 3.0
    steps: int = 301
    kind: str = "eigen"
    state: int = 1
    sign: int = 1
    grid: tuple[float, float, int] | None = None
    n: int = 1
    m: int = 1
    out: str | None = None
    pgm: str | None = None


def _float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ConfigError(f"expected a number, got {text!r}") from None
    if not np.isfinite(value):
        raise ConfigError(f"expected a finite number, got {text!r}")
    return value


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ConfigError(f"expected an integer, got {text!r}") from None


def _label(text: str) -> str:
    if text not in _STATE_LABELS:
        raise ConfigError(
            f"unknown state label {text!r}; choose from {', '.join(_STATE_LABELS)}"
        )
    return text


def _kind(text: str) -> str:
    if text not in SWEEP_KINDS:
        raise ConfigError(
            f"unknown sweep kind {text!r}; choose from {', '.join(SWEEP_KINDS)}"
        )
    return text


def _state_index(text: str) -> int:
    value = _int(text)
    if value not in (0, 1, 2, 3):
        raise ConfigError(f"state index must be 0..3, got {text!r}")
    return value


def _sign(text: str) -> int:
    if text in ("+1", "1"):
        return 1
    if text == "-1":
        return -1
    raise ConfigError(f"sign must be +1 or -1, got {text!r}")


def _grid(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"grid must be MIN:MAX:COUNT, got {text!r}")
    lo, hi = _float(parts[0]), _float(parts[1])
    count = _int(parts[2])
    if count < 2:
        raise ConfigError(f"grid needs at least 2 points, got {count}")
    if not hi > lo:
        raise ConfigError(f"grid needs MAX > MIN, got {text!r}")
    return lo, hi, count


_CONVERTERS = {
    "j": _float,
    "d1": _float,
    "d2": _float,
    "e1": _float,
    "e2": _float,
    "ratio": _float,
    "init": _label,
    "tmax": _float,
    "steps": _int,
    "kind": _kind,
    "state": _state_index,
    "sign": _sign,
    "grid": _grid,
    "n": _int,
    "m": _int,
    "out": str,
    "pgm": str,
}

#: ratio is shorthand for equal tunnelings; giving either side on the
#: command line overrides the whole group from the config file.
_TUNNELING_KEYS = ("ratio", "d1", "d2")


def _read_config_file(path: str) -> dict[str, str]:
    try:
        with open(path, encoding="ascii") as handle:
            text = handle.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path!r}: {exc}") from None
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        if "=" not in body:
            raise ConfigError(f"{path}:{lineno}: expected `key = value`, got {line!r}")
        key, _, value = body.partition("=")
        key = key.strip()
        if key not in _CONVERTERS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        raw[key] = value.strip()
    return raw


def build_config(args: argparse.Namespace) -> RunConfig:
    """Merge flags, config file, and defaults into a validated RunConfig."""
    flag_raw = {
        key: value
        for key, value in vars(args).items()
        if key in _CONVERTERS and value is not None
    }
    file_raw = _read_config_file(args.config) if getattr(args, "config", None) else {}
    if any(key in flag_raw for key in _TUNNELING_KEYS):
        for key in _TUNNELING_KEYS:
            file_raw.pop(key, None)
    raw = file_raw | flag_raw
    if "ratio" in raw and ("d1" in raw or "d2" in raw):
        raise ConfigError("--ratio conflicts with --d1/--d2; give one or the other")

    values: dict = {}
    for key, text in raw.items():
        values[key] = _CONVERTERS[key](text)

    try:
        if "ratio" in values:
            params = SystemParams.from_ratio(
                values["ratio"],
                j=values.get("j", 25.0),
                eps1=values.get("e1", 0.0),
                eps2=values.get("e2", 0.0),
            )
        else:
            params = SystemParams(
                eps1=values.get("e1", 0.0),
                eps2=values.get("e2", 0.0),
                delta1=values.get("d1", 0.0),
                delta2=values.get("d2", 0.0),
                j=values.get("j", 25.0),
            )
    except ValueError as exc:
        raise ConfigError(str(exc)) from None

    config = RunConfig(
        command=args.command,
        params=params,
        init=values.get("init", "RL"),
        tmax=values.get("tmax", 3.0),
        steps=values.get("steps", 301),
        kind=values.get("kind", "eigen"),
        state=values.get("state", 1),
        sign=values.get("sign", 1),
        grid=values.get("grid"),
        n=values.get("n", 1),
        m=values.get("m", 1),
        out=values.get("out"),
        pgm=values.get("pgm"),
    )
    _validate_for_command(config)
    return config


def _validate_for_command(config: RunConfig) -> None:
    needs_time = config.command == "dynamics" or (
        config.command == "sweep" and config.kind != "eigen"
    )
    if needs_time:
        if not config.tmax > 0.0:
            raise ConfigError(f"tmax must be positive, got {config.tmax!r}")
        if config.steps < 2:
            raise ConfigError(f"steps must be at least 2, got {config.steps}")
    if config.command == "sweep":
        if config.kind == "tunneling-dynamics" and (
            config.params.eps1 != 0.0 or config.params.eps2 != 0.0
        ):
            raise ConfigError("tunneling-dynamics sweep requires e1 = e2 = 0")
        if config.kind == "detuning-dynamics" and (
            config.params.delta1 != config.params.delta2
        ):
            raise ConfigError(
                "detuning-dynamics sweep requires d1 = d2 (or --ratio)"
            )
    if config.command == "bell-times":
        if config.n < 1:
            raise ConfigError(f"n must be a positive integer, got {config.n}")
        if config.m < 1 or config.m % 2 == 0:
            raise ConfigError(f"m must be a positive odd integer, got {config.m}")


def _resolved_grid(config: RunConfig) -> tuple[float, float, int]:
    if config.grid is not None:
        return config.grid
    if config.kind == "tunneling-dynamics":
        return 0.0, 1.0, 201
    return -config.params.j, config.params.j, 201


def _grid_text(grid: tuple[float, float, int]) -> str:
    return f"{grid[0]!r}:{grid[1]!r}:{grid[2]}"


def _metadata(config: RunConfig) -> dict:
    p = config.params
    meta: dict = {"command": config.command}
    if config.command == "sweep":
        meta["kind"] = config.kind
    meta |= {"j": p.j, "e1": p.eps1, "e2": p.eps2, "d1": p.delta1, "d2": p.delta2}
    if config.command == "dynamics":
        meta |= {"init": config.init, "tmax": config.tmax, "steps": config.steps}
    elif config.command == "sweep":
        meta["grid"] = _grid_text(_resolved_grid(config))
        if config.kind == "eigen":
            meta["state"] = config.state
        else:
            meta |= {"init": config.init, "tmax": config.tmax, "steps": config.steps}
            if config.kind == "detuning-dynamics":
                meta["sign"] = f"{config.sign:+d}"
    return meta


def config_from_metadata(meta: dict[str, str]) -> RunConfig:
    """Rebuild the RunConfig a CSV header was written from."""
    try:
        command = meta["command"]
        params = SystemParams(
            eps1=float(meta["e1"]),
            eps2=float(meta["e2"]),
            delta1=float(meta["d1"]),
            delta2=float(meta["d2"]),
            j=float(meta["j"]),
        )
        extra: dict = {}
        if "kind" in meta:
            extra["kind"] = _kind(meta["kind"])
        if "grid" in meta:
            extra["grid"] = _grid(meta["grid"])
        if "state" in meta:
            extra["state"] = _state_index(meta["state"])
        if "sign" in meta:
            extra["sign"] = _sign(meta["sign"])
        if "init" in meta:
            extra["init"] = _label(meta["init"])
        if "tmax" in meta:
            extra["tmax"] = _float(meta["tmax"])
        if "steps" in meta:
            extra["steps"] = _int(meta["steps"])
    except (KeyError, ValueError) as exc:
        raise ConfigError(f"incomplete or invalid metadata header: {exc}") from None
    return RunConfig(command=command, params=params, **extra)


def render_spectrum(config: RunConfig) -> bytes:
    system = eigensystem(config.params)
    rows = []
    for i in range(4):
        state = system.states[i]
        weights = state.to_bell().probabilities
        dominant = int(np.argmax(weights))
        rows.append(
            (
                str(i),
                fmt6(system.energies[i]),
                fmt6(concurrence_pure(state)),
                BELL_DISPLAY[dominant],
                fmt6(weights[dominant]),
                "yes" if system.degenerate_states[i] else "no",
            )
        )
    header = ("state", "energy_ueV", "concurrence", "dominant_bell", "weight", "degenerate")
    return table_csv_bytes(_metadata(config), header, rows)


def render_dynamics(config: RunConfig) -> bytes:
    traj = trajectory(
        config.params, basis_state(config.init), config.tmax, config.steps
    )
    return trajectory_csv_bytes(traj, _metadata(config))


def render_sweep(config: RunConfig) -> tuple[bytes, bytes]:
    lo, hi, count = _resolved_grid(config)
    if config.kind == "eigen":
        grid = eigen_concurrence_map(config.params, config.state, lo, hi, count)
    elif config.kind == "tunneling-dynamics":
        grid = dynamics_tunneling_map(
            config.params, config.tmax, config.steps, lo, hi, count,
            basis_state(config.init),
        )
    else:
        grid = dynamics_detuning_map(
            config.params, config.tmax, config.steps, lo, hi, count,
            basis_state(config.init), config.sign,
        )
    return sweep_csv_bytes(grid, _metadata(config)), pgm_bytes(grid.values)


def _emit(data: bytes, path: str | None) -> None:
    if path is None:
        sys.stdout.write(data.decode("ascii"))
    else:
        with open(path, "wb") as handle:
            handle.write(data)


def cmd_spectrum(config: RunConfig) -> int:
    data = render_spectrum(config)
    sys.stdout.write(data.decode("ascii"))
    if config.out:
        _emit(data, config.out)
    return 0


def cmd_dynamics(config: RunConfig) -> int:
    _emit(render_dynamics(config), config.out)
    return 0


def cmd_sweep(config: RunConfig) -> int:
    csv_data, pgm_data = render_sweep(config)
    _emit(csv_data, config.out)
    if config.pgm:
        _emit(pgm_data, config.pgm)
    return 0


def cmd_bell_times(config: RunConfig) -> int:
    condition = bell_condition(config.n, config.m, config.params.j)
    evolved = propagate(condition.params(), basis_state("RL"), condition.t_e)
    checked = concurrence_pure(evolved)
    lines = [
        f"n = {condition.n}",
        f"m = {condition.m}",
        f"j_ueV = {fmt6(condition.j)}",
        f"ratio = {fmt6(condition.ratio)}",
        f"delta1_ueV = {fmt6(condition.delta1)}",
        f"t_e_ns = {fmt6(condition.t_e)}",
        f"concurrence_at_t_e = {fmt6(checked)}",
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_verify(config: RunConfig) -> int:
    return 0 if run_all() else 3


_DISPATCH = {
    "spectrum": cmd_spectrum,
    "dynamics": cmd_dynamics,
    "sweep": cmd_sweep,
    "bell-times": cmd_bell_times,
    "verify": cmd_verify,
}


def _add_param_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--j", metavar="UEV", help="Coulomb coupling (default 25)")
    sub.add_argument("--d1", metavar="UEV", help="tunneling amplitude of qubit 1")
    sub.add_argument("--d2", metavar="UEV", help="tunneling amplitude of qubit 2")
    sub.add_argument("--e1", metavar="UEV", help="detuning of qubit 1")
    sub.add_argument("--e2", metavar="UEV", help="detuning of qubit 2")
    sub.add_argument("--ratio", metavar="R", help="set d1 = d2 = R * j")
    sub.add_argument("--config", metavar="PATH", help="key = value config file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmol",
        description="Coupled charge-qubit spectra, dynamics, and entanglement maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    spectrum = sub.add_parser("spectrum", help="eigenvalues and eigenstate concurrences")
    _add_param_flags(spectrum)
    spectrum.add_argument("--out", metavar="PATH", help="also write the table as CSV")

    dynamics = sub.add_parser("dynamics", help="time evolution of one initial state")
    _add_param_flags(dynamics)
    dynamics.add_argument("--init", metavar="LABEL", help="initial state (default RL)")
    dynamics.add_argument("--tmax", metavar="NS", help="time span (default 3)")
    dynamics.add_argument("--steps", metavar="N", help="grid points (default 301)")
    dynamics.add_argument("--out", metavar="PATH", help="CSV path (default stdout)")

    sweep = sub.add_parser("sweep", help="two-parameter concurrence map")
    sweep.add_argument(
        "kind", nargs="?", default=None, choices=SWEEP_KINDS,
        help="map kind (default eigen)",
    )
    _add_param_flags(sweep)
    sweep.add_argument("--init", metavar="LABEL", help="initial state for dynamic kinds")
    sweep.add_argument("--tmax", metavar="NS", help="time span for dynamic kinds")
    sweep.add_argument("--steps", metavar="N", help="time grid points for dynamic kinds")
    sweep.add_argument("--grid", metavar="MIN:MAX:COUNT", help="swept-axis grid")
    sweep.add_argument("--state", metavar="0..3", help="eigenstate index (eigen kind)")
    sweep.add_argument("--sign", metavar="+1|-1", help="e2 = sign * e1 (detuning kind)")
    sweep.add_argument("--out", metavar="PATH", help="CSV path (default stdout)")
    sweep.add_argument("--pgm", metavar="PATH", help="also write a P5 graymap")

    bell = sub.add_parser("bell-times", help="maximal-entanglement condition")
    _add_param_flags(bell)
    bell.add_argument("--n", metavar="N", help="plus-block half-periods (default 1)")
    bell.add_argument("--m", metavar="M", help="minus-block quarter-periods, odd (default 1)")

    sub.add_parser("verify", help="run the built-in invariant battery")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(None)
        config = build_config(args)
        return _DISPATCH[config.command](config)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NoRealSolution as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (QmolError, ArithmeticError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())

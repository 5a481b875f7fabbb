"""Deterministic text and image serialization for trajectories and sweeps.

CSV files carry a `# key = value` metadata header holding the resolved run
configuration at full float precision, so any output file can be
regenerated byte-identically from its own header.  Numeric table content
uses fixed 6-decimal formatting.  Heatmaps are written as binary 8-bit
portable graymaps (P5) with gray = round(255 * concurrence) and row 0 at
the y-axis minimum.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .dynamics import Trajectory
from .sweep import SweepGrid

__all__ = [
    "fmt6",
    "metadata_lines",
    "parse_metadata",
    "table_csv_bytes",
    "trajectory_csv_bytes",
    "sweep_csv_bytes",
    "pgm_bytes",
]


def fmt6(x: float) -> str:
    """Fixed 6-decimal rendering; negative zero normalizes to zero."""
    out = f"{float(x):.6f}"
    return "0.000000" if out == "-0.000000" else out


def _meta_value(v) -> str:
    if isinstance(v, bool):
        raise TypeError("boolean metadata is ambiguous; use explicit strings")
    if isinstance(v, float):
        return repr(v)
    return str(v)


def metadata_lines(meta: dict) -> list[str]:
    return [f"# {key} = {_meta_value(value)}" for key, value in meta.items()]


def parse_metadata(text: str) -> dict[str, str]:
    """Read the `# key = value` header block back into raw strings."""
    meta: dict[str, str] = {}
    for line in text.splitlines():
        if not line.startswith("#"):
            break
        body = line[1:].strip()
        if not body or "=" not in body:
            continue
        key, _, value = body.partition("=")
        meta[key.strip()] = value.strip()
    return meta


def table_csv_bytes(meta: dict, header: Sequence[str], rows: Iterable[Sequence[str]]) -> bytes:
    lines = metadata_lines(meta)
    lines.append(",".join(header))
    lines.extend(",".join(row) for row in rows)
    return ("\n".join(lines) + "\n").encode("ascii")


def trajectory_csv_bytes(traj: Trajectory, meta: dict) -> bytes:
    rows = (
        [
            fmt6(traj.times[i]),
            fmt6(traj.populations[i, 0]),
            fmt6(traj.populations[i, 1]),
            fmt6(traj.populations[i, 2]),
            fmt6(traj.populations[i, 3]),
            fmt6(traj.concurrence[i]),
        ]
        for i in range(traj.times.shape[0])
    )
    header = ("t_ns", "P_LL", "P_LR", "P_RL", "P_RR", "concurrence")
    return table_csv_bytes(meta, header, rows)


def sweep_csv_bytes(grid: SweepGrid, meta: dict) -> bytes:
    xs = grid.x_axis.values
    ys = grid.y_axis.values
    lines = metadata_lines(meta)
    lines.append("," + ",".join(fmt6(x) for x in xs))
    for iy in range(ys.shape[0]):
        lines.append(
            fmt6(ys[iy]) + "," + ",".join(fmt6(v) for v in grid.values[iy])
        )
    return ("\n".join(lines) + "\n").encode("ascii")


def pgm_bytes(values: np.ndarray) -> bytes:
    """Binary P5 graymap of a [0, 1] matrix; row 0 is written first."""
    values = np.asarray(values, dtype=float)
    if values.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {values.shape}")
    gray = np.rint(np.clip(values, 0.0, 1.0) * 255.0).astype(np.uint8)
    height, width = gray.shape
    return f"P5\n{width} {height}\n255\n".encode("ascii") + gray.tobytes()

"""CSV and grayscale-pixmap emission for slice results.

CSV schema: header ``x<axis>[,x<axis>],t,value,argmin,gap`` with one file
per time, named ``<prefix>_t<time>.csv``.  Floats print with 17 significant
digits so files round-trip losslessly and regenerate byte-identically.

Images are binary 8-bit grayscale portable pixmaps (magic ``P5``): width,
height, 255, then row-major bytes over the grid, minimum value black and
maximum white.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .slicing import SliceResult

__all__ = ["write_slice_csv", "write_slice_pgm", "render_pgm"]


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _time_tag(t: float) -> str:
    return format(float(t), "g")


def write_slice_csv(result: SliceResult, out_prefix) -> list[Path]:
    """Write one CSV per time; returns the paths written."""
    prefix = Path(out_prefix)
    if prefix.parent != Path(""):
        prefix.parent.mkdir(parents=True, exist_ok=True)
    header = ",".join(f"x{axis}" for axis in result.spec.free_axes) + ",t,value,argmin,gap"
    paths = []
    for table in result.tables:
        path = prefix.parent / f"{prefix.name}_t{_time_tag(table.t)}.csv"
        lines = [header]
        for i in range(result.grid.shape[0]):
            coords = ",".join(_fmt(c) for c in result.grid[i])
            lines.append(
                f"{coords},{_fmt(table.t)},{_fmt(table.values[i])},"
                f"{int(table.argmin_indices[i])},{_fmt(table.gaps[i])}"
            )
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        paths.append(path)
    return paths


def render_pgm(values: np.ndarray, width: int, height: int) -> bytes:
    """Binary P5 pixmap bytes: min maps to black, max to white."""
    values = np.asarray(values, dtype=float).reshape(height, width)
    if not np.isfinite(values).all():
        raise ValueError("cannot render non-finite values")
    lo, hi = values.min(), values.max()
    if hi > lo:
        scaled = np.round((values - lo) / (hi - lo) * 255.0)
    else:
        scaled = np.zeros_like(values)
    header = f"P5\n{width} {height}\n255\n".encode("ascii")
    return header + scaled.astype(np.uint8).tobytes()


def write_slice_pgm(result: SliceResult, out_prefix) -> list[Path]:
    """Write one grayscale image per time; returns the paths written."""
    prefix = Path(out_prefix)
    shape = result.spec.grid_shape()
    height, width = (1, shape[0]) if len(shape) == 1 else (shape[0], shape[1])
    paths = []
    for table in result.tables:
        path = prefix.parent / f"{prefix.name}_t{_time_tag(table.t)}.pgm"
        path.write_bytes(render_pgm(table.values, width, height))
        paths.append(path)
    return paths

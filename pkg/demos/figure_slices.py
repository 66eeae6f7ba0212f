#!/usr/bin/env python3
"""Regenerate the slice data sets behind the contour figures.

For each shipped problem this writes one CSV and one grayscale pixmap per
time into demos/output/.  The 10-D problems are sliced over their first two
coordinates with the remaining eight fixed at zero.

Run:
    python demos/figure_slices.py
"""

from pathlib import Path

from hjeval import load_problem, load_slice, evaluate_slice
from hjeval.output import write_slice_csv, write_slice_pgm

ROOT = Path(__file__).resolve().parent.parent
OUT = Path(__file__).resolve().parent / "output"

RUNS = [
    ("clipped1d", "slice_line1d"),
    ("pwa1d", "slice_line1d"),
    ("ball10d", "slice_plane10d"),
    ("pwa10d", "slice_plane10d_t0"),
    ("l1norm5d", "slice_plane5d"),
    ("linfnorm5d", "slice_plane5d"),
]


def main():
    OUT.mkdir(exist_ok=True)
    for problem, slice_name in RUNS:
        net = load_problem(ROOT / "configs" / f"{problem}.cfg").build_net()
        spec = load_slice(ROOT / "configs" / f"{slice_name}.cfg")
        result = evaluate_slice(net, spec)
        paths = write_slice_csv(result, OUT / problem)
        paths += write_slice_pgm(result, OUT / problem)
        spans = ", ".join(
            f"t={table.t:g}: [{table.values.min():.3f}, {table.values.max():.3f}]"
            for table in result.tables
        )
        print(f"{problem:<12} -> {len(paths)} files   value ranges: {spans}")
    print(f"\nwrote everything under {OUT}")


if __name__ == "__main__":
    main()

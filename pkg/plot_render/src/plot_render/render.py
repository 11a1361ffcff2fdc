"""Heatmap rendering for expected-profit-difference sweep CSVs.

Input is the sweep CSV contract: header ``p_ext,f_a,f_b,expected_diff,sign``,
one row per grid cell.  Each distinct ``p_ext`` becomes one panel, in
order of first appearance, with ``f_a`` on the x axis and ``f_b`` on the
y axis.  The color scale is a diverging map centered at zero so the sign
regions read directly off the figure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")  # batch tool, never needs a display

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.colors import Normalize

__all__ = ["CsvFormatError", "HeatmapSpec", "Panel", "parse_sweep_csv", "render", "symmetric_range"]

EXPECTED_HEADER = ["p_ext", "f_a", "f_b", "expected_diff", "sign"]


class CsvFormatError(Exception):
    """The input CSV does not follow the sweep contract."""


@dataclass(frozen=True)
class Panel:
    """One p_ext slice: axis values plus a (f_b, f_a)-indexed value grid."""

    p_ext: float
    f_a_values: list[float]
    f_b_values: list[float]
    grid: np.ndarray


@dataclass(frozen=True)
class HeatmapSpec:
    """What to render: input CSV(s), output image, titles, color range."""

    csv_paths: tuple[str, ...]
    out_path: str
    panel_titles: tuple[str, ...] | None = None
    vmax: float | None = None  # symmetric bound; defaults to max |value|
    dpi: int = 150


def _parse_float(text: str, path: str | Path, line_no: int, column: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise CsvFormatError(
            f"{path}, line {line_no}: column {column!r} is not a number: {text!r}"
        ) from None


def parse_sweep_csv(path: str | Path) -> list[Panel]:
    """Read one sweep CSV into panels, one per distinct p_ext.

    Raises :class:`CsvFormatError` with the offending line number for
    header mismatches, short rows, non-numeric cells, duplicate cells,
    or ragged grids; an empty data section is also an error.
    """
    import csv

    per_price: dict[float, dict[tuple[float, float], float]] = {}
    try:
        handle = open(path, "r", encoding="utf-8", newline="")
    except OSError as exc:
        raise CsvFormatError(f"cannot read {path}: {exc}") from exc

    with handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header != EXPECTED_HEADER:
            raise CsvFormatError(
                f"{path}, line 1: expected header {','.join(EXPECTED_HEADER)}, "
                f"got {header}"
            )
        for line_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(EXPECTED_HEADER):
                raise CsvFormatError(
                    f"{path}, line {line_no}: expected {len(EXPECTED_HEADER)} "
                    f"columns, got {len(row)}"
                )
            p_ext = _parse_float(row[0], path, line_no, "p_ext")
            f_a = _parse_float(row[1], path, line_no, "f_a")
            f_b = _parse_float(row[2], path, line_no, "f_b")
            value = _parse_float(row[3], path, line_no, "expected_diff")
            if row[4] not in ("pos", "neg", "zero"):
                raise CsvFormatError(
                    f"{path}, line {line_no}: sign must be pos|neg|zero, got {row[4]!r}"
                )
            cells = per_price.setdefault(p_ext, {})
            if (f_a, f_b) in cells:
                raise CsvFormatError(
                    f"{path}, line {line_no}: duplicate cell "
                    f"(p_ext={p_ext}, f_a={f_a}, f_b={f_b})"
                )
            cells[(f_a, f_b)] = value

    if not per_price:
        raise CsvFormatError(f"{path}: no data rows")

    panels = []
    for p_ext, cells in per_price.items():  # insertion order = first appearance
        f_a_values = sorted({fa for fa, _ in cells})
        f_b_values = sorted({fb for _, fb in cells})
        grid = np.empty((len(f_b_values), len(f_a_values)))
        for i, fb in enumerate(f_b_values):
            for j, fa in enumerate(f_a_values):
                if (fa, fb) not in cells:
                    raise CsvFormatError(
                        f"{path}: panel p_ext={p_ext} is missing cell "
                        f"(f_a={fa}, f_b={fb}); grids must be complete"
                    )
                grid[i, j] = cells[(fa, fb)]
        panels.append(Panel(p_ext=p_ext, f_a_values=f_a_values, f_b_values=f_b_values, grid=grid))
    return panels


def symmetric_range(panels: list[Panel], vmax: float | None = None) -> float:
    """Color bound: the requested vmax, else the largest |value| seen."""
    if vmax is not None:
        if not vmax > 0:
            raise ValueError(f"vmax must be positive, got {vmax}")
        return vmax
    largest = max(float(np.max(np.abs(panel.grid))) for panel in panels)
    return largest if largest > 0 else 1.0


def render(spec: HeatmapSpec) -> Path:
    """Render all panels side by side and write the raster image."""
    panels: list[Panel] = []
    for csv_path in spec.csv_paths:
        panels.extend(parse_sweep_csv(csv_path))
    if spec.panel_titles is not None and len(spec.panel_titles) != len(panels):
        raise ValueError(
            f"{len(spec.panel_titles)} titles given for {len(panels)} panels"
        )

    bound = symmetric_range(panels, spec.vmax)
    norm = Normalize(vmin=-bound, vmax=bound)

    fig, axes = plt.subplots(
        1, len(panels), figsize=(4.2 * len(panels) + 1.2, 4.0), squeeze=False
    )
    mesh = None
    for index, (axis, panel) in enumerate(zip(axes[0], panels)):
        extent = (
            panel.f_a_values[0],
            panel.f_a_values[-1],
            panel.f_b_values[0],
            panel.f_b_values[-1],
        )
        mesh = axis.imshow(
            panel.grid,
            origin="lower",
            extent=extent,
            aspect="auto",
            cmap="RdBu_r",
            norm=norm,
            interpolation="nearest",
        )
        if spec.panel_titles is not None:
            axis.set_title(spec.panel_titles[index])
        else:
            axis.set_title(f"p_ext = {panel.p_ext:g}")
        axis.set_xlabel("f_a")
        if index == 0:
            axis.set_ylabel("f_b")

    fig.colorbar(mesh, ax=axes[0].tolist(), label="expected profit difference")
    out = Path(spec.out_path)
    fig.savefig(out, dpi=spec.dpi)
    plt.close(fig)
    return out

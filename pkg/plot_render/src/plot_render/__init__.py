"""Batch heatmap renderer for expected-profit-difference sweep CSVs."""

from .render import (
    CsvFormatError,
    HeatmapSpec,
    Panel,
    parse_sweep_csv,
    render,
    symmetric_range,
)

__version__ = "0.1.0"

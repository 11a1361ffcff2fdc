"""Parameter sweeps over failure probabilities and external prices.

Pool state is held fixed, so the trade plan is computed once and the
expected profit difference is evaluated on a (p_ext, f_a, f_b) grid.
Cells carry a sign classification with a scale-aware zero tolerance,
and grids serialize to a small CSV whose floats round-trip exactly.
"""

from __future__ import annotations

import csv
import enum
from dataclasses import dataclass
from pathlib import Path

from .cpmm import ArbOpportunity, SizingRule, build_trade_plan, spot_price
from .engine import ExternalPrice, FailureModel, expected_profit_diff

__all__ = [
    "CSV_FIELDS",
    "GridSpec",
    "Sign",
    "SweepCell",
    "SweepConfig",
    "classify_sign",
    "read_csv",
    "run_sweep",
    "write_csv",
]

CSV_FIELDS = ("p_ext", "f_a", "f_b", "expected_diff", "sign")


class Sign(enum.Enum):
    POSITIVE = "pos"
    NEGATIVE = "neg"
    ZERO = "zero"


@dataclass(frozen=True)
class GridSpec:
    """Inclusive evenly spaced probability range with a point count."""

    start: float = 0.0
    stop: float = 1.0
    count: int = 101

    def __post_init__(self) -> None:
        if self.count < 2:
            raise ValueError(f"grid needs at least 2 points, got {self.count}")
        if not 0.0 <= self.start <= self.stop <= 1.0:
            raise ValueError(
                f"grid range must satisfy 0 <= start <= stop <= 1, "
                f"got [{self.start}, {self.stop}]"
            )

    def values(self) -> list[float]:
        step = self.stop - self.start
        return [self.start + step * (i / (self.count - 1)) for i in range(self.count)]


@dataclass(frozen=True)
class SweepConfig:
    opp: ArbOpportunity
    p_ext_values: tuple[float, ...]
    rule: SizingRule = SizingRule.FEE_ADJUSTED
    f_a_grid: GridSpec = GridSpec()
    f_b_grid: GridSpec = GridSpec()

    def __post_init__(self) -> None:
        if not self.p_ext_values:
            raise ValueError("p_ext_values must not be empty")
        for value in self.p_ext_values:
            if not value > 0:
                raise ValueError(f"external prices must be positive, got {value}")


@dataclass(frozen=True)
class SweepCell:
    p_ext: float
    f_a: float
    f_b: float
    expected_diff: float
    sign: Sign


def classify_sign(value: float, scale: float = 1.0) -> Sign:
    """Sign of ``value`` with a zero band of ``1e-15 * max(1, scale)``.

    The scale guard absorbs rounding noise on grids whose natural
    magnitude (trade size times price) is far above 1.
    """
    if abs(value) <= 1e-15 * max(1.0, scale):
        return Sign.ZERO
    return Sign.POSITIVE if value > 0 else Sign.NEGATIVE


def run_sweep(cfg: SweepConfig) -> list[SweepCell]:
    """Evaluate the expected difference on the full grid.

    Cells are produced row-major with p_ext outermost, then f_a, then
    f_b.  The plan does not depend on any of the swept parameters, so a
    failing opportunity aborts the sweep up front.
    """
    plan = build_trade_plan(cfg.opp, cfg.rule)
    scale = abs(plan.delta_x) * spot_price(cfg.opp.pool_a)

    cells: list[SweepCell] = []
    for p_ext in cfg.p_ext_values:
        price = ExternalPrice(p_ext)
        for f_a in cfg.f_a_grid.values():
            for f_b in cfg.f_b_grid.values():
                diff = expected_profit_diff(plan, FailureModel(f_a, f_b), price)
                cells.append(
                    SweepCell(
                        p_ext=p_ext,
                        f_a=f_a,
                        f_b=f_b,
                        expected_diff=diff,
                        sign=classify_sign(diff, scale),
                    )
                )
    return cells


def write_csv(cells: list[SweepCell], destination: str | Path) -> None:
    """Write cells as UTF-8 CSV with Unix newlines.

    Floats are serialized with ``repr``, i.e. the shortest string (at
    most 17 significant digits) that parses back to the same double.
    """
    with open(destination, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for cell in cells:
            writer.writerow(
                (
                    repr(cell.p_ext),
                    repr(cell.f_a),
                    repr(cell.f_b),
                    repr(cell.expected_diff),
                    cell.sign.value,
                )
            )


def read_csv(source: str | Path) -> list[SweepCell]:
    """Parse a sweep CSV back into cells; exact inverse of write_csv."""
    with open(source, "r", encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header != list(CSV_FIELDS):
            raise ValueError(
                f"{source}: expected header {','.join(CSV_FIELDS)}, got {header}"
            )
        cells = []
        for row in reader:
            if len(row) != len(CSV_FIELDS):
                raise ValueError(f"{source}: malformed row {row!r}")
            cells.append(
                SweepCell(
                    p_ext=float(row[0]),
                    f_a=float(row[1]),
                    f_b=float(row[2]),
                    expected_diff=float(row[3]),
                    sign=Sign(row[4]),
                )
            )
    return cells

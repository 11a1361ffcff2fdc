"""Monte Carlo estimator for the expected profit difference.

Used as a statistical cross-check of the analytic expectation.  Draws
independent failure pairs, evaluates the per-outcome profit difference,
and reports the sample mean with its standard error.

Determinism contract: the sample index space is partitioned into fixed
chunks of ``CHUNK_SIZE`` draws.  Chunk ``i`` gets its own PCG64 generator
seeded with ``splitmix64(seed + (i + 1) * GOLDEN_GAMMA)`` (arithmetic
mod 2**64), so the stream of draws depends only on the global seed and
the chunk index, never on how chunks are scheduled across workers.
Per-chunk results are integer outcome counts, which combine exactly, so
estimates are bit-identical for any worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .cpmm import TradePlan
from .engine import ExternalPrice, FailureModel, FailureOutcome, profit_diff_outcome

__all__ = ["CHUNK_SIZE", "GENERATOR_NAME", "McConfig", "McEstimate", "simulate_profit_diff"]

CHUNK_SIZE = 1 << 16

#: Recorded in every estimate so results can be tied to the exact source.
GENERATOR_NAME = f"pcg64/splitmix64-chunks (numpy {np.__version__})"

_MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def _splitmix64(value: int) -> int:
    """Standard splitmix64 finalizer; mixes a 64-bit state into a seed."""
    value = (value ^ (value >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    value = (value ^ (value >> 27)) * 0x94D049BB133111EB & _MASK64
    return value ^ (value >> 31)


def _chunk_seed(seed: int, index: int) -> int:
    return _splitmix64((seed + (index + 1) * _GOLDEN_GAMMA) & _MASK64)


@dataclass(frozen=True)
class McConfig:
    """Sample count, seed, and (optional) worker count for one run."""

    samples: int
    seed: int
    workers: int = 1

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")
        if not 0 <= self.seed < (1 << 64):
            raise ValueError(f"seed must fit in 64 bits, got {self.seed}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")


@dataclass(frozen=True)
class McEstimate:
    """Sample mean and standard error of the profit difference."""

    mean: float
    std_error: float
    samples: int
    seed: int
    generator: str = GENERATOR_NAME


def _chunk_counts(
    seed: int, index: int, size: int, f_a: float, f_b: float
) -> tuple[int, int]:
    """Counts of the two mixed outcomes among ``size`` draws of chunk
    ``index``: (only A failed, only B failed)."""
    rng = np.random.Generator(np.random.PCG64(_chunk_seed(seed, index)))
    a_failed = rng.random(size) < f_a
    b_failed = rng.random(size) < f_b
    only_a = int(np.count_nonzero(a_failed & ~b_failed))
    only_b = int(np.count_nonzero(~a_failed & b_failed))
    return only_a, only_b


def simulate_profit_diff(
    plan: TradePlan, fm: FailureModel, p: ExternalPrice, cfg: McConfig
) -> McEstimate:
    """Estimate the expected atomic-minus-non-atomic profit difference.

    Each draw realizes one failure pair and takes the value of
    :func:`~rollup_arb.engine.profit_diff_outcome` for it; only the two
    mixed outcomes contribute, so per-chunk work reduces to counting
    them.  The unbiased sample variance feeds the standard error; a
    single sample reports a standard error of zero.
    """
    value_only_a = profit_diff_outcome(plan, FailureOutcome(True, False), p)
    value_only_b = profit_diff_outcome(plan, FailureOutcome(False, True), p)

    n = cfg.samples
    chunks = [
        (i, min(CHUNK_SIZE, n - i * CHUNK_SIZE))
        for i in range((n + CHUNK_SIZE - 1) // CHUNK_SIZE)
    ]

    def run(chunk: tuple[int, int]) -> tuple[int, int]:
        index, size = chunk
        return _chunk_counts(cfg.seed, index, size, fm.f_a, fm.f_b)

    if cfg.workers == 1 or len(chunks) == 1:
        results = map(run, chunks)
    else:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(run, chunks))

    n_only_a = 0
    n_only_b = 0
    for only_a, only_b in results:
        n_only_a += only_a
        n_only_b += only_b

    mean = value_only_a * (n_only_a / n) + value_only_b * (n_only_b / n)
    if n > 1:
        sum_sq_dev = (
            n_only_a * (value_only_a - mean) ** 2
            + n_only_b * (value_only_b - mean) ** 2
            + (n - n_only_a - n_only_b) * mean**2
        )
        std_error = math.sqrt(sum_sq_dev / (n - 1) / n)
    else:
        std_error = 0.0

    return McEstimate(mean=mean, std_error=std_error, samples=n, seed=cfg.seed)

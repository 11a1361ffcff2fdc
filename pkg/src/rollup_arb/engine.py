"""Profit accounting under atomic vs independent cross-rollup execution.

Each swap leg of a :class:`~rollup_arb.cpmm.TradePlan` lands on its own
rollup and can fail there.  Under independent sequencing the two legs
succeed or fail separately; under atomic execution either both land or
both revert.  Profits are valued in Y: leftover X inventory is marked at
an exogenous external price.

The quantity of interest is the profit difference "atomic minus
non-atomic" per opportunity.  Only the two mixed failure outcomes
contribute to it, which gives a short closed form for its expectation in
terms of the execution prices; :func:`enumerate_expected_diff` recomputes
the same expectation by brute-force enumeration of the four outcomes and
serves as the independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cpmm import TradePlan

__all__ = [
    "ExternalPrice",
    "FailureModel",
    "FailureOutcome",
    "LiquidityDelta",
    "enumerate_expected_diff",
    "expected_profit_diff",
    "expected_profit_diff_equal_f",
    "liquidity_delta_atomic",
    "liquidity_delta_non_atomic",
    "profit_diff_outcome",
    "profit_value",
]


@dataclass(frozen=True)
class FailureModel:
    """Independent per-rollup failure probabilities of the two legs."""

    f_a: float
    f_b: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.f_a <= 1.0:
            raise ValueError(f"f_a must be in [0, 1], got {self.f_a}")
        if not 0.0 <= self.f_b <= 1.0:
            raise ValueError(f"f_b must be in [0, 1], got {self.f_b}")


@dataclass(frozen=True)
class FailureOutcome:
    """One realized pair of leg failures."""

    a_failed: bool
    b_failed: bool


@dataclass(frozen=True)
class ExternalPrice:
    """Exogenous Y-per-X price used to value leftover X inventory."""

    p_ext: float

    def __post_init__(self) -> None:
        if not self.p_ext > 0:
            raise ValueError(f"p_ext must be positive, got {self.p_ext}")


@dataclass(frozen=True)
class LiquidityDelta:
    """Signed change of the arbitrageur's X and Y holdings."""

    d_x: float
    d_y: float


def liquidity_delta_non_atomic(
    plan: TradePlan, outcome: FailureOutcome
) -> LiquidityDelta:
    """Holdings change when each leg executes independently.

    The pool-B leg receives X and pays Y, the pool-A leg pays X and
    receives Y; each contributes only if its rollup did not fail.
    """
    exec_a = 0.0 if outcome.a_failed else 1.0
    exec_b = 0.0 if outcome.b_failed else 1.0
    return LiquidityDelta(
        d_x=plan.delta_x * exec_b - plan.delta_x * exec_a,
        d_y=plan.delta_y_a * exec_a - plan.delta_y_b * exec_b,
    )


def liquidity_delta_atomic(
    plan: TradePlan, outcome: FailureOutcome
) -> LiquidityDelta:
    """Holdings change under all-or-nothing execution.

    X always nets out (the same ``delta_x`` is bought and sold), so the
    atomic regime never leaves an X position.
    """
    if outcome.a_failed or outcome.b_failed:
        return LiquidityDelta(d_x=0.0, d_y=0.0)
    return LiquidityDelta(d_x=0.0, d_y=plan.delta_y_a - plan.delta_y_b)


def profit_value(delta: LiquidityDelta, p: ExternalPrice) -> float:
    """Y-denominated value of a holdings change: ``d_y + d_x * p_ext``."""
    return delta.d_y + delta.d_x * p.p_ext


def profit_diff_outcome(
    plan: TradePlan, outcome: FailureOutcome, p: ExternalPrice
) -> float:
    """Profit difference (atomic minus non-atomic) for one outcome.

    Zero when both legs land or both fail; the two mixed outcomes
    reduce to ``delta_y_b - delta_x * p_ext`` (only B executed) and
    ``delta_x * p_ext - delta_y_a`` (only A executed).
    """
    atomic = profit_value(liquidity_delta_atomic(plan, outcome), p)
    non_atomic = profit_value(liquidity_delta_non_atomic(plan, outcome), p)
    return atomic - non_atomic


def expected_profit_diff(
    plan: TradePlan, fm: FailureModel, p: ExternalPrice
) -> float:
    """Closed-form expectation of the atomic-minus-non-atomic difference.

    In terms of execution prices::

        delta_x * [ f_a * (P*_B - p_ext)
                    + f_b * (p_ext - P*_A)
                    + f_a * f_b * (P*_A - P*_B) ]
    """
    return plan.delta_x * (
        fm.f_a * (plan.price_star_b - p.p_ext)
        + fm.f_b * (p.p_ext - plan.price_star_a)
        + fm.f_a * fm.f_b * (plan.price_star_a - plan.price_star_b)
    )


def expected_profit_diff_equal_f(
    plan: TradePlan, f: float, p: ExternalPrice
) -> float:
    """Expected difference when both legs share one failure probability.

    The external price drops out of the algebra (``p`` is kept for
    signature parity with :func:`expected_profit_diff`), leaving::

        delta_x * f * (1 - f) * (P*_B - P*_A)

    which is strictly negative for ``f`` in (0, 1) on any profitable
    plan, since profitability means ``P*_A > P*_B``.
    """
    if not 0.0 <= f <= 1.0:
        raise ValueError(f"f must be in [0, 1], got {f}")
    return plan.delta_x * f * (1.0 - f) * (plan.price_star_b - plan.price_star_a)


def enumerate_expected_diff(
    plan: TradePlan, fm: FailureModel, p: ExternalPrice
) -> float:
    """Brute-force expectation over the four failure outcomes.

    Sums :func:`profit_diff_outcome` weighted by the joint probabilities
    of the independent legs.  Kept deliberately naive as the oracle the
    closed form is checked against.
    """
    total = 0.0
    for a_failed in (False, True):
        weight_a = fm.f_a if a_failed else 1.0 - fm.f_a
        for b_failed in (False, True):
            weight_b = fm.f_b if b_failed else 1.0 - fm.f_b
            outcome = FailureOutcome(a_failed=a_failed, b_failed=b_failed)
            total += weight_a * weight_b * profit_diff_outcome(plan, outcome, p)
    return total

"""Constant-product pool math and optimal two-pool arbitrage sizing.

A pool holds reserves ``(x, y)`` of tokens X and Y and quotes the spot
price ``y / x`` (Y per X).  Swaps charge a fee ``f`` on the input leg:
only ``(1 - f) * amount`` enters the reserves, the rest goes to the
liquidity providers, and the product of the reserves is preserved by
every trade.

The arbitrage route pays Y into the cheaper pool (B), receives X, and
sells that same X for Y in the dearer pool (A).  The closed-form optimal
input size makes the two pools' end prices meet, either adjusted for the
fee (the exact maximizer of the round-trip profit) or exactly (a simpler
variant that ignores the fee in the equalization target).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

__all__ = [
    "ArbOpportunity",
    "NoOpportunityError",
    "PoolState",
    "SizingRule",
    "TradePlan",
    "build_trade_plan",
    "end_price_after_x_in",
    "end_price_after_y_in",
    "optimal_delta_y_b",
    "spot_price",
    "swap_x_for_y",
    "swap_y_for_x",
]


class NoOpportunityError(Exception):
    """The optimal trade size is not positive: fees swallow the price gap.

    Distinct from invalid input so callers (sweeps, the CLI) can record a
    zero-trade result instead of failing.
    """


class SizingRule(enum.Enum):
    """Which end-price condition pins the optimal input size."""

    #: ``(1 - f)^2 * end_price_a == end_price_b``.  Exact maximizer of the
    #: round-trip profit ``delta_y_a - delta_y_b``; the default.
    FEE_ADJUSTED = "fee_adjusted"
    #: ``end_price_a == end_price_b``.  Ignores the fee in the equalization
    #: target, slightly oversizing the trade whenever ``f > 0``.
    POOL_PRICE_EQUALITY = "pool_price_equality"


@dataclass(frozen=True)
class PoolState:
    """Reserves and input-leg fee of one constant-product pool."""

    reserve_x: float
    reserve_y: float
    fee: float

    def __post_init__(self) -> None:
        if not self.reserve_x > 0 or not self.reserve_y > 0:
            raise ValueError(
                f"pool reserves must be positive, got "
                f"({self.reserve_x}, {self.reserve_y})"
            )
        if not 0.0 <= self.fee < 1.0:
            raise ValueError(f"fee must be in [0, 1), got {self.fee}")


@dataclass(frozen=True)
class ArbOpportunity:
    """A price gap between two pools of the same token pair.

    ``pool_a`` must be the higher-priced pool; callers orient the pair,
    it is never swapped silently.  Equal prices are accepted so that the
    degenerate case surfaces as :class:`NoOpportunityError` at sizing
    time rather than as an input error.  Both pools must charge the same
    fee.
    """

    pool_a: PoolState
    pool_b: PoolState

    def __post_init__(self) -> None:
        if spot_price(self.pool_a) < spot_price(self.pool_b):
            raise ValueError(
                "pool_a must be the higher-priced pool "
                f"({spot_price(self.pool_a)} < {spot_price(self.pool_b)}); "
                "swap the pools to orient the opportunity"
            )
        if self.pool_a.fee != self.pool_b.fee:
            raise ValueError(
                f"pools must charge the same fee, got "
                f"{self.pool_a.fee} and {self.pool_b.fee}"
            )

    @property
    def fee(self) -> float:
        return self.pool_a.fee


@dataclass(frozen=True)
class TradePlan:
    """The sized arbitrage: pay ``delta_y_b`` into pool B, move
    ``delta_x`` of X across, receive ``delta_y_a`` from pool A.

    ``price_star_b = delta_y_b / delta_x`` and
    ``price_star_a = delta_y_a / delta_x`` are the average execution
    prices actually paid/received; the end prices are the pools' spot
    prices after the trade.
    """

    delta_y_b: float
    delta_x: float
    delta_y_a: float
    price_star_a: float
    price_star_b: float
    end_price_a: float
    end_price_b: float

    @property
    def profit_no_failure(self) -> float:
        """Y-denominated profit when both legs execute (X nets out)."""
        return self.delta_y_a - self.delta_y_b


def spot_price(pool: PoolState) -> float:
    """Current pool price of X denominated in Y: ``reserve_y / reserve_x``."""
    return pool.reserve_y / pool.reserve_x


def swap_y_for_x(pool: PoolState, delta_y: float) -> float:
    """X received for paying ``delta_y`` of Y into the pool.

    The fee is taken from the input, so ``(1 - f) * delta_y`` joins the
    Y reserve and the output keeps ``(x - out) * (y + (1 - f) * delta_y)``
    equal to ``x * y``.
    """
    if not delta_y >= 0:
        raise ValueError(f"delta_y must be non-negative, got {delta_y}")
    net_in = (1.0 - pool.fee) * delta_y
    return pool.reserve_x * net_in / (pool.reserve_y + net_in)


def swap_x_for_y(pool: PoolState, delta_x: float) -> float:
    """Y received for paying ``delta_x`` of X into the pool."""
    if not delta_x >= 0:
        raise ValueError(f"delta_x must be non-negative, got {delta_x}")
    net_in = (1.0 - pool.fee) * delta_x
    return pool.reserve_y * net_in / (pool.reserve_x + net_in)


def end_price_after_y_in(pool: PoolState, delta_y: float) -> float:
    """Pool spot price after a Y-in trade: ``(y + (1-f)*delta_y)^2 / (x*y)``.

    Equal to the spot price of the explicitly updated reserves; the
    closed form just cancels the output term.
    """
    if not delta_y >= 0:
        raise ValueError(f"delta_y must be non-negative, got {delta_y}")
    grown_y = pool.reserve_y + (1.0 - pool.fee) * delta_y
    return grown_y * grown_y / (pool.reserve_x * pool.reserve_y)


def end_price_after_x_in(pool: PoolState, delta_x: float) -> float:
    """Pool spot price after an X-in trade: ``x*y / (x + (1-f)*delta_x)^2``."""
    if not delta_x >= 0:
        raise ValueError(f"delta_x must be non-negative, got {delta_x}")
    grown_x = pool.reserve_x + (1.0 - pool.fee) * delta_x
    return pool.reserve_x * pool.reserve_y / (grown_x * grown_x)


def optimal_delta_y_b(
    opp: ArbOpportunity, rule: SizingRule = SizingRule.FEE_ADJUSTED
) -> float:
    """Closed-form optimal Y amount to pay into the cheaper pool.

    With reserves ``(x_a, y_a)`` and ``(x_b, y_b)`` and shared fee ``f``::

        fee-adjusted:        ((1-f) * sqrt(x_a y_a x_b y_b) - x_a y_b)
                             / ((1-f) x_a + (1-f)^2 x_b)
        pool-price equality: (sqrt(x_a y_a x_b y_b) - x_a y_b)
                             / ((1-f) x_a + (1-f)^2 x_b)

    Raises :class:`NoOpportunityError` when the result is not positive,
    which happens under the fee-adjusted rule once the fee exceeds the
    price gap.
    """
    x_a, y_a = opp.pool_a.reserve_x, opp.pool_a.reserve_y
    x_b, y_b = opp.pool_b.reserve_x, opp.pool_b.reserve_y
    keep = 1.0 - opp.fee

    root = math.sqrt(x_a * y_a * x_b * y_b)
    if rule is SizingRule.FEE_ADJUSTED:
        numerator = keep * root - x_a * y_b
    else:
        numerator = root - x_a * y_b
    size = numerator / (keep * x_a + keep * keep * x_b)

    if size <= 0.0:
        raise NoOpportunityError(
            f"optimal trade size {size} is not positive under rule "
            f"{rule.value}; the fee swallows the price gap"
        )
    return size


def build_trade_plan(
    opp: ArbOpportunity, rule: SizingRule = SizingRule.FEE_ADJUSTED
) -> TradePlan:
    """Size the trade and compose the three legs into a :class:`TradePlan`.

    The X bought from pool B is exactly the X sold into pool A, so a
    single ``delta_x`` links both execution prices.
    """
    delta_y_b = optimal_delta_y_b(opp, rule)
    delta_x = swap_y_for_x(opp.pool_b, delta_y_b)
    delta_y_a = swap_x_for_y(opp.pool_a, delta_x)
    return TradePlan(
        delta_y_b=delta_y_b,
        delta_x=delta_x,
        delta_y_a=delta_y_a,
        price_star_a=delta_y_a / delta_x,
        price_star_b=delta_y_b / delta_x,
        end_price_a=end_price_after_x_in(opp.pool_a, delta_x),
        end_price_b=end_price_after_y_in(opp.pool_b, delta_y_b),
    )

"""Stable-asset bundle variant of the two-regime profit comparison.

Here the arbitrageur's working capital stays in a stable token: each
swap leg is wrapped into a bundle that first buys the needed target
token with stable, performs the pool swap, and sells the proceeds back
to stable.  Token Y trades at one stable price on both rollups; token X
inherits per-rollup prices from the pools, so the X legs of the two
bundles settle at different stable prices.

Bundles succeed or fail as units.  Pure bundle profits and transaction
costs are accounted per regime: atomic (both bundles or neither) versus
non-atomic (each bundle independently), and the expected net difference
is an exact four-outcome sum, no sampling involved.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .cpmm import ArbOpportunity, TradePlan, spot_price
from .engine import FailureModel, FailureOutcome

__all__ = [
    "Bundle",
    "BundleLegs",
    "FeeMode",
    "GasCostModel",
    "Regime",
    "StableParams",
    "bundle_legs",
    "expected_net_diff_stable",
    "pure_bundle_profit",
    "regime_cost",
    "regime_pure_profit",
]


class FeeMode(enum.Enum):
    """How the stable-trade fee applies to the buy legs of a bundle.

    AS_PRINTED multiplies every leg by ``(1 - f_stable)``, buys
    included, which makes the fee reduce what the buyer pays.
    CORRECTED_BUY_SIDE divides the buy legs by ``(1 - f_stable)``
    instead, so fees increase costs and decrease proceeds.
    """

    AS_PRINTED = "as_printed"
    CORRECTED_BUY_SIDE = "corrected_buy_side"


class Bundle(enum.Enum):
    """Which rollup's bundle a per-bundle quantity refers to."""

    A = "a"
    B = "b"


class Regime(enum.Enum):
    ATOMIC = "atomic"
    NON_ATOMIC = "non_atomic"


@dataclass(frozen=True)
class StableParams:
    """Stable-leg pricing: Y's stable price, the stable-trade fee, and
    the fee convention for buy legs."""

    p_y: float
    f_stable: float
    fee_mode: FeeMode = FeeMode.AS_PRINTED

    def __post_init__(self) -> None:
        if not self.p_y > 0:
            raise ValueError(f"p_y must be positive, got {self.p_y}")
        if not 0.0 <= self.f_stable < 1.0:
            raise ValueError(f"f_stable must be in [0, 1), got {self.f_stable}")


@dataclass(frozen=True)
class BundleLegs:
    """Stable amounts at the edges of the two bundles.

    Bundle B starts by paying ``s_b_out`` for the Y it swaps and ends
    receiving ``s_b_in`` for the X it bought; bundle A starts by paying
    ``s_a_out`` for the X it swaps and ends receiving ``s_a_in`` for
    the Y proceeds.
    """

    s_b_out: float
    s_b_in: float
    s_a_out: float
    s_a_in: float

    def __post_init__(self) -> None:
        for name in ("s_b_out", "s_b_in", "s_a_out", "s_a_in"):
            if not getattr(self, name) >= 0:
                raise ValueError(
                    f"{name} must be non-negative, got {getattr(self, name)}"
                )


@dataclass(frozen=True)
class GasCostModel:
    """Stable-denominated transaction costs per rollup, split by whether
    the bundle succeeds or fails.  Deterministic values; only their
    expectations matter downstream."""

    g_a_success: float
    g_a_fail: float
    g_b_success: float
    g_b_fail: float

    def __post_init__(self) -> None:
        for name in ("g_a_success", "g_a_fail", "g_b_success", "g_b_fail"):
            if not getattr(self, name) >= 0:
                raise ValueError(
                    f"{name} must be non-negative, got {getattr(self, name)}"
                )


def bundle_legs(
    plan: TradePlan, opp: ArbOpportunity, sp: StableParams
) -> BundleLegs:
    """Price the four stable legs of the two bundles.

    X is valued per rollup as pool price times Y's stable price.  Note
    the label asymmetry kept on purpose: bundle B's final X sale settles
    at rollup A's X price, and bundle A's initial X buy at rollup B's X
    price.
    """
    keep = 1.0 - sp.f_stable
    p_x_a = spot_price(opp.pool_a) * sp.p_y
    p_x_b = spot_price(opp.pool_b) * sp.p_y

    if sp.fee_mode is FeeMode.AS_PRINTED:
        buy_factor = keep
    else:
        buy_factor = 1.0 / keep

    return BundleLegs(
        s_b_out=plan.delta_y_b * buy_factor * sp.p_y,
        s_b_in=plan.delta_x * keep * p_x_a,
        s_a_out=plan.delta_x * buy_factor * p_x_b,
        s_a_in=plan.delta_y_a * keep * sp.p_y,
    )


def pure_bundle_profit(legs: BundleLegs, which: Bundle, failed: bool) -> float:
    """Stable profit of one bundle: proceeds minus outlay, zero if it
    failed."""
    if failed:
        return 0.0
    if which is Bundle.A:
        return legs.s_a_in - legs.s_a_out
    return legs.s_b_in - legs.s_b_out


def regime_pure_profit(
    legs: BundleLegs, outcome: FailureOutcome, regime: Regime
) -> float:
    """Combined pure bundle profit under the given regime and outcome."""
    if regime is Regime.ATOMIC:
        if outcome.a_failed or outcome.b_failed:
            return 0.0
        return pure_bundle_profit(legs, Bundle.A, False) + pure_bundle_profit(
            legs, Bundle.B, False
        )
    return pure_bundle_profit(legs, Bundle.A, outcome.a_failed) + pure_bundle_profit(
        legs, Bundle.B, outcome.b_failed
    )


def regime_cost(
    g: GasCostModel, outcome: FailureOutcome, regime: Regime
) -> float:
    """Combined transaction cost under the given regime and outcome.

    Atomically bundled submissions cost the plain sum of the per-rollup
    costs (no extra margin is modeled), with both rollups on the success
    schedule only when neither bundle failed.
    """
    if regime is Regime.ATOMIC:
        if outcome.a_failed or outcome.b_failed:
            return g.g_a_fail + g.g_b_fail
        return g.g_a_success + g.g_b_success
    cost_a = g.g_a_fail if outcome.a_failed else g.g_a_success
    cost_b = g.g_b_fail if outcome.b_failed else g.g_b_success
    return cost_a + cost_b


def expected_net_diff_stable(
    legs: BundleLegs, g: GasCostModel, fm: FailureModel
) -> float:
    """Expected net advantage of atomic over non-atomic execution.

    Exact enumeration of the four independent failure outcomes of
    ``E[(profit - cost)_atomic - (profit - cost)_non_atomic]``; the four
    weights sum to one, so there is no sampling error.
    """
    total = 0.0
    for a_failed in (False, True):
        weight_a = fm.f_a if a_failed else 1.0 - fm.f_a
        for b_failed in (False, True):
            weight_b = fm.f_b if b_failed else 1.0 - fm.f_b
            outcome = FailureOutcome(a_failed=a_failed, b_failed=b_failed)
            net_atomic = regime_pure_profit(
                legs, outcome, Regime.ATOMIC
            ) - regime_cost(g, outcome, Regime.ATOMIC)
            net_non_atomic = regime_pure_profit(
                legs, outcome, Regime.NON_ATOMIC
            ) - regime_cost(g, outcome, Regime.NON_ATOMIC)
            total += weight_a * weight_b * (net_atomic - net_non_atomic)
    return total

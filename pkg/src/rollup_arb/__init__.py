"""Cross-rollup arbitrage between two constant-product pools.

Sizes the optimal two-leg trade, accounts for profits under atomic
vs independent execution, and provides the analytic expected profit
difference together with a Monte Carlo cross-check and parameter
sweeps.
"""

from .cpmm import (
    ArbOpportunity,
    NoOpportunityError,
    PoolState,
    SizingRule,
    TradePlan,
    build_trade_plan,
    end_price_after_x_in,
    end_price_after_y_in,
    optimal_delta_y_b,
    spot_price,
    swap_x_for_y,
    swap_y_for_x,
)
from .engine import (
    ExternalPrice,
    FailureModel,
    FailureOutcome,
    LiquidityDelta,
    enumerate_expected_diff,
    expected_profit_diff,
    expected_profit_diff_equal_f,
    liquidity_delta_atomic,
    liquidity_delta_non_atomic,
    profit_diff_outcome,
    profit_value,
)
from .montecarlo import McConfig, McEstimate, simulate_profit_diff
from .scenario import Scenario, ScenarioError, load_scenario
from .stable import (
    Bundle,
    BundleLegs,
    FeeMode,
    GasCostModel,
    Regime,
    StableParams,
    bundle_legs,
    expected_net_diff_stable,
    pure_bundle_profit,
    regime_cost,
    regime_pure_profit,
)
from .sweep import (
    GridSpec,
    Sign,
    SweepCell,
    SweepConfig,
    classify_sign,
    read_csv,
    run_sweep,
    write_csv,
)

__version__ = "0.1.0"

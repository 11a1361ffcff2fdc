"""Command-line interface.

Every subcommand reads one JSON scenario file (see
:mod:`rollup_arb.scenario`) and writes a human-readable report to
stdout, or the same content as a JSON object with ``--json``.

Exit codes: 0 on success, 2 when the scenario is invalid or the model
says there is no trade to make, 1 on internal errors.  Scripts rely on
the 2-vs-1 distinction.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .cpmm import NoOpportunityError, build_trade_plan, spot_price
from .engine import (
    FailureOutcome,
    enumerate_expected_diff,
    expected_profit_diff,
    profit_diff_outcome,
)
from .montecarlo import McConfig, simulate_profit_diff
from .scenario import Scenario, ScenarioError, load_scenario
from .stable import (
    Regime,
    bundle_legs,
    expected_net_diff_stable,
    regime_cost,
    regime_pure_profit,
)
from .sweep import GridSpec, SweepConfig, run_sweep, write_csv

__all__ = ["main"]

_OUTCOMES = (
    ("none_failed", FailureOutcome(False, False)),
    ("a_failed", FailureOutcome(True, False)),
    ("b_failed", FailureOutcome(False, True)),
    ("both_failed", FailureOutcome(True, True)),
)


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def _emit(payload: dict[str, Any], as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    for key, value in payload.items():
        if isinstance(value, float):
            print(f"{key:24s} = {_fmt(value)}")
        elif isinstance(value, list):
            print(f"{key}:")
            for line in value:
                print(f"  {line}")
        else:
            print(f"{key:24s} = {value}")


def _outcome_probability(name: str, f_a: float, f_b: float) -> float:
    prob_a = {"a_failed": f_a, "both_failed": f_a}.get(name, 1.0 - f_a)
    prob_b = {"b_failed": f_b, "both_failed": f_b}.get(name, 1.0 - f_b)
    return prob_a * prob_b


def cmd_plan(scenario: Scenario, as_json: bool) -> int:
    plan = build_trade_plan(scenario.opp, scenario.rule)
    payload: dict[str, Any] = {
        "sizing_rule": scenario.rule.value,
        "delta_y_b": plan.delta_y_b,
        "delta_x": plan.delta_x,
        "delta_y_a": plan.delta_y_a,
        "spot_price_b": spot_price(scenario.opp.pool_b),
        "price_star_b": plan.price_star_b,
        "end_price_b": plan.end_price_b,
        "end_price_a": plan.end_price_a,
        "price_star_a": plan.price_star_a,
        "spot_price_a": spot_price(scenario.opp.pool_a),
        "profit_no_failure": plan.profit_no_failure,
    }
    _emit(payload, as_json)
    return 0


def cmd_expect(scenario: Scenario, as_json: bool) -> int:
    plan = build_trade_plan(scenario.opp, scenario.rule)
    fm, p = scenario.failure, scenario.p_ext

    outcomes = []
    for name, outcome in _OUTCOMES:
        probability = _outcome_probability(name, fm.f_a, fm.f_b)
        diff = profit_diff_outcome(plan, outcome, p)
        outcomes.append(
            {
                "outcome": name,
                "probability": probability,
                "profit_diff": diff,
                "contribution": probability * diff,
            }
        )

    payload: dict[str, Any] = {
        "p_ext": p.p_ext,
        "f_a": fm.f_a,
        "f_b": fm.f_b,
        "expected_diff": expected_profit_diff(plan, fm, p),
        "expected_diff_enumerated": enumerate_expected_diff(plan, fm, p),
    }
    if as_json:
        payload["outcomes"] = outcomes
        _emit(payload, True)
    else:
        payload["outcomes"] = [
            f"{entry['outcome']:12s} probability={_fmt(entry['probability'])} "
            f"profit_diff={_fmt(entry['profit_diff'])} "
            f"contribution={_fmt(entry['contribution'])}"
            for entry in outcomes
        ]
        _emit(payload, False)
    return 0


def cmd_simulate(scenario: Scenario, args: argparse.Namespace, as_json: bool) -> int:
    base = scenario.monte_carlo or McConfig(samples=100_000, seed=0)
    cfg = McConfig(
        samples=args.samples if args.samples is not None else base.samples,
        seed=args.seed if args.seed is not None else base.seed,
        workers=base.workers,
    )
    plan = build_trade_plan(scenario.opp, scenario.rule)
    estimate = simulate_profit_diff(plan, scenario.failure, scenario.p_ext, cfg)
    payload = {
        "samples": estimate.samples,
        "seed": estimate.seed,
        "generator": estimate.generator,
        "mean": estimate.mean,
        "std_error": estimate.std_error,
        "analytic": expected_profit_diff(plan, scenario.failure, scenario.p_ext),
    }
    _emit(payload, as_json)
    return 0


def cmd_sweep(scenario: Scenario, args: argparse.Namespace, as_json: bool) -> int:
    if args.p_ext:
        try:
            p_ext_values = tuple(float(v) for v in args.p_ext.split(","))
        except ValueError:
            raise ScenarioError(f"--p-ext expects comma-separated numbers, got {args.p_ext!r}") from None
    else:
        p_ext_values = (scenario.p_ext.p_ext,)
    grid = GridSpec(count=args.grid)

    cfg = SweepConfig(
        opp=scenario.opp,
        p_ext_values=p_ext_values,
        rule=scenario.rule,
        f_a_grid=grid,
        f_b_grid=grid,
    )
    cells = run_sweep(cfg)
    write_csv(cells, args.out)
    _emit({"cells": len(cells), "out": args.out}, as_json)
    return 0


def cmd_stable(scenario: Scenario, as_json: bool) -> int:
    if scenario.stable is None:
        raise ScenarioError("the 'stable' command needs a 'stable' section in the scenario")
    plan = build_trade_plan(scenario.opp, scenario.rule)
    legs = bundle_legs(plan, scenario.opp, scenario.stable.params)
    gas = scenario.stable.gas
    fm = scenario.failure

    outcomes = []
    for name, outcome in _OUTCOMES:
        net_atomic = regime_pure_profit(legs, outcome, Regime.ATOMIC) - regime_cost(
            gas, outcome, Regime.ATOMIC
        )
        net_non_atomic = regime_pure_profit(
            legs, outcome, Regime.NON_ATOMIC
        ) - regime_cost(gas, outcome, Regime.NON_ATOMIC)
        outcomes.append(
            {
                "outcome": name,
                "probability": _outcome_probability(name, fm.f_a, fm.f_b),
                "net_atomic": net_atomic,
                "net_non_atomic": net_non_atomic,
            }
        )

    payload: dict[str, Any] = {
        "fee_mode": scenario.stable.params.fee_mode.value,
        "s_b_out": legs.s_b_out,
        "s_b_in": legs.s_b_in,
        "s_a_out": legs.s_a_out,
        "s_a_in": legs.s_a_in,
        "expected_net_diff": expected_net_diff_stable(legs, gas, fm),
    }
    if as_json:
        payload["outcomes"] = outcomes
        _emit(payload, True)
    else:
        payload["outcomes"] = [
            f"{entry['outcome']:12s} probability={_fmt(entry['probability'])} "
            f"net_atomic={_fmt(entry['net_atomic'])} "
            f"net_non_atomic={_fmt(entry['net_non_atomic'])}"
            for entry in outcomes
        ]
        _emit(payload, False)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rollup-arb",
        description="Two-pool cross-rollup arbitrage model: sizing, "
        "regime comparison, simulation, and sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--scenario", required=True, help="path to a JSON scenario file")
        cmd.add_argument("--json", action="store_true", help="emit JSON instead of text")
        return cmd

    add("plan", "size the optimal trade and report prices and profit")
    add("expect", "analytic expected profit difference with outcome breakdown")

    simulate = add("simulate", "Monte Carlo estimate next to the analytic value")
    simulate.add_argument("--samples", type=int, default=None, help="number of draws")
    simulate.add_argument("--seed", type=int, default=None, help="64-bit generator seed")

    sweep = add("sweep", "grid of expected differences, written as CSV")
    sweep.add_argument("--out", required=True, help="destination CSV path")
    sweep.add_argument("--p-ext", default=None, help="comma-separated external prices")
    sweep.add_argument("--grid", type=int, default=101, help="points per probability axis")

    add("stable", "stable-asset bundle accounting (needs the scenario's stable section)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        scenario = load_scenario(args.scenario)
        if args.command == "plan":
            return cmd_plan(scenario, args.json)
        if args.command == "expect":
            return cmd_expect(scenario, args.json)
        if args.command == "simulate":
            return cmd_simulate(scenario, args, args.json)
        if args.command == "sweep":
            return cmd_sweep(scenario, args, args.json)
        if args.command == "stable":
            return cmd_stable(scenario, args.json)
        raise RuntimeError(f"unhandled command {args.command}")
    except NoOpportunityError as exc:
        print(f"error: no arbitrage opportunity ({exc})", file=sys.stderr)
        return 2
    except ScenarioError as exc:
        print(f"error: invalid scenario: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

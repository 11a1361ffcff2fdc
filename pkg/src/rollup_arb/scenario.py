"""JSON scenario files: the single input format of the CLI.

A scenario bundles everything one analysis run needs::

    {
      "pools":   {"x_a": 99009.9, "y_a": 100000, "x_b": 100000,
                  "y_b": 100000, "fee": 0.0005},
      "sizing_rule": "fee_adjusted",          // optional, default shown
      "failure": {"f_a": 0.3, "f_b": 0.6},
      "p_ext":   1.005,
      "stable": {                              // optional section
        "p_y": 1.0, "f_stable": 0.001, "fee_mode": "as_printed",
        "gas": {"a_success": 0.1, "a_fail": 0.05,
                "b_success": 0.1, "b_fail": 0.05}
      },
      "monte_carlo": {"samples": 1000000, "seed": 42}   // optional
    }

Unknown fields are rejected everywhere so typos surface as parse errors
rather than silently ignored knobs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .cpmm import ArbOpportunity, PoolState, SizingRule
from .engine import ExternalPrice, FailureModel
from .montecarlo import McConfig
from .stable import FeeMode, GasCostModel, StableParams

__all__ = ["Scenario", "ScenarioError", "StableSection", "load_scenario"]


class ScenarioError(Exception):
    """A scenario file is missing, malformed, or fails validation."""


@dataclass(frozen=True)
class StableSection:
    params: StableParams
    gas: GasCostModel


@dataclass(frozen=True)
class Scenario:
    opp: ArbOpportunity
    rule: SizingRule
    failure: FailureModel
    p_ext: ExternalPrice
    stable: StableSection | None
    monte_carlo: McConfig | None


def _require_object(value: Any, where: str) -> dict[str, Any]:
    if not isinstance(value, dict):
        raise ScenarioError(f"{where} must be a JSON object, got {type(value).__name__}")
    return value


def _check_fields(obj: dict[str, Any], where: str, required: set[str], optional: set[str] = frozenset()) -> None:
    unknown = set(obj) - required - optional
    if unknown:
        raise ScenarioError(f"unknown field(s) in {where}: {', '.join(sorted(unknown))}")
    missing = required - set(obj)
    if missing:
        raise ScenarioError(f"missing field(s) in {where}: {', '.join(sorted(missing))}")


def _number(obj: dict[str, Any], key: str, where: str) -> float:
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioError(f"{where}.{key} must be a number, got {value!r}")
    return float(value)


def _integer(obj: dict[str, Any], key: str, where: str) -> int:
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioError(f"{where}.{key} must be an integer, got {value!r}")
    return value


def _enum_field(obj: dict[str, Any], key: str, where: str, enum_type: Any) -> Any:
    value = obj[key]
    try:
        return enum_type(value)
    except ValueError:
        choices = ", ".join(member.value for member in enum_type)
        raise ScenarioError(f"{where}.{key} must be one of: {choices}; got {value!r}") from None


def _parse_stable(obj: dict[str, Any]) -> StableSection:
    _check_fields(obj, "stable", {"p_y", "f_stable", "gas"}, {"fee_mode"})
    gas_obj = _require_object(obj["gas"], "stable.gas")
    _check_fields(gas_obj, "stable.gas", {"a_success", "a_fail", "b_success", "b_fail"})
    fee_mode = FeeMode.AS_PRINTED
    if "fee_mode" in obj:
        fee_mode = _enum_field(obj, "fee_mode", "stable", FeeMode)
    params = StableParams(
        p_y=_number(obj, "p_y", "stable"),
        f_stable=_number(obj, "f_stable", "stable"),
        fee_mode=fee_mode,
    )
    gas = GasCostModel(
        g_a_success=_number(gas_obj, "a_success", "stable.gas"),
        g_a_fail=_number(gas_obj, "a_fail", "stable.gas"),
        g_b_success=_number(gas_obj, "b_success", "stable.gas"),
        g_b_fail=_number(gas_obj, "b_fail", "stable.gas"),
    )
    return StableSection(params=params, gas=gas)


def _parse_monte_carlo(obj: dict[str, Any]) -> McConfig:
    _check_fields(obj, "monte_carlo", {"samples", "seed"}, {"workers"})
    workers = _integer(obj, "workers", "monte_carlo") if "workers" in obj else 1
    return McConfig(
        samples=_integer(obj, "samples", "monte_carlo"),
        seed=_integer(obj, "seed", "monte_carlo"),
        workers=workers,
    )


def parse_scenario(data: Any, where: str = "scenario") -> Scenario:
    """Validate a decoded JSON document into a :class:`Scenario`."""
    obj = _require_object(data, where)
    _check_fields(
        obj,
        where,
        {"pools", "failure", "p_ext"},
        {"sizing_rule", "stable", "monte_carlo"},
    )

    pools = _require_object(obj["pools"], "pools")
    _check_fields(pools, "pools", {"x_a", "y_a", "x_b", "y_b", "fee"})
    failure = _require_object(obj["failure"], "failure")
    _check_fields(failure, "failure", {"f_a", "f_b"})

    rule = SizingRule.FEE_ADJUSTED
    if "sizing_rule" in obj:
        rule = _enum_field(obj, "sizing_rule", where, SizingRule)

    try:
        fee = _number(pools, "fee", "pools")
        opp = ArbOpportunity(
            pool_a=PoolState(
                reserve_x=_number(pools, "x_a", "pools"),
                reserve_y=_number(pools, "y_a", "pools"),
                fee=fee,
            ),
            pool_b=PoolState(
                reserve_x=_number(pools, "x_b", "pools"),
                reserve_y=_number(pools, "y_b", "pools"),
                fee=fee,
            ),
        )
        failure_model = FailureModel(
            f_a=_number(failure, "f_a", "failure"),
            f_b=_number(failure, "f_b", "failure"),
        )
        p_ext = ExternalPrice(_number(obj, "p_ext", where))
        stable = (
            _parse_stable(_require_object(obj["stable"], "stable"))
            if "stable" in obj
            else None
        )
        monte_carlo = (
            _parse_monte_carlo(_require_object(obj["monte_carlo"], "monte_carlo"))
            if "monte_carlo" in obj
            else None
        )
    except ValueError as exc:
        raise ScenarioError(str(exc)) from exc

    return Scenario(
        opp=opp,
        rule=rule,
        failure=failure_model,
        p_ext=p_ext,
        stable=stable,
        monte_carlo=monte_carlo,
    )


def load_scenario(path: str | Path) -> Scenario:
    """Load and validate a scenario file."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path} is not valid JSON: {exc}") from exc
    return parse_scenario(data)

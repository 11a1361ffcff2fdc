import json

import pytest

from rollup_arb.cpmm import ArbOpportunity, PoolState

#: Demo pool configuration used throughout: 1% price gap, 0.05% fee,
#: 100k Y reserves on both sides.
BENCHMARK_FEE = 0.0005
BENCHMARK_PRICE_A = 1.01
BENCHMARK_PRICE_B = 1.0
BENCHMARK_Y = 100_000.0


@pytest.fixture
def benchmark_opportunity() -> ArbOpportunity:
    return ArbOpportunity(
        pool_a=PoolState(
            reserve_x=BENCHMARK_Y / BENCHMARK_PRICE_A,
            reserve_y=BENCHMARK_Y,
            fee=BENCHMARK_FEE,
        ),
        pool_b=PoolState(
            reserve_x=BENCHMARK_Y / BENCHMARK_PRICE_B,
            reserve_y=BENCHMARK_Y,
            fee=BENCHMARK_FEE,
        ),
    )


def benchmark_scenario_dict(**overrides) -> dict:
    scenario = {
        "pools": {
            "x_a": BENCHMARK_Y / BENCHMARK_PRICE_A,
            "y_a": BENCHMARK_Y,
            "x_b": BENCHMARK_Y / BENCHMARK_PRICE_B,
            "y_b": BENCHMARK_Y,
            "fee": BENCHMARK_FEE,
        },
        "failure": {"f_a": 0.3, "f_b": 0.6},
        "p_ext": 1.005,
    }
    scenario.update(overrides)
    return scenario


@pytest.fixture
def scenario_file(tmp_path):
    """Write a scenario dict to a temp file and return its path."""

    def write(data: dict, name: str = "scenario.json") -> str:
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return write

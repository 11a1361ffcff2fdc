"""Probability/price grids, sign classification, and CSV round-trips."""

import math

import pytest

from rollup_arb.cpmm import (
    ArbOpportunity,
    NoOpportunityError,
    PoolState,
    build_trade_plan,
)
from rollup_arb.sweep import (
    CSV_FIELDS,
    GridSpec,
    Sign,
    SweepConfig,
    classify_sign,
    read_csv,
    run_sweep,
    write_csv,
)

THREE_PRICES = (1.02, 1.005, 0.99)


def small_config(opp, p_ext_values=(1.005,), count=5):
    grid = GridSpec(count=count)
    return SweepConfig(opp=opp, p_ext_values=p_ext_values, f_a_grid=grid, f_b_grid=grid)


class TestGridSpec:
    def test_values_inclusive_and_even(self):
        values = GridSpec(0.0, 1.0, 5).values()
        assert values == [0.0, 0.25, 0.5, 0.75, 1.0]

    def test_default_resolution(self):
        values = GridSpec().values()
        assert len(values) == 101
        assert values[0] == 0.0 and values[-1] == 1.0

    def test_validation(self):
        with pytest.raises(ValueError):
            GridSpec(count=1)
        with pytest.raises(ValueError):
            GridSpec(start=-0.1)
        with pytest.raises(ValueError):
            GridSpec(start=0.9, stop=0.5)
        with pytest.raises(ValueError):
            GridSpec(stop=1.5)


class TestClassifySign:
    def test_zero(self):
        assert classify_sign(0.0) is Sign.ZERO

    def test_negative(self):
        assert classify_sign(-3.2e-4) is Sign.NEGATIVE

    def test_below_tolerance_is_zero(self):
        assert classify_sign(1e-20) is Sign.ZERO

    def test_scale_guard_widens_zero_band(self):
        assert classify_sign(1e-10, scale=1e7) is Sign.ZERO
        assert classify_sign(1e-10, scale=1.0) is Sign.POSITIVE


class TestRunSweep:
    def test_cell_count_and_order(self, benchmark_opportunity):
        cfg = small_config(benchmark_opportunity, p_ext_values=(1.005, 1.02), count=3)
        cells = run_sweep(cfg)
        assert len(cells) == 2 * 3 * 3
        # row-major: p_ext outermost, then f_a, then f_b
        assert [c.p_ext for c in cells[:9]] == [1.005] * 9
        assert [c.f_a for c in cells[:3]] == [0.0, 0.0, 0.0]
        assert [c.f_b for c in cells[:3]] == [0.0, 0.5, 1.0]
        assert cells[9].p_ext == 1.02

    def test_no_failure_corner_is_exactly_zero(self, benchmark_opportunity):
        cells = run_sweep(small_config(benchmark_opportunity))
        for cell in cells:
            if cell.f_a == 0.0 and cell.f_b == 0.0:
                assert cell.expected_diff == 0.0
                assert cell.sign is Sign.ZERO

    def test_equal_probability_diagonal_is_negative(self, benchmark_opportunity):
        cells = run_sweep(small_config(benchmark_opportunity, count=11))
        diagonal = [
            c for c in cells if c.f_a == c.f_b and 0.0 < c.f_a < 1.0
        ]
        assert diagonal
        assert all(c.sign is Sign.NEGATIVE for c in diagonal)

    def test_no_opportunity_aborts(self):
        pool = PoolState(100.0, 100.0, 0.0)
        cfg = small_config(ArbOpportunity(pool_a=pool, pool_b=pool))
        with pytest.raises(NoOpportunityError):
            run_sweep(cfg)

    def test_rejects_empty_prices(self, benchmark_opportunity):
        with pytest.raises(ValueError):
            SweepConfig(opp=benchmark_opportunity, p_ext_values=())


class TestSignRegions:
    """Qualitative structure of the three characteristic grids."""

    @pytest.fixture
    def plan(self, benchmark_opportunity):
        return build_trade_plan(benchmark_opportunity)

    def regions(self, benchmark_opportunity, p_ext, count=21):
        cells = run_sweep(small_config(benchmark_opportunity, (p_ext,), count))
        values = GridSpec(count=count).values()
        index = {(c.f_a, c.f_b): c for c in cells}
        return values, index

    def test_middle_price_has_no_positive_cells(self, benchmark_opportunity, plan):
        assert plan.price_star_b < 1.005 < plan.price_star_a
        values, index = self.regions(benchmark_opportunity, 1.005)
        open_cells = [
            index[(fa, fb)]
            for fa in values
            for fb in values
            if 0.0 < fa < 1.0 and 0.0 < fb < 1.0
        ]
        assert all(c.sign is Sign.NEGATIVE for c in open_cells)

    def test_high_price_positive_in_low_fa_high_fb_corner(self, benchmark_opportunity, plan):
        assert 1.02 > plan.price_star_a
        values, index = self.regions(benchmark_opportunity, 1.02)
        interior = [v for v in values if 0.0 < v < 1.0]
        low, high = interior[0], interior[-1]
        assert index[(low, high)].sign is Sign.POSITIVE
        assert index[(high, low)].sign is Sign.NEGATIVE
        signs = {index[(fa, fb)].sign for fa in interior for fb in interior}
        assert signs == {Sign.POSITIVE, Sign.NEGATIVE}

    def test_low_price_structure_is_inverted(self, benchmark_opportunity, plan):
        assert 0.99 < plan.price_star_b
        values, index = self.regions(benchmark_opportunity, 0.99)
        interior = [v for v in values if 0.0 < v < 1.0]
        low, high = interior[0], interior[-1]
        assert index[(high, low)].sign is Sign.POSITIVE
        assert index[(low, high)].sign is Sign.NEGATIVE


class TestCsv:
    def test_header_and_newlines(self, benchmark_opportunity, tmp_path):
        cells = run_sweep(small_config(benchmark_opportunity, count=3))
        path = tmp_path / "sweep.csv"
        write_csv(cells, path)
        raw = path.read_bytes()
        assert raw.startswith(b"p_ext,f_a,f_b,expected_diff,sign\n")
        assert b"\r" not in raw
        assert raw.decode("utf-8").count("\n") == len(cells) + 1

    def test_round_trip_is_bit_exact(self, benchmark_opportunity, tmp_path):
        cells = run_sweep(small_config(benchmark_opportunity, (1.005, 1.02), count=7))
        path = tmp_path / "sweep.csv"
        write_csv(cells, path)
        restored = read_csv(path)
        assert restored == cells

    def test_sign_labels(self, benchmark_opportunity, tmp_path):
        cells = run_sweep(small_config(benchmark_opportunity, (1.02,), count=5))
        path = tmp_path / "sweep.csv"
        write_csv(cells, path)
        labels = {line.rsplit(",", 1)[-1] for line in path.read_text().splitlines()[1:]}
        assert labels <= {"pos", "neg", "zero"}

    def test_read_rejects_wrong_header(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("a,b,c\n1,2,3\n")
        with pytest.raises(ValueError, match="header"):
            read_csv(path)

    def test_csv_fields_contract(self):
        assert ",".join(CSV_FIELDS) == "p_ext,f_a,f_b,expected_diff,sign"

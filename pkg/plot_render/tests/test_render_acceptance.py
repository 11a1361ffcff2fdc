"""End-to-end: render the benchmark sweep produced by the rollup-arb CLI.

The sweep CSV is generated through the upstream command-line interface
(the only coupling point), then rendered; the middle-price panel must
map every cell onto the non-positive half of the diverging color scale.
"""

import json
import subprocess
import sys

import numpy as np
from matplotlib.colors import Normalize

from plot_render.render import HeatmapSpec, parse_sweep_csv, render, symmetric_range

BENCHMARK_SCENARIO = {
    "pools": {
        "x_a": 100000.0 / 1.01,
        "y_a": 100000.0,
        "x_b": 100000.0,
        "y_b": 100000.0,
        "fee": 0.0005,
    },
    "failure": {"f_a": 0.3, "f_b": 0.6},
    "p_ext": 1.005,
}


def test_three_panel_benchmark_figure(tmp_path):
    scenario = tmp_path / "scenario.json"
    scenario.write_text(json.dumps(BENCHMARK_SCENARIO), encoding="utf-8")
    csv_path = tmp_path / "benchmark.csv"

    result = subprocess.run(
        [
            sys.executable,
            "-m",
            "rollup_arb.cli",
            "sweep",
            "--scenario",
            str(scenario),
            "--out",
            str(csv_path),
            "--p-ext",
            "1.02,1.005,0.99",
            "--grid",
            "101",
        ],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0, result.stderr

    panels = parse_sweep_csv(csv_path)
    assert [panel.p_ext for panel in panels] == [1.02, 1.005, 0.99]
    assert all(panel.grid.shape == (101, 101) for panel in panels)

    out = tmp_path / "benchmark.png"
    rendered = render(HeatmapSpec(csv_paths=(str(csv_path),), out_path=str(out)))
    assert rendered.exists()
    assert rendered.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

    # middle-price panel: every cell colored at or below the zero center
    middle = panels[1]
    assert float(np.max(middle.grid)) <= 0.0
    bound = symmetric_range(panels)
    norm = Normalize(vmin=-bound, vmax=bound)
    assert float(np.max(norm(middle.grid))) <= 0.5

    # the flanking panels carry both signs
    assert float(np.max(panels[0].grid)) > 0 and float(np.min(panels[0].grid)) < 0
    assert float(np.max(panels[2].grid)) > 0 and float(np.min(panels[2].grid)) < 0

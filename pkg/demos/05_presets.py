"""
Figures as presets
==================

Each preset names a base configuration, a metric plan and an optional sweep.
``run_preset`` trains what is missing, computes the metrics, writes CSV/JSON
tables and SVG plots under runs-out/presets/<name>, and evaluates the checks
attached to the preset. The same thing is available from the shell as
``python -m groklab preset <name> --check``.
"""

import sys
from pathlib import Path

from groklab.experiments import PRESETS, run_preset

for name, preset in sorted(PRESETS.items()):
    print(f"{name:18s} {preset.description}")

name = sys.argv[1] if len(sys.argv) > 1 else "smoke"
res = run_preset(name, Path(__file__).resolve().parent.parent / "runs-out")
for row in res.rows:
    print(row.label, row.t_train, row.t_test, row.delay, row.status)
for check in res.checks:
    print(check.line())
print("plots in", res.directory / "plots")

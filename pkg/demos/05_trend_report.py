# coding: utf-8

# # Cross-seed trend report
#
# Summarize a cached (mode x seed) grid: mean and std per mode, plus the
# directional checks. Train the grids first with
# `python tests/acceptance_grid.py default` (or `large_objects`).

import sys
from pathlib import Path

from slotcycle.harness.report import report

ROOT = Path(__file__).resolve().parents[1]
name = sys.argv[1] if len(sys.argv) > 1 else "default"
runs = sorted(p.parents[1] for p in (ROOT / "runs" / name).glob("*/seed_*/eval/metrics.json"))
if not runs:
    sys.exit(f"no finished runs under runs/{name}")

rep = report(runs, ROOT / "runs" / name / "report", expected_seeds=3)
print((ROOT / "runs" / name / "report" / "summary.md").read_text())
for check, result in rep.trends.items():
    print(f"{check:>9}: {'PASS' if result['pass'] else 'FAIL'}", result["terms"])
for w in rep.warnings:
    print("warning:", w)

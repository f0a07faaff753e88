#!/usr/bin/env python3
"""Run every bundled scenario and print a one-line summary per file.

Usage: python3 scripts/run_all_scenarios.py [--json-dir OUT]
With --json-dir, the full JSON report of each scenario is written there.
"""

import argparse
import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from monogenic.cli import run_scenario  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--json-dir", default=None)
    args = ap.parse_args()

    root = Path(__file__).resolve().parent.parent
    out_dir = Path(args.json_dir) if args.json_dir else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)

    worst = 0
    for path in sorted((root / "scenarios").glob("*.json")):
        with open(path, "r", encoding="utf-8") as fh:
            scenario = json.load(fh)
        t0 = time.perf_counter()
        report, code = run_scenario(scenario)
        elapsed = time.perf_counter() - t0
        worst = max(worst, code)
        status = "ok" if code == 0 else f"exit {code}"
        print(f"{path.name:28} {status:8} {elapsed:7.2f}s  task={report['task']}")
        if out_dir:
            with open(out_dir / (path.stem + ".report.json"), "w", encoding="utf-8") as fh:
                json.dump(report, fh, sort_keys=True, indent=2)
    return worst


if __name__ == "__main__":
    sys.exit(main())

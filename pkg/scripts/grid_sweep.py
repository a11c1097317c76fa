#!/usr/bin/env python3
"""Sweep the parameter grid: write the invariant table and a verification log.

Produces <out-dir>/table.csv (one row per valid (e, b, t)) and
<out-dir>/verify.txt (every identity check with its case count).  Exits
nonzero if any identity fails, so the sweep doubles as a build gate.
"""

import argparse
import sys
from pathlib import Path

from fescroll.cli import _TABLE_HEADER, _csv_text, _table_rows
from fescroll.verify import run_all


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--e-max", type=int, default=4)
    parser.add_argument("--t-max", type=int, default=6)
    parser.add_argument("--out-dir", type=Path, default=Path("sweep_out"))
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)

    rows = _table_rows(args.e_max, args.t_max, regime_only=False)
    table_path = args.out_dir / "table.csv"
    table_path.write_text(_csv_text(_TABLE_HEADER, rows) + "\n", encoding="utf-8")
    print(f"wrote {table_path} ({len(rows)} rows)")

    results = run_all(args.e_max, args.t_max)
    lines = []
    failed = 0
    for result in results:
        status = "PASS" if result.ok else "FAIL"
        lines.append(f"{status}  [{result.cases:6d} cases]  {result.name}")
        if not result.ok:
            failed += 1
            lines.extend(f"      {detail}" for detail in result.failures)
    lines.append(f"{len(results)} identities, {failed} failed")
    verify_path = args.out_dir / "verify.txt"
    verify_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {verify_path} ({len(results)} identities, {failed} failed)")
    return 0 if failed == 0 else 3


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Emit the standard figure datasets and the observables table as CSV files.

Produces, under the output directory (default ./data):

  level_scan_multi.csv    ratio vs parent level for several radial energies
  level_scan_5e4.csv      ratio vs parent level at p_perp^2 = 5e4 MeV^2
  field_scan_r0p1.csv     ratio vs field at fixed orbit radius 0.1 /MeV
  lowest_level_scan.csv   lowest-level ratio (exact/factored/general) vs field
  observables_table.csv   the four reference rows in SI units

Every dataset is a plain CLI invocation, so any of them can be regenerated
or customized directly with ``magdecay <subcommand> ...``.
"""

import argparse
import contextlib
import io
import sys
from pathlib import Path

from magdecay.cli import main as cli_main

DATASETS = {
    "level_scan_multi.csv": [
        "scan-m", "--p-perp2", "1e3", "--p-perp2", "5e3", "--p-perp2", "1e4",
        "--p-perp2", "3e4", "--m-min", "0", "--m-max", "80",
    ],
    "level_scan_5e4.csv": [
        "scan-m", "--p-perp2", "5e4", "--m-min", "0", "--m-max", "120",
    ],
    "field_scan_r0p1.csv": [
        "scan-field", "--radius", "0.1", "--m-min", "0", "--m-max", "60",
    ],
    "lowest_level_scan.csv": [
        "scan-lll", "--eB-min", "6e3", "--eB-max", "1e8", "--points", "60",
    ],
    "observables_table.csv": ["table"],
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="data", help="output directory (default ./data)")
    args = parser.parse_args()

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, argv in DATASETS.items():
        buffer = io.StringIO()
        with contextlib.redirect_stdout(buffer):
            code = cli_main(argv)
        if code != 0:
            print(f"{name}: FAILED (exit {code})", file=sys.stderr)
            return code
        path = out_dir / name
        path.write_text(buffer.getvalue(), encoding="utf-8")
        rows = buffer.getvalue().count("\n") - 1
        print(f"wrote {path} ({rows} rows)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

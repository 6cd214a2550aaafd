#!/usr/bin/env python3
"""Regenerate the two gap-decomposition tables as CSV files."""

import argparse
import pathlib
import sys

from gaindex.cli import main as cli_main


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default=".", help="directory for table1.csv / table2.csv")
    args = ap.parse_args()
    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for which in (1, 2):
        target = outdir / f"table{which}.csv"
        code = cli_main(["tables", str(which), "--out", str(target)])
        if code != 0:
            return code
        print(f"wrote {target}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

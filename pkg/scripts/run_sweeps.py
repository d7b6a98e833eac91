#!/usr/bin/env python3
"""Generate the sweep CSVs behind the three model figures plus a ring sweep.

Usage: python scripts/run_sweeps.py [outdir]
"""

import sys
from pathlib import Path

from entcharge.cli import main as cli


def run(outdir: Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    for model in ("ising", "xx", "heisenberg"):
        out = outdir / f"{model}.csv"
        rc = cli(["sweep", "--model", model, "--from", "-5", "--to", "5",
                  "--steps", "201", "--out", str(out)])
        if rc:
            sys.exit(rc)
        print(f"wrote {out}")
    out = outdir / "ring_m6.csv"
    rc = cli(["ring", "--sites", "6", "--from", "-20", "--to", "20",
              "--steps", "81", "--out", str(out)])
    if rc:
        sys.exit(rc)
    print(f"wrote {out}")


if __name__ == "__main__":
    run(Path(sys.argv[1]) if len(sys.argv) > 1 else Path("out"))

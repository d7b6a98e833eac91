"""Render charge (solid) and concurrence (dashed) curves from sweep CSVs.

Consumes the entcharge CLI CSV schemas byte-exactly:
  sweep: ratio,p1,p2,p3,p4,entropy_bits,charge,concurrence
  ring:  beta_j,p_triplet,p_singlet,entropy_bits,charge,concurrence,
         bell_offdiag_residual,triplet_spread,translation_residual

Usage: render_figures <csv> <out.png|out.svg> [--with-concurrence]
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

SWEEP_HEADER = ["ratio", "p1", "p2", "p3", "p4", "entropy_bits", "charge", "concurrence"]
RING_HEADER = ["beta_j", "p_triplet", "p_singlet", "entropy_bits", "charge",
               "concurrence", "bell_offdiag_residual", "triplet_spread",
               "translation_residual"]

AXIS_LABEL = {"ratio": "J1/kT", "beta_j": "J/kT"}


class SchemaError(ValueError):
    pass


@dataclass
class SweepTable:
    x_name: str
    x: list[float]
    charge: list[float]
    concurrence: list[float]


def load_table(path: str) -> SweepTable:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError("empty CSV") from None
        if header == SWEEP_HEADER:
            x_col, charge_col, conc_col = 0, 6, 7
        elif header == RING_HEADER:
            x_col, charge_col, conc_col = 0, 4, 5
        else:
            raise SchemaError(f"unrecognized header: {','.join(header)}")
        x, charge, conc = [], [], []
        for i, row in enumerate(reader, start=2):
            if len(row) != len(header):
                raise SchemaError(f"line {i}: expected {len(header)} columns, got {len(row)}")
            try:
                x.append(float(row[x_col]))
                charge.append(float(row[charge_col]))
                conc.append(float(row[conc_col]))
            except ValueError as e:
                raise SchemaError(f"line {i}: {e}") from None
    if not x:
        raise SchemaError("CSV has no data rows")
    if any(b <= a for a, b in zip(x, x[1:])):
        raise SchemaError("x column is not strictly increasing")
    return SweepTable(x_name=header[x_col], x=x, charge=charge, concurrence=conc)


def render(csv_path: str, out_path: str, with_concurrence: bool = False) -> None:
    table = load_table(csv_path)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(table.x, table.charge, "-", color="C0", label="entanglement charge N")
    if with_concurrence:
        ax.plot(table.x, table.concurrence, "--", color="C1", label="concurrence C")
    ax.axhline(0.0, color="0.7", linewidth=0.8)
    ax.set_xlabel(AXIS_LABEL.get(table.x_name, table.x_name))
    ax.set_ylabel("N, C" if with_concurrence else "N")
    ax.set_ylim(-1.05, 1.05)
    ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(out_path)
    plt.close(fig)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="render_figures", description=__doc__)
    parser.add_argument("csv")
    parser.add_argument("out", help="output image; .png or .svg")
    parser.add_argument("--with-concurrence", action="store_true")
    args = parser.parse_args(argv)
    try:
        render(args.csv, args.out, args.with_concurrence)
    except (OSError, SchemaError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Tabulate the azimuthal kernel integrals Y_n over an (F, G) grid.

Y_n falls off with both the winding exponent n and the kernel offset F;
pipe the CSV into your plotting tool of choice.
"""

import argparse
import csv
import sys

import numpy as np

from vortexoam.ev_coupling import y_alpha


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--f-min", type=float, default=1.2)
    ap.add_argument("--f-max", type=float, default=10.0)
    ap.add_argument("--f-steps", type=int, default=12)
    ap.add_argument("--g", type=float, default=1.0)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["n", "F", "G", "value"])
    for f_val in np.linspace(args.f_min, args.f_max, args.f_steps):
        for n in range(0, args.n_max + 1):
            val = y_alpha(n, float(f_val), args.g)
            writer.writerow([n, f"{f_val:.17g}", f"{args.g:.17g}", f"{val:.17g}"])
    if fh is not sys.stdout:
        fh.close()


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Sweep the m_j asymmetry of the final-state occupancy and record the
L-edge rates for both beam windings.

The density of states interpolates between a flat occupancy (x = 0) and a
fully m_j-weighted one (x = 1); the emitted CSV has one row per x with the
total rates and their difference, plus the per-edge split.
"""

import argparse
import csv
import sys

from vortexoam.ev_coupling import FixedGeometry
from vortexoam.ledge import DensityOfStates, dichroism, edge_kernel
from vortexoam.matter import enumerate_core_states


def interpolated_dos(x):
    weights = {}
    for shell in ("3d_threehalf", "3d_fivehalf"):
        for st in enumerate_core_states(shell):
            flat = 1.0
            tilted = max(0.0, 0.5 * st.two_mj)
            weights[(shell, st.two_mj)] = (1.0 - x) * flat + x * tilted
    return DensityOfStates(weights)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--steps", type=int, default=21)
    ap.add_argument("--F", type=float, default=2.0)
    ap.add_argument("--G", type=float, default=1.0)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    kernel = edge_kernel(FixedGeometry(args.F, args.G))
    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(
        ["asymmetry", "gamma_plus", "gamma_minus", "dichroism",
         "L2_dichroism", "L3_dichroism"]
    )
    for i in range(args.steps):
        x = i / (args.steps - 1) if args.steps > 1 else 0.0
        res = dichroism(interpolated_dos(x), kernel)
        writer.writerow(
            [
                f"{x:.6f}",
                f"{res.gamma_plus:.17g}",
                f"{res.gamma_minus:.17g}",
                f"{res.dichroism:.17g}",
                f"{res.per_edge['L2']['dichroism']:.17g}",
                f"{res.per_edge['L3']['dichroism']:.17g}",
            ]
        )
    if fh is not sys.stdout:
        fh.close()


if __name__ == "__main__":
    main()

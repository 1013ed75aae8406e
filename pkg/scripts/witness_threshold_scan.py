#!/usr/bin/env python3
"""Scan the tripartite witness against the squeezing parameter.

Tabulates C(r) for the single-pair source, locates the verdict flip, and
compares it with the closed-form coupling threshold.  Optionally writes the
scan as CSV and/or a PNG plot.

Example:
  python scripts/witness_threshold_scan.py --r-max 2.5 --csv scan.csv --plot scan.png
"""

import argparse
import csv
import math

import numpy as np

from gausspdc import PdcConfig, output_covariance, threshold_coupling, tripartite_witness


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--r-max", type=float, default=2.5, help="scan up to this r")
    parser.add_argument("--points", type=int, default=126, help="grid points")
    parser.add_argument("--csv", metavar="PATH", default=None, help="write scan CSV")
    parser.add_argument("--plot", metavar="PATH", default=None, help="write PNG plot")
    args = parser.parse_args()

    grid = np.linspace(0.0, args.r_max, args.points)
    rows = []
    for r in grid:
        config = PdcConfig(alpha=1.0, coupling=1.0, length=r / math.sqrt(2.0))
        result = tripartite_witness(output_covariance(config))
        rows.append((float(r), result.c_value, result.genuine_tripartite))

    flip = next((row[0] for row in rows if row[2]), None)
    r_threshold = math.sqrt(2.0) * threshold_coupling()
    print(f"coupling threshold alpha*lambda*length = {threshold_coupling():.6f}")
    print(f"equivalent squeezing threshold r       = {r_threshold:.6f}")
    if flip is None:
        print("no verdict flip inside the scanned range")
    else:
        print(f"first grid point with a genuine verdict: r = {flip:.6f}")
    for r in (0.5, 1.0, 1.5, 2.0):
        if r <= args.r_max:
            print(f"  C({r:.1f}) = {4.0 * math.exp(-2.0 * r):.6f}")

    if args.csv:
        with open(args.csv, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["r", "c_value", "genuine"])
            for r, c_value, genuine in rows:
                writer.writerow([f"{r:.12g}", f"{c_value:.12g}",
                                 "true" if genuine else "false"])
        print(f"wrote {args.csv}")

    if args.plot:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig, ax = plt.subplots(figsize=(5.0, 3.4))
        ax.plot(grid, [row[1] for row in rows], label="C(r)")
        ax.axhline(0.5, color="gray", ls="--", lw=1, label="separability bound 1/2")
        ax.axvline(r_threshold, color="crimson", ls=":", lw=1,
                   label=f"r = (3/2) ln 2 = {r_threshold:.3f}")
        ax.set_xlabel("squeezing parameter r")
        ax.set_ylabel("witness value C")
        ax.set_yscale("log")
        ax.legend(fontsize=8)
        fig.tight_layout()
        fig.savefig(args.plot, dpi=160)
        print(f"wrote {args.plot}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

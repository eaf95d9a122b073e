#!/usr/bin/env python3
"""Log-log plot of a blowup or hankel CSV table.

    schurpat blowup --p 0.5 --sizes 2,4,8,16,32,64 -o half.csv
    schurpat blowup --p 1 --sizes 2,4,8,16,32,64 -o one.csv
    python3 scripts/plot_blowup.py half.csv one.csv -o blowup.png
"""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("tables", nargs="+", help="CSV files with size and ratio columns")
    parser.add_argument("-o", "--output", default="blowup.png")
    args = parser.parse_args()

    fig, ax = plt.subplots(figsize=(5, 4))
    for path in args.tables:
        df = pd.read_csv(path)
        label = path
        if "exponent" in df and pd.notna(df["exponent"].iloc[0]):
            label += f" (slope {df['exponent'].iloc[0]:.3f})"
        ax.loglog(df["size"], df["ratio"], marker="o", label=label)
    ax.set_xlabel("n")
    ax.set_ylabel("ratio")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.output, dpi=150)


if __name__ == "__main__":
    main()

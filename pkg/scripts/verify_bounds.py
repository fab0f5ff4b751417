"""Tabulate diam MF for g=1 against the lower and upper bounds."""
import argparse
import sys

from modflip.cli import main

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--time-budget-s", type=float, default=600)
    a = ap.parse_args()
    sys.exit(main(["verify-bounds", "--g", "1", "--n-max", str(a.n_max), "--format", "csv",
                   "--time-budget-s", str(a.time_budget_s)]))

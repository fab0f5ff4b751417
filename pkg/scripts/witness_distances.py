"""Exact d(A_n^-, A_n^+) for small n and the recurrence check."""
import argparse

from modflip.replay import witness_distances, witness_recurrence

ap = argparse.ArgumentParser()
ap.add_argument("--n-max", type=int, default=6)
ap.add_argument("--g", type=int, default=1)
a = ap.parse_args()

dist = witness_distances(a.n_max, a.g)
for n, d in dist.items():
    print(f"n={n} d={d} floor(5n/2)-2={5 * n // 2 - 2}")
print(witness_recurrence(dist).line())

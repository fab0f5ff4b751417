"""Run the transformer on seeded random pairs and report ratios to the bound."""
import argparse
import random
import time

from modflip import transform
from modflip.families import random_triangulation

ap = argparse.ArgumentParser()
ap.add_argument("--g", type=int, default=1)
ap.add_argument("--pairs", type=int, default=200)
ap.add_argument("--n-min", type=int, default=4)
ap.add_argument("--n-max", type=int, default=32)
ap.add_argument("--seed", type=int, default=0)
a = ap.parse_args()

rng = random.Random(a.seed)
worst, fails, t0 = 0.0, 0, time.time()
for k in range(a.pairs):
    n = rng.randint(a.n_min, a.n_max)
    U = random_triangulation(a.g, n, rng)
    V = random_triangulation(a.g, n, rng)
    rep = transform(U, V)
    ratio = rep.length / rep.bound
    worst = max(worst, ratio)
    fails += not rep.within_bound
    print(f"{k:4d} n={n:3d} len={rep.length:4d} bound={rep.bound:7.3f} {rep.phase_lengths}")
print(f"pairs={a.pairs} failures={fails} worst_ratio={worst:.3f} time={time.time() - t0:.1f}s")

"""Enumerate the genus-g one-point core class with orientation kept."""
import argparse

from modflip.explorer import diameter, enumerate_flip_graph
from modflip.families import core_surface

ap = argparse.ArgumentParser()
ap.add_argument("--g", type=int, default=2)
a = ap.parse_args()
st = enumerate_flip_graph(core_surface(a.g), mirror_rule=False, strict=True)
print(f"g={a.g} nodes={len(st)} edges={st.num_edges} diameter={diameter(st, use_symmetry=False).diameter}")

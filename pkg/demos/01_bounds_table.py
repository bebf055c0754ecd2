"""
Color budgets for 3-colorable P_t-free graphs
=============================================

The bound depends on t and on whether the graph contains a triangle.
We print the table, then color a small sampled corpus for each t and
compare the worst coloring we produced against it.
"""

import numpy as np

from ptcolor import Colored, approx_color, bound, find_induced_path
from ptcolor.generators import random_3colorable

# the table itself
ts = range(3, 14)
print("t          " + " ".join(f"{t:>3}" for t in ts))
print("triangle   " + " ".join(f"{bound(t, True):>3}" for t in ts))
print("no triangle" + " ".join(f"{bound(t, False):>3}" for t in ts))
print()

# sample 3-colorable graphs and keep those with no induced P_t
rng = np.random.default_rng(7)
for t in range(5, 11):
    worst = {True: 0, False: 0}
    kept = 0
    while kept < 40:
        G = random_3colorable(int(rng.integers(8, 19)), float(rng.uniform(0.15, 0.9)), int(rng.integers(2**32)))
        if find_induced_path(G, t) is not None:
            continue
        kept += 1
        out = approx_color(G, t)
        assert isinstance(out, Colored)
        tri = out.triangle is not None
        worst[tri] = max(worst[tri], out.colors_used)
    print(f"t={t:>2}: worst with triangle {worst[True]} (bound {bound(t, True)}), "
          f"without {worst[False]} (bound {bound(t, False)})")

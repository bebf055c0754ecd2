"""
Running time grows about linearly in the number of edges
========================================================

Complete tripartite graphs are 3-colorable and P_4-free at any size, so
they make a clean scaling series. Each doubling of a quadruples m.
"""

import statistics
import time

from ptcolor import approx_color
from ptcolor.generators import multipartite

previous = None
print(f"{'a':>5} {'m':>9} {'median ms':>10} {'per m-doubling':>15}")
for a in (50, 100, 200, 400, 800):
    G = multipartite([a, a, a])
    approx_color(G, 8)
    runs = []
    for _ in range(5):
        start = time.perf_counter()
        out = approx_color(G, 8)
        runs.append(time.perf_counter() - start)
    med = statistics.median(runs)
    factor = f"{(med / previous) ** 0.5:.2f}" if previous else "-"
    print(f"{a:>5} {G.m:>9} {med * 1000:>10.1f} {factor:>15}   colors used: {out.colors_used}")
    previous = med

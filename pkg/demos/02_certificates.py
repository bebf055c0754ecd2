"""
Every answer comes with something you can check
===============================================

approx_color returns one of three things, and each carries a witness that
a few lines of independent code can verify.
"""

import itertools

from ptcolor import (
    Colored,
    FoundPt,
    NotThreeColorable,
    approx_color,
    from_edge_list,
    verify_coloring,
    verify_path,
    verify_refutation,
    verify_triangle,
)
from ptcolor.driver import result_to_json

# a 3-colorable graph with a triangle: the coloring plus the triangle
# that explains why three colors are needed
octahedron = from_edge_list(6, [(u, w) for u, w in itertools.combinations(range(6), 2) if u // 2 != w // 2])
out = approx_color(octahedron, 5)
assert isinstance(out, Colored)
print("octahedron:", out.coloring.as_list(6), "triangle", out.triangle)
print("  proper:", verify_coloring(octahedron, out.coloring), " triangle ok:", verify_triangle(octahedron, out.triangle))

# a long path is not P_5-free, and we may get the offending path back
path = from_edge_list(12, [(i, i + 1) for i in range(11)])
out = approx_color(path, 5)
if isinstance(out, FoundPt):
    print("path on 12 vertices: induced P_5", out.path, verify_path(path, out.path, 5))
else:
    print("path on 12 vertices colored with", out.colors_used, "colors")

# a wheel over a 5-cycle cannot be 3-colored; the refutation is either a
# small subgraph or a replayable exhaustion of a seed set
wheel = from_edge_list(6, [(0, i) for i in range(1, 6)] + [(i, i % 5 + 1) for i in range(1, 6)])
out = approx_color(wheel, 6)
assert isinstance(out, NotThreeColorable)
print("5-wheel:", out.refutation, "verified:", verify_refutation(wheel, out.refutation))

# the same result, as the JSON the command line tool writes
print(result_to_json(out, wheel, 6))

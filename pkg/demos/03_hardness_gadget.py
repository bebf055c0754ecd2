"""
Why "no induced P_t from v" does not make 3-coloring easy
=========================================================

A not-all-equal 3-SAT formula becomes a graph with an apex v that starts
no induced P_5, yet the graph is 3-colorable exactly when the formula is
satisfiable. We check that on random formulas, then show the clique join
that lifts the statement to k colors.
"""

import numpy as np

from ptcolor import NaeFormula, brute_three_color, find_induced_path, nae_solve
from ptcolor.generators import clique_join, nae_reduction, random_nae_formula
from ptcolor.oracles import brute_color

f = NaeFormula(3, ((1, 2, 3), (-1, 2, -3)))
red = nae_reduction(f)
print(f"formula {f.clauses}: {red.graph.n} vertices, {red.graph.m} edges")
print("  literal vertices:", red.literal_map)
print("  clause triangles:", red.clause_triangles)
print("  NAE assignment:", nae_solve(f))
print("  3-coloring:", brute_three_color(red.graph).as_list(red.graph.n))
print("  induced P_5 from the apex:", find_induced_path(red.graph, 5, start=red.v))

# agreement on random formulas
rng = np.random.default_rng(3)
agree = 0
for _ in range(100):
    g = random_nae_formula(int(rng.integers(1, 6)), int(rng.integers(0, 5)), int(rng.integers(2**32)))
    agree += (nae_solve(g) is not None) == (brute_three_color(nae_reduction(g).graph) is not None)
print(f"satisfiable iff 3-colorable on {agree}/100 random formulas")

# an unsatisfiable one: x1 != x2 and x1 == x2 at once
bad = NaeFormula(2, ((1, 1, 2), (1, 1, -2)))
print("unsatisfiable formula gives a 3-colorable graph?", brute_three_color(nae_reduction(bad).graph) is not None)

# joining a clique of size k-3 turns 3-colorability into k-colorability
G = nae_reduction(bad).graph
for k in (4, 5):
    print(f"k={k}: joined graph {k}-colorable?", brute_color(clique_join(G, k), k) is not None)

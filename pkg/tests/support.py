"""Shared graph builders, outcome checkers and hypothesis strategies."""

from __future__ import annotations

import itertools

import networkx as nx
from hypothesis import strategies as st

from ptcolor import (
    NotThreeColorable,
    PathFromV,
    Plain,
    WithTriangle,
    InducedPt,
    SeedResult,
    brute_three_color,
    closure_F,
    from_edge_list,
    verify_coloring,
    verify_path,
    verify_refutation,
    verify_triangle,
)
from ptcolor.graph import Graph
from ptcolor.seed import seed_palette
from ptcolor.start import plain_bound, triangle_bound


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, itertools.combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Graph:
    return from_nx(nx.petersen_graph())


def from_nx(g) -> Graph:
    ids = {u: i for i, u in enumerate(sorted(g.nodes()))}
    return from_edge_list(len(ids), [(ids[a], ids[b]) for a, b in g.edges()])


def connected_atlas(max_n: int = 7):
    """All connected graphs on 1..max_n vertices up to isomorphism."""
    for g in nx.graph_atlas_g()[1:]:
        if g.number_of_nodes() > max_n:
            break
        if nx.is_connected(g):
            yield from_nx(g)


# -- outcome checks: each returns an error string, or None when the outcome verifies


def check_start(G: Graph, v: int, t: int, out, exclude: bool = False, three_col=None):
    if three_col is None:
        three_col = brute_three_color(G) is not None
    domain = frozenset(range(G.n)) - ({v} if exclude else set())
    if isinstance(out, NotThreeColorable):
        if three_col:
            return "refuted a 3-colorable graph"
        return None if verify_refutation(G, out.refutation) else "refutation does not verify"
    if isinstance(out, PathFromV):
        return None if verify_path(G, out.path, t, v) else f"bad path {out.path}"
    if isinstance(out, (Plain, WithTriangle)):
        c = out.coloring
        if c.domain != domain:
            return "coloring has the wrong domain"
        if not verify_coloring(G, c):
            return "improper coloring"
        if isinstance(out, WithTriangle):
            if not verify_triangle(G, out.triangle):
                return f"bad triangle {out.triangle}"
            limit = triangle_bound(t, exclude)
        else:
            limit = plain_bound(t, exclude)
        return None if c.colors_used <= limit else f"{c.colors_used} colors exceed {limit}"
    return f"unexpected outcome {out!r}"


def check_seed(G: Graph, v: int, k: int, t: int, out, three_col=None):
    if three_col is None:
        three_col = brute_three_color(G) is not None
    if isinstance(out, NotThreeColorable):
        if three_col:
            return "refuted a 3-colorable graph"
        return None if verify_refutation(G, out.refutation) else "refutation does not verify"
    if isinstance(out, InducedPt):
        return None if verify_path(G, out.path, t) else f"bad path {out.path}"
    if isinstance(out, PathFromV):
        return None if verify_path(G, out.path, min(k, t), v) else f"bad path from v {out.path}"
    if isinstance(out, SeedResult):
        if v not in out.S or len(out.S) > max(1, k - 2):
            return f"bad seed set {sorted(out.S)}"
        cr = closure_F(G, out.S)
        rc = out.remainder_coloring
        if rc.domain != frozenset(range(G.n)) - cr.frontier:
            return "remainder domain is not the complement of the frontier"
        if out.palette_bound != seed_palette(t, out.triangle is not None):
            return "wrong palette bound"
        if not verify_coloring(G, rc) or rc.colors_used > out.palette_bound:
            return "remainder coloring improper or over budget"
        if out.triangle is not None and not verify_triangle(G, out.triangle):
            return "bad triangle"
        return None
    return f"unexpected outcome {out!r}"


# -- hypothesis strategies


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9, connected: bool = False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # a random spanning tree keeps the graph connected
        parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
        chosen = set(chosen) | {(p, i) for i, p in enumerate(parents, 1)}
    return from_edge_list(n, chosen)


# -- acceptance reporting: lines are echoed in the terminal summary

ACCEPTANCE_LINES: list[str] = []


def report(criterion: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {criterion} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)

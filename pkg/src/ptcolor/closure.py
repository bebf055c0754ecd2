"""The forcing closure F(S) and color propagation through it.

A vertex with two adjacent neighbors inside a set has its color fixed by
theirs in any 3-coloring, so the closure grows by exactly that rule.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .graph import Coloring, Graph

__all__ = ["ClosureResult", "Conflict", "closure_F", "propagate_colors"]


@dataclass(frozen=True)
class ClosureResult:
    """``order`` lists ``(vertex, a, b)`` in entry order; seeds carry ``None`` witnesses."""

    closure: frozenset[int]
    frontier: frozenset[int]
    order: tuple[tuple[int, Optional[int], Optional[int]], ...]

    @property
    def seeds(self) -> tuple[int, ...]:
        return tuple(u for u, a, _ in self.order if a is None)


@dataclass(frozen=True)
class Conflict:
    """Propagation failed: ``vertex`` got ``color``, which clashes on edge ``(vertex, neighbor)``.

    ``neighbor`` is None when the two witnesses already share a color.
    """

    vertex: int
    color: int
    neighbor: Optional[int]
    witnesses: tuple[int, int]


def closure_F(G: Graph, S: Iterable[int], within: Optional[frozenset[int]] = None) -> ClosureResult:
    """Smallest superset of ``S`` no outside vertex of which has two adjacent neighbors inside.

    ``within`` restricts the computation to the induced subgraph ``G[within]``.
    Eligible vertices enter in ascending id order.
    """
    seeds = sorted(set(S))
    if within is not None and not set(seeds) <= within:
        raise ValueError("seed set is not contained in the vertex subset")
    inside: set[int] = set()
    inner_nbrs: dict[int, list[int]] = {}
    witness: dict[int, tuple[int, int]] = {}
    heap: list[int] = []
    order: list[tuple[int, Optional[int], Optional[int]]] = []

    blocked: set[int] = set()  # inside, or already witnessed

    def enter(u: int) -> None:
        inside.add(u)
        blocked.add(u)
        nbrs = G.neighbors(u)
        open_nbrs = nbrs - blocked
        if within is not None:
            open_nbrs &= within
        for w in open_nbrs:
            # inside neighbors are only needed until a witness pair turns up
            seen = inner_nbrs.setdefault(w, [])
            for z in seen:
                if z in nbrs:
                    witness[w] = (z, u)
                    blocked.add(w)
                    heapq.heappush(heap, w)
                    break
            else:
                seen.append(u)

    for s in seeds:
        order.append((s, None, None))
        enter(s)
    while heap:
        u = heapq.heappop(heap)
        if u in inside:
            continue
        a, b = witness[u]
        order.append((u, a, b))
        enter(u)

    closure = frozenset(inside)
    frontier = closure | frozenset(inner_nbrs)
    return ClosureResult(closure, frontier, tuple(order))


def propagate_colors(
    G: Graph, cr: ClosureResult, seed_assignment: Mapping[int, int]
) -> Coloring | Conflict:
    """Extend a proper seed 3-coloring to the whole closure, or report the first clash."""
    seeds = cr.seeds
    if set(seed_assignment) != set(seeds):
        raise ValueError("seed assignment must cover exactly the seed set")
    for s in seeds:
        if seed_assignment[s] not in (1, 2, 3):
            raise ValueError(f"seed {s} has color {seed_assignment[s]} outside 1..3")
        for w in G.adj[s]:
            if w in seed_assignment and seed_assignment[w] == seed_assignment[s]:
                raise ValueError(f"seed assignment is improper on edge ({s}, {w})")

    colors = dict(seed_assignment)
    classes: dict[int, set[int]] = {1: set(), 2: set(), 3: set()}
    for s, c in colors.items():
        classes[c].add(s)
    for u, a, b in cr.order:
        if a is None:
            continue
        ca, cb = colors[a], colors[b]
        if ca == cb:
            return Conflict(u, ca, None, (a, b))
        cu = 6 - ca - cb
        if not G.neighbors(u).isdisjoint(classes[cu]):
            return Conflict(u, cu, min(G.neighbors(u) & classes[cu]), (a, b))
        colors[u] = cu
        classes[cu].add(u)
    return Coloring(colors, 3)

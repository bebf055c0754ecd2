"""Three-coloring a seed frontier: enumerate seed colors, propagate, solve 2-list-coloring.

Once the colors of ``F(S)`` are fixed, every vertex of ``N(F(S))`` has at most
two admissible colors, so the rest is 2-SAT.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .closure import ClosureResult, Conflict, propagate_colors
from .graph import Coloring, Graph
from .outcomes import InternalError

__all__ = [
    "ListInstance",
    "solve_2sat",
    "two_list_color",
    "seed_assignments",
    "color_frontier",
]


@dataclass(frozen=True)
class ListInstance:
    """Lists of at most two colors from 1..3 on ``region``, plus fixed outside colors."""

    region: frozenset[int]
    lists: Mapping[int, tuple[int, ...]]
    fixed: Mapping[int, int]

    def validate(self, G: Graph) -> None:
        if set(self.lists) != set(self.region):
            raise ValueError("lists must be given for exactly the region vertices")
        for v, lst in self.lists.items():
            if not 1 <= len(lst) <= 2 or len(set(lst)) != len(lst):
                raise ValueError(f"list of vertex {v} must hold one or two distinct colors")
            if any(c not in (1, 2, 3) for c in lst):
                raise ValueError(f"list of vertex {v} has a color outside 1..3")
        for v, c in self.fixed.items():
            if v in self.region:
                raise ValueError(f"vertex {v} is both fixed and in the region")
            if c not in (1, 2, 3):
                raise ValueError(f"fixed vertex {v} has color {c} outside 1..3")
        fixed = frozenset(self.fixed)
        for v, lst in self.lists.items():
            for w in sorted(G.neighbors(v) & fixed):
                if self.fixed[w] in lst:
                    raise ValueError(f"list of vertex {v} contains the color of fixed neighbor {w}")


def solve_2sat(num_vars: int, clauses: Iterable[tuple[int, int]]) -> Optional[list[bool]]:
    """Satisfy 2-CNF ``clauses`` over variables ``1..num_vars`` (signed literals).

    Tarjan's SCC on the implication graph; a variable is true when its
    positive literal's component comes first in Tarjan's completion order
    (i.e. later in topological order).
    """
    size = 2 * num_vars

    def node(lit: int) -> int:
        return 2 * (abs(lit) - 1) + (lit < 0)

    graph: list[list[int]] = [[] for _ in range(size)]
    for a, b in clauses:
        # (a or b) == (not a -> b) and (not b -> a)
        graph[node(-a)].append(node(b))
        graph[node(-b)].append(node(a))

    index = [-1] * size
    low = [0] * size
    comp = [-1] * size
    on_stack = [False] * size
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(size):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            u, i = work[-1]
            if i < len(graph[u]):
                work[-1] = (u, i + 1)
                w = graph[u][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[u] = min(low[u], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[u])
            if low[u] == index[u]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == u:
                        break
                ncomp += 1

    result = []
    for x in range(num_vars):
        pos, neg = comp[2 * x], comp[2 * x + 1]
        if pos == neg:
            return None
        result.append(pos < neg)
    return result


def two_list_color(G: Graph, li: ListInstance) -> Optional[Coloring]:
    """Properly color ``G[li.region]`` from the lists, or return None if impossible."""
    li.validate(G)
    order = sorted(li.region)
    var = {v: i + 1 for i, v in enumerate(order)}
    clauses: list[tuple[int, int]] = []

    def lit(v: int, c: int) -> Optional[int]:
        # literal meaning "v takes color c"
        lst = li.lists[v]
        if c not in lst:
            return None
        if len(lst) == 1:
            return 0
        return var[v] if lst[0] == c else -var[v]

    for v in order:
        lst = li.lists[v]
        if len(lst) == 1:
            clauses.append((var[v], var[v]))
    for v in order:
        for w in sorted(G.neighbors(v) & li.region):
            if w <= v:
                continue
            for c in li.lists[v]:
                a, b = lit(v, c), lit(w, c)
                if a is None or b is None:
                    continue
                if a == 0 and b == 0:
                    return None
                if a == 0:
                    clauses.append((-b, -b))
                elif b == 0:
                    clauses.append((-a, -a))
                else:
                    clauses.append((-a, -b))

    model = solve_2sat(len(order), clauses)
    if model is None:
        return None
    colors = {}
    for v in order:
        lst = li.lists[v]
        colors[v] = lst[0] if len(lst) == 1 or model[var[v] - 1] else lst[1]
    return Coloring(colors, 3)


def seed_assignments(G: Graph, S: Iterable[int]) -> Iterator[dict[int, int]]:
    """Proper 3-colorings of ``G[S]`` in lexicographic order over ascending ``S``."""
    seeds = sorted(set(S))
    for colors in itertools.product((1, 2, 3), repeat=len(seeds)):
        assignment = dict(zip(seeds, colors))
        if all(assignment.get(w) != assignment[s] for s in seeds for w in G.adj[s]):
            yield assignment


def _lists_around(G: Graph, cr: ClosureResult, fcol: Coloring) -> Optional[ListInstance]:
    region = cr.frontier - cr.closure
    classes: dict[int, set[int]] = {1: set(), 2: set(), 3: set()}
    for w, c in fcol.assignments.items():
        classes[c].add(w)
    lists = {}
    for u in region:
        nb = G.neighbors(u)
        allowed = tuple(c for c in (1, 2, 3) if nb.isdisjoint(classes[c]))
        if not allowed:
            return None
        if len(allowed) == 3:
            raise InternalError(f"vertex {u} lies next to the closure but has no colored neighbor")
        lists[u] = allowed
    touching = set().union(*(G.neighbors(u) for u in region)) & cr.closure
    fixed = {w: fcol[w] for w in touching}
    return ListInstance(frozenset(region), lists, fixed)


def color_frontier(
    G: Graph, cr: ClosureResult, S: Sequence[int], stats: Optional[dict] = None
) -> Optional[Coloring]:
    """3-color ``F(S) ∪ N(F(S))`` or return None when every seed coloring fails.

    ``stats['attempts']`` counts the seed assignments tried.
    """
    if set(S) != set(cr.seeds):
        raise ValueError("closure was computed for a different seed set")
    attempts = 0
    found = None
    for assignment in seed_assignments(G, S):
        attempts += 1
        fcol = propagate_colors(G, cr, assignment)
        if isinstance(fcol, Conflict):
            continue
        li = _lists_around(G, cr, fcol)
        if li is None:
            continue
        rest = two_list_color(G, li)
        if rest is None:
            continue
        found = Coloring({**fcol.assignments, **rest.assignments}, 3)
        break
    if stats is not None:
        stats["attempts"] = attempts
    return found

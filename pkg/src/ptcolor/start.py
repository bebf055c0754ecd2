"""Coloring a connected graph around a root that starts no long induced path.

``color_from_start`` returns one of four outcomes: a non-3-colorability
certificate, an induced ``P_t`` beginning at the root, a
``max(2, t-2)``-coloring, or a ``max(3, 2t-5)``-coloring together with a
triangle. ``color_excluding_start`` is the same procedure reporting a
coloring of ``G - v`` with bounds ``max(1, t-2)`` / ``max(2, 2t-5)``.

The recursion only ever looks at vertex subsets of the input graph, so all
witnesses come back in the caller's vertex ids.
"""

from __future__ import annotations

import logging
from collections import Counter

from .graph import (
    Coloring,
    Graph,
    OddCycle,
    _components,
    bipartition_or_odd_cycle,
    verify_path,
)
from .outcomes import (
    DEFAULT_CERT_CAP,
    InternalError,
    NotThreeColorable,
    PathFromV,
    Plain,
    SmallSubgraph,
    StartOutcome,
    WithTriangle,
)

__all__ = [
    "color_from_start",
    "color_excluding_start",
    "plain_bound",
    "triangle_bound",
    "check_connected",
]

log = logging.getLogger(__name__)


def plain_bound(t: int, exclude_root: bool = False) -> int:
    return max(1 if exclude_root else 2, t - 2)


def triangle_bound(t: int, exclude_root: bool = False) -> int:
    return max(2 if exclude_root else 3, 2 * t - 5)


def check_connected(G: Graph) -> None:
    if G.n == 0:
        raise ValueError("graph has no vertices")
    if len(_components(G, range(G.n))) != 1:
        raise ValueError("graph is not connected")


def color_from_start(G: Graph, v: int, t: int) -> StartOutcome:
    """Color connected ``G`` unless ``v`` starts an induced ``P_t`` or ``G`` is not 3-colorable.

    >>> from ptcolor.graph import from_edge_list
    >>> color_from_start(from_edge_list(3, [(0, 1), (1, 2), (0, 2)]), 0, 4).triangle
    (0, 1, 2)
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    check_connected(G)
    if not 0 <= v < G.n:
        raise ValueError(f"root {v} is not a vertex")
    return _start(G, frozenset(range(G.n)), v, t)


def color_excluding_start(G: Graph, v: int, t: int) -> StartOutcome:
    """As :func:`color_from_start`, but colorings cover ``V(G) - {v}`` only."""
    if t < 1:
        raise ValueError("t must be at least 1")
    check_connected(G)
    if not 0 <= v < G.n:
        raise ValueError(f"root {v} is not a vertex")
    return _exclude(G, frozenset(range(G.n)), v, t)


# -- internals: every function below works on the connected subgraph G[W] --


def _nbrs_in(G: Graph, u: int, W: frozenset[int]) -> list[int]:
    return sorted(G.neighbors(u) & W)


def _first_edge(G: Graph, W: frozenset[int]) -> tuple[int, int] | None:
    for x in sorted(W):
        later = [y for y in G.neighbors(x) & W if y > x]
        if later:
            return x, min(later)
    return None


def _path(G: Graph, path: tuple[int, ...], length: int, start: int) -> PathFromV:
    if not verify_path(G, path, length, start):
        raise InternalError(f"constructed path {path} is not an induced P_{length} from {start}")
    return PathFromV(path)


def _refute(vertices) -> NotThreeColorable:
    ref = SmallSubgraph(frozenset(vertices))
    if ref.oversized(DEFAULT_CERT_CAP):
        log.warning("non-3-colorability certificate has %d vertices", len(ref.vertices))
    return NotThreeColorable(ref)


def _distance_two(G: Graph, W: frozenset[int], v: int, N: list[int]) -> tuple[int, int, int] | None:
    # an induced P_3 starting at v, if any
    Nset = frozenset(N) | {v}
    for w in N:
        far = (G.neighbors(w) & W) - Nset
        if far:
            return v, w, min(far)
    return None


def _start(G: Graph, W: frozenset[int], v: int, t: int) -> StartOutcome:
    if t <= 4:
        return _start_small(G, W, v, t)
    return _start_large(G, W, v, t)


def _exclude(G: Graph, W: frozenset[int], v: int, t: int) -> StartOutcome:
    if t >= 4:
        out = _start(G, W, v, t)
        if isinstance(out, Plain):
            return Plain(_drop(out.coloring, v))
        if isinstance(out, WithTriangle):
            return WithTriangle(_drop(out.coloring, v), out.triangle)
        return out

    N = _nbrs_in(G, v, W)
    if t == 1:
        return _path(G, (v,), 1, v)
    if t == 2:
        if N:
            return _path(G, (v, N[0]), 2, v)
        return Plain(Coloring({}, 0))

    p3 = _distance_two(G, W, v, N)
    if p3 is not None:
        return _path(G, p3, 3, v)
    # v is adjacent to everything else
    rest = W - {v}
    split = bipartition_or_odd_cycle(G, rest)
    if isinstance(split, OddCycle):
        return _refute((v, *split.vertices))
    edge = _first_edge(G, rest)
    if edge is None:
        return Plain(Coloring({u: 1 for u in rest}, 1))
    A, _ = split.sides
    colors = {u: 1 if u in A else 2 for u in rest}
    return WithTriangle(Coloring(colors, 2), (v, *edge))


def _drop(c: Coloring, v: int) -> Coloring:
    colors = dict(c.assignments)
    del colors[v]
    return Coloring(colors, c.palette_size)


def _start_small(G: Graph, W: frozenset[int], v: int, t: int) -> StartOutcome:
    N = _nbrs_in(G, v, W)
    Nset = frozenset(N)
    if t == 2 and N:
        return _path(G, (v, N[0]), 2, v)
    if t == 3:
        p3 = _distance_two(G, W, v, N)
        if p3 is not None:
            return _path(G, p3, 3, v)

    Z = W - Nset - {v}
    comps = _components(G, Z)
    comp_of = {z: i for i, C in enumerate(comps) for z in C}

    # each w in N(v) must be complete or anticomplete to each component of Z;
    # a partial attachment yields a P_4 from v
    for w in N:
        counts = Counter(comp_of[z] for z in G.neighbors(w) & Z)
        for ci, cnt in sorted(counts.items()):
            if cnt < len(comps[ci]):
                wn = G.neighbors(w)
                for a in comps[ci]:
                    if a not in wn:
                        continue
                    for b in G.adj[a]:
                        if comp_of.get(b) == ci and b not in wn:
                            return _path(G, (v, w, a, b), 4, v)
                raise InternalError("partial attachment without a witness edge")

    colors: dict[int, int] = {v: 1}
    for C in comps:
        if len(C) == 1:
            colors[C[0]] = 1
            continue
        assert len({G.neighbors(y) & Nset for y in C}) == 1, "Z-component with mixed attachments"
        split = bipartition_or_odd_cycle(G, C)
        if isinstance(split, OddCycle):
            w = min(u for u in N if not G.neighbors(u).isdisjoint(C))
            return _refute((*split.vertices, w))
        A, _ = split.sides
        for y in A:
            colors[y] = 1

    rest = W - frozenset(colors)
    split = bipartition_or_odd_cycle(G, rest)
    if isinstance(split, OddCycle):
        cert = {v, *split.vertices}
        for c in split.vertices:
            if c in comp_of:
                ci = comp_of[c]
                cert.add(next(y for y in G.adj[c] if comp_of.get(y) == ci))
        return _refute(cert)

    edge = _first_edge(G, rest)
    if edge is None:
        colors.update((u, 2) for u in rest)
        return Plain(Coloring(colors, 2))

    A, _ = split.sides
    colors.update((u, 2 if u in A else 3) for u in rest)
    x, y = edge
    if x in Nset and y in Nset:
        tri = (v, x, y)
    else:
        a, z = (x, y) if x in Nset else (y, x)
        zz = next(u for u in G.adj[z] if comp_of.get(u) == comp_of[z])
        tri = (a, z, zz)
    return WithTriangle(Coloring(colors, 3), tri)


def _start_large(G: Graph, W: frozenset[int], v: int, t: int) -> StartOutcome:
    N = _nbrs_in(G, v, W)
    Nset = frozenset(N)
    split = bipartition_or_odd_cycle(G, Nset)
    if isinstance(split, OddCycle):
        # odd wheel
        return _refute((v, *split.vertices))
    triangle = None
    edge = _first_edge(G, Nset)
    if edge is not None:
        triangle = (v, *edge)

    Z = W - Nset - {v}
    zcolors: dict[int, int] = {}
    for C in _components(G, Z):
        w = min(min(G.neighbors(z) & Nset) for z in C if not G.neighbors(z).isdisjoint(Nset))
        out = _exclude(G, frozenset(C) | {w}, w, t - 1)
        if isinstance(out, NotThreeColorable):
            return out
        if isinstance(out, PathFromV):
            return _path(G, (v, *out.path), t, v)
        zcolors.update(out.coloring.assignments)
        if isinstance(out, WithTriangle) and triangle is None:
            triangle = out.triangle

    top = max(zcolors.values(), default=1)
    colors = {**zcolors, v: 1}
    A, B = split.sides
    colors.update((u, top + 1) for u in A)
    colors.update((u, top + 2) for u in B)
    coloring = Coloring(colors, top + (2 if B else 1 if A else 0))
    if triangle is None:
        return Plain(coloring)
    return WithTriangle(coloring, triangle)

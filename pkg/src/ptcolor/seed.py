"""Seed sets whose forcing frontier splits off a cheaply colored remainder.

``find_seed(G, v, k, t)`` returns one of: a non-3-colorability certificate,
an induced ``P_t``, an induced ``P_k`` starting at ``v``, or a
:class:`~ptcolor.outcomes.SeedResult` -- a set ``S`` containing ``v`` with
``|S| <= max(1, k-2)`` and a coloring of ``G - (F(S) ∪ N(F(S)))`` with at
most ``max(1, h-2)`` colors (``max(2, 2h-5)`` once a triangle was seen),
where ``h = ceil((t-1)/2)``.

Both pairing phases share one routine (:func:`_pair_off`): satellite
components hang off hub components, and while no single hub touches every
uncolored satellite, two satellites attached to different hubs are probed
with the root-excluding colorer at parameter ``h``. Two surviving paths
splice into an induced path on at least ``2h + 1 >= t`` vertices; otherwise
at least one satellite gets colored and is set aside. In phase one the hubs
are the components of ``G[N(v)]`` and the satellites the components of
``G - N[v]``; in phase two the dominating hub ``D`` plays the role of ``v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Optional

from .closure import closure_F
from .graph import Coloring, Graph, _components, verify_coloring, verify_path
from .outcomes import (
    InducedPt,
    InternalError,
    NotThreeColorable,
    PathFromV,
    Plain,
    SeedOutcome,
    SeedResult,
    StartOutcome,
    WithTriangle,
)
from .start import _exclude, _nbrs_in, check_connected

__all__ = ["find_seed", "seed_palette"]


def seed_palette(t: int, triangle: bool) -> int:
    """Color budget for the remainder outside the seed frontier."""
    h = t // 2  # == ceil((t - 1) / 2)
    return max(2, 2 * h - 5) if triangle else max(1, h - 2)


def find_seed(G: Graph, v: int, k: int, t: int) -> SeedOutcome:
    if k < 1 or t < 2:
        raise ValueError("need k >= 1 and t >= 2")
    check_connected(G)
    if not 0 <= v < G.n:
        raise ValueError(f"root {v} is not a vertex")
    return _seed(G, frozenset(range(G.n)), v, k, t)


@dataclass
class _Pairing:
    hubs: list[list[int]]
    sats: list[list[int]]
    remaining: set[int]
    dominating: Optional[int] = None
    colors: dict[int, int] = field(default_factory=dict)
    triangle: Optional[tuple[int, int, int]] = None


def _pair_off(
    G: Graph,
    hubs: list[list[int]],
    sats: list[list[int]],
    h: int,
    t: int,
    splice: Callable[[int, tuple[int, ...], int, tuple[int, ...]], tuple[int, ...]],
) -> _Pairing | NotThreeColorable | InducedPt:
    hub_of = {u: j for j, H in enumerate(hubs) for u in H}
    hub_sets = [frozenset(H) for H in hubs]
    everywhere = frozenset(hub_of)
    touches: list[set[int]] = []  # satellite -> hubs
    for C in sats:
        reach = set().union(*(G.neighbors(z) for z in C)) & everywhere
        if len(hubs) == 1:
            touches.append({0} if reach else set())
        else:
            touches.append({hub_of[u] for u in reach})
    count = [0] * len(hubs)
    for hs in touches:
        for j in hs:
            count[j] += 1

    state = _Pairing(hubs, sats, set(range(len(sats))))
    cache: dict[tuple[int, int], StartOutcome] = {}

    def anchor(i: int, j: int) -> int:
        H = hub_sets[j]
        return min(min(G.neighbors(z) & H) for z in sats[i] if not G.neighbors(z).isdisjoint(H))

    def probe(i: int, x: int) -> StartOutcome:
        if (i, x) not in cache:
            cache[(i, x)] = _exclude(G, frozenset(sats[i]) | {x}, x, h)
        return cache[(i, x)]

    while state.remaining:
        best = max(range(len(hubs)), key=lambda j: (count[j], -j))
        if count[best] == len(state.remaining):
            state.dominating = best
            break
        before = len(state.remaining)
        far = min(i for i in state.remaining if best not in touches[i])
        other = min(touches[far])
        near = min(
            (i for i in state.remaining if best in touches[i] and other not in touches[i]),
            default=None,
        )
        if near is None:
            raise InternalError("no satellite separates the two hubs")
        x1, x2 = anchor(near, best), anchor(far, other)
        o1, o2 = probe(near, x1), probe(far, x2)
        for o in (o1, o2):
            if isinstance(o, NotThreeColorable):
                return o
        if isinstance(o1, PathFromV) and isinstance(o2, PathFromV):
            path = splice(x1, o1.path, x2, o2.path)[:t]
            if not verify_path(G, path, t):
                raise InternalError(f"spliced path {path} is not an induced P_{t}")
            return InducedPt(path)
        for i, o in ((near, o1), (far, o2)):
            if isinstance(o, (Plain, WithTriangle)):
                state.colors.update(o.coloring.assignments)
                if isinstance(o, WithTriangle) and state.triangle is None:
                    state.triangle = o.triangle
                state.remaining.discard(i)
                for j in touches[i]:
                    count[j] -= 1
        if len(state.remaining) >= before:
            raise InternalError("pairing round colored no component")
    return state


def _through_root(v: int) -> Callable:
    def splice(x1, q1, x2, q2):
        return tuple(reversed(q1)) + (v,) + tuple(q2)

    return splice


def _through_set(G: Graph, D: frozenset[int]) -> Callable:
    def splice(x1, q1, x2, q2):
        # shortest x1 -> x2 path with interior in D
        prev = {x1: None}
        queue = deque([x1])
        while queue:
            u = queue.popleft()
            if u == x2:
                break
            for w in G.adj[u]:
                if w not in prev and (w in D or (w == x2 and u != x1)):
                    prev[w] = u
                    queue.append(w)
        middle = []
        u = prev[x2]
        while u != x1:
            middle.append(u)
            u = prev[u]
        return tuple(reversed(q1)) + tuple(reversed(middle)) + tuple(q2)

    return splice


def _finish(
    G: Graph,
    W: frozenset[int],
    t: int,
    S: frozenset[int],
    colors: dict[int, int],
    triangle: Optional[tuple[int, int, int]],
) -> SeedResult:
    cr = closure_F(G, S, within=W)
    remainder = W - cr.frontier
    missing = [u for u in remainder if u not in colors]
    if missing:
        raise InternalError(f"vertices {sorted(missing)[:5]} outside the frontier were never colored")
    palette = seed_palette(t, triangle is not None)
    coloring = Coloring({u: colors[u] for u in remainder}, palette)
    if not verify_coloring(G, coloring):
        raise InternalError("remainder coloring is improper or exceeds its palette")
    return SeedResult(S, coloring, triangle, palette)


def _seed(G: Graph, W: frozenset[int], v: int, k: int, t: int) -> SeedOutcome:
    clamped = k > t
    k = min(k, t)
    h = t // 2

    def path_from_v(path: tuple[int, ...]) -> SeedOutcome:
        if not verify_path(G, path, k, v):
            raise InternalError(f"path {path} is not an induced P_{k} from {v}")
        return InducedPt(path) if clamped else PathFromV(path)

    if k <= max(3, h):
        out = _exclude(G, W, v, k)
        if isinstance(out, NotThreeColorable):
            return out
        if isinstance(out, PathFromV):
            return path_from_v(out.path)
        tri = out.triangle if isinstance(out, WithTriangle) else None
        return _finish(G, W, t, frozenset({v}), dict(out.coloring.assignments), tri)

    N = _nbrs_in(G, v, W)
    if not N:
        return _finish(G, W, t, frozenset({v}), {}, None)
    Nset = frozenset(N)

    # phase 1: components of G - N[v] against components of G[N(v)]
    hubs = _components(G, Nset)
    first = _pair_off(G, hubs, _components(G, W - Nset - {v}), h, t, _through_root(v))
    if not isinstance(first, _Pairing):
        return first
    colors, triangle = first.colors, first.triangle
    if first.dominating is None:
        return _finish(G, W, t, frozenset({v}), colors, triangle)

    # phase 2: escapes from N(D) against components of G[N(D)], D contracted
    D = frozenset(hubs[first.dominating])
    U = frozenset(u for i in first.remaining for u in first.sats[i])
    ND = frozenset().union(*(G.neighbors(u) for u in D)) & U
    second = _pair_off(G, _components(G, ND), _components(G, U - ND), h, t, _through_set(G, D))
    if not isinstance(second, _Pairing):
        return second
    colors.update(second.colors)
    triangle = triangle or second.triangle

    if second.dominating is None:
        v2 = min(D)
        W2 = frozenset({v2})
    else:
        hub = second.hubs[second.dominating]
        v2 = min(u for u in D if not G.neighbors(u).isdisjoint(hub))
        W2 = frozenset({v2, *hub, *(u for i in second.remaining for u in second.sats[i])})

    sub = _seed(G, W2, v2, k - 1, t)
    if isinstance(sub, (NotThreeColorable, InducedPt)):
        return sub
    if isinstance(sub, PathFromV):
        return path_from_v((v, *sub.path))
    colors.update(sub.remainder_coloring.assignments)
    return _finish(G, W, t, sub.S | {v}, colors, triangle or sub.triangle)

"""End-to-end approximate 3-coloring of P_t-free graphs.

Each connected component is colored twice -- once through a seed set
(3 colors on the seed frontier plus the remainder's palette) and once with
the root-based colorer -- and the cheaper coloring is kept.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Any, Optional, Union

from .closure import closure_F
from .finish import color_frontier
from .graph import Coloring, Graph, _components, verify_coloring, verify_path, verify_triangle
from .outcomes import (
    DEFAULT_CERT_CAP,
    InducedPt,
    InternalError,
    ListExhaustion,
    NotThreeColorable,
    PathFromV,
    Refutation,
    SmallSubgraph,
    WithTriangle,
)
from .seed import _seed
from .start import _start

__all__ = [
    "Colored",
    "FoundPt",
    "DriverResult",
    "bound",
    "approx_color",
    "result_to_json",
    "refutation_to_json",
    "refutation_from_json",
]

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Colored:
    coloring: Coloring
    colors_used: int
    triangle: Optional[tuple[int, int, int]]


@dataclass(frozen=True)
class FoundPt:
    path: tuple[int, ...]


DriverResult = Union[Colored, FoundPt, NotThreeColorable]


def bound(t: int, triangle: bool) -> int:
    """Best guaranteed number of colors for a 3-colorable P_t-free graph.

    >>> [bound(t, True) for t in range(3, 12)]
    [3, 3, 3, 5, 5, 6, 6, 8, 8]
    >>> [bound(t, False) for t in range(3, 12)]
    [2, 2, 3, 4, 4, 5, 5, 6, 6]
    """
    if t < 3:
        raise ValueError("bounds are tabulated for t >= 3")
    h = t // 2  # ceil((t - 1) / 2)
    if triangle:
        if t == 5:
            return 3
        return min(max(3, 2 * t - 5), max(5, 2 * h - 2))
    return min(max(2, t - 2), max(4, h + 1))


def _root(G: Graph, comp: list[int], policy: Union[str, int]) -> int:
    if policy == "lowest-id":
        return comp[0]
    if policy == "max-degree":
        return max(comp, key=lambda u: (G.degree(u), -u))
    if isinstance(policy, int):
        return policy if policy in comp else comp[0]
    raise ValueError(f"unknown root policy {policy!r}")


def _color_component(G: Graph, comp: list[int], v: int, t: int):
    W = frozenset(comp)
    out = _seed(G, W, v, t, t)
    if isinstance(out, NotThreeColorable):
        return out
    if isinstance(out, (InducedPt, PathFromV)):
        return FoundPt(out.path)
    cr = closure_F(G, out.S, within=W)
    frontier = color_frontier(G, cr, sorted(out.S))
    if frontier is None:
        return NotThreeColorable(ListExhaustion(tuple(sorted(out.S)), cr.frontier))
    via_seed = {**frontier.assignments}
    via_seed.update((u, c + 3) for u, c in out.remainder_coloring.assignments.items())
    via_seed = Coloring(via_seed).compact()
    triangle = out.triangle

    other = _start(G, W, v, t)
    if isinstance(other, NotThreeColorable):
        return other
    if isinstance(other, PathFromV):
        return FoundPt(other.path)
    via_root = other.coloring.compact()
    if isinstance(other, WithTriangle) and triangle is None:
        triangle = other.triangle

    best = via_seed if via_seed.colors_used <= via_root.colors_used else via_root
    return best, triangle


def approx_color(G: Graph, t: int, root: Union[str, int] = "lowest-id") -> DriverResult:
    """Color ``G`` with few colors if it is 3-colorable and P_t-free.

    On other inputs the result may instead be an induced ``P_t`` or a
    non-3-colorability certificate; whatever comes back has been checked.
    ``root`` is ``"lowest-id"``, ``"max-degree"`` or a vertex id.
    """
    if t < 3:
        raise ValueError("t must be at least 3")
    if isinstance(root, int) and not 0 <= root < G.n:
        raise ValueError(f"root {root} is not a vertex")
    colors: dict[int, int] = {}
    used = 0
    triangle = None
    for comp in _components(G, range(G.n)):
        out = _color_component(G, comp, _root(G, comp, root), t)
        if isinstance(out, FoundPt):
            if not verify_path(G, out.path, t):
                raise InternalError(f"reported path {out.path} is not an induced P_{t}")
            return out
        if isinstance(out, NotThreeColorable):
            return out
        c, tri = out
        colors.update(c.assignments)
        used = max(used, c.colors_used)
        triangle = triangle or tri
    coloring = Coloring(colors, used)
    if len(colors) != G.n or not verify_coloring(G, coloring):
        raise InternalError("composed coloring is not a proper total coloring")
    if triangle is not None and not verify_triangle(G, triangle):
        raise InternalError(f"reported triangle {triangle} is not a triangle")
    return Colored(coloring, used, triangle)


# -- JSON ---------------------------------------------------------------------


def refutation_to_json(ref: Refutation, cert_cap: int = DEFAULT_CERT_CAP) -> dict[str, Any]:
    if isinstance(ref, SmallSubgraph):
        return {
            "kind": "small-subgraph",
            "vertices": sorted(ref.vertices),
            "oversized": ref.oversized(cert_cap),
        }
    return {"kind": "list-exhaustion", "seed": list(ref.seed), "frontier": sorted(ref.frontier)}


def refutation_from_json(data: dict[str, Any]) -> Refutation:
    kind = data.get("kind")
    if kind == "small-subgraph":
        return SmallSubgraph(frozenset(int(u) for u in data["vertices"]))
    if kind == "list-exhaustion":
        return ListExhaustion(tuple(int(u) for u in data["seed"]), frozenset(int(u) for u in data["frontier"]))
    raise ValueError(f"unknown certificate kind {kind!r}")


def result_to_json(
    result: DriverResult,
    G: Graph,
    t: int,
    runtime_ms: Optional[float] = None,
    cert_cap: int = DEFAULT_CERT_CAP,
) -> dict[str, Any]:
    """Serialize a driver result; the coloring is a list indexed by vertex id."""
    out: dict[str, Any] = {"schema": SCHEMA_VERSION, "t": t, "n": G.n, "m": G.m}
    if isinstance(result, Colored):
        out.update(
            status="colored",
            colors_used=result.colors_used,
            coloring=result.coloring.as_list(G.n),
            triangle=list(result.triangle) if result.triangle else None,
            bound=bound(t, result.triangle is not None),
        )
    elif isinstance(result, FoundPt):
        out.update(status="found-path", path=list(result.path), bound=None)
    else:
        out.update(
            status="not-3-colorable",
            certificate=refutation_to_json(result.refutation, cert_cap),
            bound=None,
        )
    out["runtime_ms"] = runtime_ms
    return out


def timed_approx_color(G: Graph, t: int, root: Union[str, int] = "lowest-id"):
    """``approx_color`` plus its wall time in milliseconds."""
    start = time.perf_counter()
    result = approx_color(G, t, root)
    return result, (time.perf_counter() - start) * 1000.0

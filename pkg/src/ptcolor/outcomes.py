"""Result objects shared by the colorers.

Every algorithm returns exactly one of these; paths and triangles are tuples
of vertex ids in the input graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graph import Coloring

DEFAULT_CERT_CAP = 24

Path = tuple[int, ...]
Triangle = tuple[int, int, int]


@dataclass(frozen=True)
class SmallSubgraph:
    """``G[vertices]`` is not 3-colorable."""

    vertices: frozenset[int]

    def oversized(self, cap: int = DEFAULT_CERT_CAP) -> bool:
        return len(self.vertices) > cap


@dataclass(frozen=True)
class ListExhaustion:
    """No proper 3-coloring of ``seed`` extends to ``G[frontier]``.

    Checked by replaying the frontier search (see ``oracles.verify_refutation``).
    """

    seed: tuple[int, ...]
    frontier: frozenset[int]


Refutation = Union[SmallSubgraph, ListExhaustion]


@dataclass(frozen=True)
class NotThreeColorable:
    refutation: Refutation


@dataclass(frozen=True)
class PathFromV:
    path: Path


@dataclass(frozen=True)
class InducedPt:
    path: Path


@dataclass(frozen=True)
class Plain:
    coloring: Coloring


@dataclass(frozen=True)
class WithTriangle:
    coloring: Coloring
    triangle: Triangle


@dataclass(frozen=True)
class SeedResult:
    """A seed set whose frontier splits off an already-colored remainder.

    ``remainder_coloring`` covers exactly the vertices outside
    ``F(S) ∪ N(F(S))``, using at most ``palette_bound`` colors.
    """

    S: frozenset[int]
    remainder_coloring: Coloring
    triangle: Optional[Triangle]
    palette_bound: int


StartOutcome = Union[NotThreeColorable, PathFromV, Plain, WithTriangle]
SeedOutcome = Union[NotThreeColorable, InducedPt, PathFromV, SeedResult]


class InternalError(AssertionError):
    """An algorithm produced an object that failed its own check."""

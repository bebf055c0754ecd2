"""Immutable simple graphs, colorings, and polynomial-time witness checks.

Vertices are dense integers ``0..n-1``. Every algorithm in the package works
on vertex subsets of one shared :class:`Graph`, so witnesses (paths,
triangles, certificates) are always reported in the caller's vertex ids.
"""

from __future__ import annotations

import bisect
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Graph",
    "Coloring",
    "Bipartition",
    "OddCycle",
    "GraphFormatError",
    "from_edge_list",
    "induced_subgraph",
    "connected_components",
    "bipartition_or_odd_cycle",
    "verify_coloring",
    "verify_path",
    "verify_triangle",
    "parse_graph",
    "format_graph",
    "read_graph",
    "write_graph",
]


class GraphFormatError(ValueError):
    """Raised for malformed edge lists or graph files.

    ``line`` is the 1-based source line when the error comes from text input.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Graph:
    """Undirected simple graph with sorted adjacency lists.

    Build instances with :func:`from_edge_list` or :func:`parse_graph`; the
    constructor trusts its input.
    """

    __slots__ = ("n", "m", "adj", "_nbr")

    def __init__(self, adj: Sequence[Sequence[int]]):
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in adj)
        self.n = len(self.adj)
        self.m = sum(len(a) for a in self.adj) // 2
        self._nbr = tuple(frozenset(a) for a in self.adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._nbr[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        i = bisect.bisect_left(a, v)
        return i < len(a) and a[i] == v

    def edges(self) -> Iterable[tuple[int, int]]:
        for u, a in enumerate(self.adj):
            for v in a:
                if u < v:
                    yield u, v

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a canonical graph, rejecting self-loops, repeats and bad ids."""
    if n < 0:
        raise GraphFormatError(f"negative vertex count {n}")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphFormatError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    for a in adj:
        a.sort()
    return Graph(adj)


def induced_subgraph(G: Graph, W: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``(G[W], old_ids)`` where new vertex ``i`` is ``old_ids[i]``."""
    old_ids = sorted(set(W))
    new_id = {u: i for i, u in enumerate(old_ids)}
    adj = [[new_id[w] for w in G.adj[u] if w in new_id] for u in old_ids]
    return Graph(adj), old_ids


def _components(G: Graph, W: Iterable[int]) -> list[list[int]]:
    # Components of G[W], each sorted, ordered by minimum vertex.
    unseen = set(W)
    out = []
    for s in sorted(unseen):
        if s not in unseen:
            continue
        unseen.discard(s)
        comp = [s]
        stack = [s]
        while stack:
            fresh = G.neighbors(stack.pop()) & unseen
            if fresh:
                unseen -= fresh
                comp.extend(fresh)
                stack.extend(fresh)
        comp.sort()
        out.append(comp)
    return out


def connected_components(G: Graph) -> list[list[int]]:
    """Partition V(G) into connected components, sorted by minimum vertex."""
    return _components(G, range(G.n))


@dataclass(frozen=True)
class Bipartition:
    sides: tuple[frozenset[int], frozenset[int]]


@dataclass(frozen=True)
class OddCycle:
    vertices: tuple[int, ...]


def bipartition_or_odd_cycle(G: Graph, W: Iterable[int]) -> Bipartition | OddCycle:
    """2-color ``G[W]`` by BFS layers, or return an odd cycle inside ``W``.

    Side 0 of every component holds its minimum vertex.
    """
    W = W if isinstance(W, (set, frozenset)) else set(W)
    parent: dict[int, int | None] = {}
    depth: dict[int, int] = {}
    for s in sorted(W):
        if s in depth:
            continue
        depth[s] = 0
        parent[s] = None
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in sorted(G.neighbors(u) & W):
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif depth[w] == depth[u]:
                    return OddCycle(_cycle_through(parent, u, w))
    A = frozenset(u for u, d in depth.items() if d % 2 == 0)
    return Bipartition((A, frozenset(W) - A))


def _cycle_through(parent: Mapping[int, int | None], u: int, w: int) -> tuple[int, ...]:
    # u and w sit on the same BFS layer and are adjacent; climb to their
    # lowest common ancestor.
    left, right = [u], [w]
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    return tuple(left + right[-2::-1])


@dataclass(frozen=True)
class Coloring:
    """Partial vertex coloring with colors in ``1..palette_size``.

    The domain is exactly the set of keys of ``assignments``.
    """

    assignments: Mapping[int, int]
    palette_size: int = field(default=-1)

    def __post_init__(self):
        if self.palette_size < 0:
            object.__setattr__(self, "palette_size", max(self.assignments.values(), default=0))

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(self.assignments)

    @property
    def colors_used(self) -> int:
        return len(set(self.assignments.values()))

    def __getitem__(self, v: int) -> int:
        return self.assignments[v]

    def __contains__(self, v: int) -> bool:
        return v in self.assignments

    def __len__(self) -> int:
        return len(self.assignments)

    def restrict(self, W: Iterable[int]) -> "Coloring":
        W = set(W)
        return Coloring({v: c for v, c in self.assignments.items() if v in W}, self.palette_size)

    def compact(self) -> "Coloring":
        """Relabel colors to ``1..colors_used`` preserving their order."""
        relabel = {c: i for i, c in enumerate(sorted(set(self.assignments.values())), 1)}
        return Coloring({v: relabel[c] for v, c in self.assignments.items()}, len(relabel))

    def as_list(self, n: int, missing: int = 0) -> list[int]:
        return [self.assignments.get(v, missing) for v in range(n)]


def verify_coloring(G: Graph, c: Coloring) -> bool:
    """True iff ``c`` is a proper coloring of ``G[c.domain]`` within its palette."""
    colors = c.assignments
    for v, col in colors.items():
        if not (isinstance(v, int) and 0 <= v < G.n):
            return False
        if not (isinstance(col, int) and 1 <= col <= c.palette_size):
            return False
    classes: dict[int, set[int]] = {}
    for v, col in colors.items():
        classes.setdefault(col, set()).add(v)
    if len(classes) > c.palette_size:
        return False
    return all(G.neighbors(v).isdisjoint(cls) for cls in classes.values() for v in cls)


def verify_path(
    G: Graph, p: Sequence[int], required_len: int | None = None, required_start: int | None = None
) -> bool:
    """True iff ``p`` is an induced path in ``G`` of the requested length and start."""
    p = list(p)
    if required_len is not None and len(p) != required_len:
        return False
    if not p:
        return False
    if required_start is not None and p[0] != required_start:
        return False
    if any(not (isinstance(v, int) and 0 <= v < G.n) for v in p):
        return False
    if len(set(p)) != len(p):
        return False
    pos = {v: i for i, v in enumerate(p)}
    for i, v in enumerate(p):
        # consecutive pairs must be edges, every other pair a non-edge
        if i + 1 < len(p) and not G.has_edge(v, p[i + 1]):
            return False
        for w in G.adj[v]:
            j = pos.get(w)
            if j is not None and abs(i - j) != 1:
                return False
    return True


def verify_triangle(G: Graph, tri: Sequence[int]) -> bool:
    if len(tri) != 3 or len(set(tri)) != 3:
        return False
    if any(not (isinstance(v, int) and 0 <= v < G.n) for v in tri):
        return False
    a, b, c = tri
    return G.has_edge(a, b) and G.has_edge(b, c) and G.has_edge(a, c)


# -- text format -------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` starts a comment."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError("negative count in header", lineno)
            header = (a, b)
        else:
            edges.append((a, b))
            lines.append(lineno)
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(edges)} were given")
    try:
        return from_edge_list(n, edges)
    except GraphFormatError as exc:
        # re-run edge by edge to attach a line number to the first offender
        seen: set[tuple[int, int]] = set()
        for (u, v), lineno in zip(edges, lines):
            key = (min(u, v), max(u, v))
            if not (0 <= u < n and 0 <= v < n) or u == v or key in seen:
                raise GraphFormatError(str(exc), lineno) from None
            seen.add(key)
        raise


def format_graph(G: Graph) -> str:
    out = [f"{G.n} {G.m}"]
    out.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(out) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(G: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(G))

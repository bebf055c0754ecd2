"""Instance constructions: hardness gadgets and 3-colorable P_t-free corpora.

All randomness flows through ``numpy.random.SeedSequence`` so an instance is
reproducible from ``(seed, parameters)`` alone.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence

import numpy as np

from .graph import Graph, from_edge_list, write_graph
from .oracles import DEFAULT_CAP, NaeFormula, find_induced_path

__all__ = [
    "ReductionGraph",
    "nae_reduction",
    "clique_join",
    "random_3colorable",
    "random_3colorable_ptfree",
    "random_nae_formula",
    "multipartite",
    "blowup",
    "disjoint_union",
    "write_corpus",
]


@dataclass(frozen=True)
class ReductionGraph:
    graph: Graph
    v: int
    literal_map: dict[int, tuple[int, int]]
    clause_triangles: tuple[tuple[int, int, int], ...]


def nae_reduction(f: NaeFormula) -> ReductionGraph:
    """Graph that is 3-colorable iff ``f`` is NAE-satisfiable.

    Vertex 0 is the apex, variable ``i`` owns ``2i-1`` (positive) and ``2i``
    (negated), and clause ``j`` owns the triangle starting at ``1 + 2n + 3j``.
    """
    n = f.num_vars
    literal_map = {i: (2 * i - 1, 2 * i) for i in range(1, n + 1)}
    edges = []
    for x, nx in literal_map.values():
        edges += [(0, x), (0, nx), (x, nx)]
    triangles = []
    for j, clause in enumerate(f.clauses):
        a = 1 + 2 * n + 3 * j
        tri = (a, a + 1, a + 2)
        triangles.append(tri)
        edges += [(a, a + 1), (a + 1, a + 2), (a, a + 2)]
        for corner, lit in zip(tri, clause):
            x, nx = literal_map[abs(lit)]
            edges.append((corner, x if lit > 0 else nx))
    G = from_edge_list(1 + 2 * n + 3 * len(f.clauses), edges)
    return ReductionGraph(G, 0, literal_map, tuple(triangles))


def clique_join(G: Graph, k: int) -> Graph:
    """Add a ``(k-3)``-clique complete to ``G``; k-colorable iff ``G`` is 3-colorable."""
    if k < 4:
        raise ValueError("k must be at least 4")
    new = range(G.n, G.n + k - 3)
    edges = list(G.edges())
    edges += list(itertools.combinations(new, 2))
    edges += [(u, a) for a in new for u in range(G.n)]
    return from_edge_list(G.n + k - 3, edges)


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.SeedSequence):
        return np.random.default_rng(seed)
    return np.random.default_rng(np.random.SeedSequence(seed))


def random_3colorable(n: int, p: float, seed) -> Graph:
    """Random graph over a hidden partition into three near-equal classes."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = _rng(seed)
    cls = np.empty(n, dtype=np.int64)
    cls[rng.permutation(n)] = np.arange(n) % 3
    iu, ju = np.triu_indices(n, 1)
    keep = (cls[iu] != cls[ju]) & (rng.random(iu.size) < p)
    return from_edge_list(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def random_3colorable_ptfree(
    n: int, t: int, p: float, seed, max_tries: int = 100, cap: int = DEFAULT_CAP
) -> Optional[Graph]:
    """Rejection-sample :func:`random_3colorable` until it has no induced ``P_t``."""
    root = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    for child in root.spawn(max_tries):
        G = random_3colorable(n, p, child)
        if find_induced_path(G, t, cap=cap) is None:
            return G
    return None


def random_nae_formula(num_vars: int, num_clauses: int, seed) -> NaeFormula:
    rng = _rng(seed)
    clauses = []
    for _ in range(num_clauses):
        vars_ = rng.integers(1, num_vars + 1, size=3)
        signs = rng.choice((-1, 1), size=3)
        clauses.append(tuple(int(s * x) for s, x in zip(signs, vars_)))
    return NaeFormula(num_vars, tuple(clauses))


def multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; parts are consecutive id blocks."""
    if not sizes or any(s < 0 for s in sizes):
        raise ValueError("need at least one part, all of non-negative size")
    starts = np.cumsum([0, *sizes]).tolist()
    parts = [range(starts[i], starts[i + 1]) for i in range(len(sizes))]
    edges = [
        (u, w)
        for a, b in itertools.combinations(range(len(parts)), 2)
        for u in parts[a]
        for w in parts[b]
    ]
    return from_edge_list(starts[-1], edges)


def blowup(G: Graph, sizes: Sequence[int]) -> Graph:
    """Replace vertex ``u`` by an independent set of ``sizes[u]`` twins.

    Twins keep 3-colorability, and for ``t >= 4`` an induced path can hold two
    twins only as the ends of a ``P_3``, so ``P_t``-freeness is kept too.
    """
    if len(sizes) != G.n or any(s < 1 for s in sizes):
        raise ValueError("need one positive size per vertex")
    starts = np.cumsum([0, *sizes]).tolist()
    edges = [
        (a, b)
        for u, w in G.edges()
        for a in range(starts[u], starts[u + 1])
        for b in range(starts[w], starts[w + 1])
    ]
    return from_edge_list(starts[-1], edges)


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    edges = []
    offset = 0
    for H in graphs:
        edges += [(u + offset, w + offset) for u, w in H.edges()]
        offset += H.n
    return from_edge_list(offset, edges)


def write_corpus(outdir: str | Path, instances: Iterable[tuple[str, Graph, dict[str, Any]]]) -> Path:
    """Write ``<name>.graph`` files plus ``manifest.json``; returns the manifest path.

    An existing manifest is extended; entries with a reused name are replaced.
    """
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    manifest = outdir / "manifest.json"
    by_name = {}
    if manifest.exists():
        by_name = {e["name"]: e for e in json.loads(manifest.read_text())["instances"]}
    for name, G, meta in instances:
        write_graph(G, outdir / f"{name}.graph")
        by_name[name] = {"name": name, "file": f"{name}.graph", "n": G.n, "m": G.m, **meta}
    entries = [by_name[k] for k in sorted(by_name)]
    manifest.write_text(json.dumps({"schema": 1, "instances": entries}, indent=2) + "\n")
    return manifest

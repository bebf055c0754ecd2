"""Exponential-time ground truth for small instances.

Every oracle refuses inputs above its size cap with :class:`OracleCapExceeded`
instead of silently running forever.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .closure import closure_F
from .finish import ListInstance, color_frontier
from .graph import Coloring, Graph, induced_subgraph
from .outcomes import DEFAULT_CERT_CAP, ListExhaustion, Refutation, SmallSubgraph

__all__ = [
    "OracleCapExceeded",
    "NaeFormula",
    "brute_color",
    "brute_three_color",
    "find_induced_path",
    "brute_list_color",
    "nae_solve",
    "verify_refutation",
    "parse_nae",
    "format_nae",
    "read_nae",
]

DEFAULT_CAP = 24


class OracleCapExceeded(ValueError):
    pass


def _check_cap(size: int, cap: int, what: str) -> None:
    if size > cap:
        raise OracleCapExceeded(f"{what} has size {size}, above the oracle cap {cap}")


def brute_color(G: Graph, k: int, cap: int = DEFAULT_CAP) -> Optional[Coloring]:
    """Some proper ``k``-coloring of ``G`` or None, by first-fail backtracking."""
    _check_cap(G.n, cap, "graph")
    colors = [0] * G.n
    uncolored = set(range(G.n))

    def choose() -> int:
        # fewest available colors first, then highest degree, then lowest id
        def key(u):
            used = {colors[w] for w in G.adj[u]}
            return (len(used - {0}), G.degree(u), -u)

        return max(uncolored, key=key)

    def search() -> bool:
        if not uncolored:
            return True
        u = choose()
        used = {colors[w] for w in G.adj[u]}
        uncolored.discard(u)
        top = max(colors) + 1  # colors above the first unused one are symmetric
        for c in range(1, min(k, top) + 1):
            if c not in used:
                colors[u] = c
                if search():
                    return True
        colors[u] = 0
        uncolored.add(u)
        return False

    if not search():
        return None
    return Coloring(dict(enumerate(colors)), k)


def brute_three_color(G: Graph, cap: int = DEFAULT_CAP) -> Optional[Coloring]:
    return brute_color(G, 3, cap)


def find_induced_path(
    G: Graph, t: int, start: Optional[int] = None, cap: int = DEFAULT_CAP
) -> Optional[tuple[int, ...]]:
    """An induced path on exactly ``t`` vertices (beginning at ``start`` if given)."""
    _check_cap(G.n, cap, "graph")
    if t < 1:
        raise ValueError("t must be positive")
    nbr = [sum(1 << w for w in G.adj[u]) for u in range(G.n)]
    path: list[int] = []

    def extend(blocked: int) -> bool:
        # blocked: path vertices plus neighbors of every path vertex but the last
        if len(path) == t:
            return True
        last = path[-1]
        cand = nbr[last] & ~blocked
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            path.append(u)
            if extend(blocked | nbr[last] | low):
                return True
            path.pop()
        return False

    for s in ([start] if start is not None else range(G.n)):
        path[:] = [s]
        if extend(1 << s):
            return tuple(path)
    return None


def brute_list_color(G: Graph, li: ListInstance, cap: int = 15) -> Optional[Coloring]:
    """Exhaustive search over list assignments of ``li.region``."""
    _check_cap(len(li.region), cap, "list region")
    li.validate(G)
    order = sorted(li.region)
    colors: dict[int, int] = {}

    def ok(v: int, c: int) -> bool:
        return all(colors.get(w) != c and li.fixed.get(w) != c for w in G.adj[v])

    def search(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c in li.lists[v]:
            if ok(v, c):
                colors[v] = c
                if search(i + 1):
                    return True
                del colors[v]
        return False

    return Coloring(dict(colors), 3) if search(0) else None


@dataclass(frozen=True)
class NaeFormula:
    """Clauses of exactly three signed, 1-based literals."""

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.num_vars < 0:
            raise ValueError("negative variable count")
        clauses = tuple(tuple(c) for c in self.clauses)
        for c in clauses:
            if len(c) != 3:
                raise ValueError(f"clause {c} does not have exactly three literals")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range 1..{self.num_vars}")
        object.__setattr__(self, "clauses", clauses)


def nae_solve(f: NaeFormula, cap: int = 20) -> Optional[tuple[bool, ...]]:
    """First assignment (in ``itertools.product`` order) with no clause all-equal."""
    _check_cap(f.num_vars, cap, "formula")
    for bits in itertools.product((True, False), repeat=f.num_vars):
        ok = True
        for clause in f.clauses:
            vals = {bits[abs(lit) - 1] == (lit > 0) for lit in clause}
            if len(vals) == 1:
                ok = False
                break
        if ok:
            return bits
    return None


def verify_refutation(G: Graph, ref: Refutation, cap: int = DEFAULT_CERT_CAP) -> bool:
    """Check a non-3-colorability certificate against ``G``."""
    if isinstance(ref, SmallSubgraph):
        if any(not 0 <= u < G.n for u in ref.vertices):
            return False
        _check_cap(len(ref.vertices), cap, "certificate")
        sub, _ = induced_subgraph(G, ref.vertices)
        return brute_three_color(sub, cap) is None
    if isinstance(ref, ListExhaustion):
        if not ref.seed or any(not 0 <= u < G.n for u in ref.seed):
            return False
        cr = closure_F(G, ref.seed)
        if cr.frontier != ref.frontier:
            return False
        return color_frontier(G, cr, ref.seed) is None
    return False


# -- NAE text format ----------------------------------------------------------


def parse_nae(text: str) -> NaeFormula:
    """Parse ``p nae3 <vars> <clauses>`` followed by one clause per line."""
    header = None
    clauses: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line or line.startswith("c "):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 4 or parts[:2] != ["p", "nae3"]:
                raise ValueError(f"line {lineno}: expected 'p nae3 <vars> <clauses>'")
            header = (int(parts[2]), int(parts[3]))
            continue
        try:
            lits = [int(x) for x in parts]
        except ValueError:
            raise ValueError(f"line {lineno}: literals must be integers") from None
        if lits and lits[-1] == 0:
            lits = lits[:-1]
        if len(lits) != 3:
            raise ValueError(f"line {lineno}: a clause needs exactly three literals")
        clauses.append((lits[0], lits[1], lits[2]))
    if header is None:
        raise ValueError("missing 'p nae3' header")
    if len(clauses) != header[1]:
        raise ValueError(f"header declares {header[1]} clauses but {len(clauses)} were given")
    return NaeFormula(header[0], tuple(clauses))


def format_nae(f: NaeFormula) -> str:
    lines = [f"p nae3 {f.num_vars} {len(f.clauses)}"]
    lines.extend(" ".join(str(lit) for lit in c) for c in f.clauses)
    return "\n".join(lines) + "\n"


def read_nae(path: str | Path) -> NaeFormula:
    return parse_nae(Path(path).read_text())

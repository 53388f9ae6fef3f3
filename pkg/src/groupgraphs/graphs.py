"""Simple undirected graphs with packed-bit adjacency rows.

Adjacency tests and whole-row sweeps dominate the brute-force connectivity
recomputation, so rows are stored as Python ints used as bitsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class SimpleGraph:
    """Immutable loop-free undirected graph on vertices ``0..n-1``."""

    n: int
    rows: tuple[int, ...]  # rows[u] = bitmask of neighbours of u
    m: int

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def neighbors(self, u: int) -> Iterator[int]:
        row = self.rows[u]
        while row:
            low = row & -row
            yield low.bit_length() - 1
            row ^= low

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted lexicographically."""
        out = []
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return out

    def edge_arrays(self) -> tuple[list[int], list[int]]:
        us, vs = [], []
        for u, v in self.edges():
            us.append(u)
            vs.append(v)
        return us, vs


def _graph_from_rows(n: int, rows: list[int]) -> SimpleGraph:
    m = sum(r.bit_count() for r in rows) // 2
    return SimpleGraph(n, tuple(rows), m)


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
    """Build from an edge list (deduplicated, symmetrized); loops are rejected."""
    if n < 0:
        raise GraphError(f"vertex count must be >= 0, got {n}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop edge ({u}, {v}) not allowed in a simple graph")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for {n} vertices")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return _graph_from_rows(n, rows)


def complete_graph(n: int) -> SimpleGraph:
    full = (1 << n) - 1
    rows = [full ^ (1 << u) for u in range(n)]
    return _graph_from_rows(n, rows)


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    min_degree: int
    min_vertex: int | None  # a vertex attaining the minimum (smallest index)
    regular: bool


def degree_profile(g: SimpleGraph) -> DegreeProfile:
    if g.n == 0:
        return DegreeProfile((), 0, None, True)
    degrees = tuple(r.bit_count() for r in g.rows)
    lo = min(degrees)
    return DegreeProfile(degrees, lo, degrees.index(lo), lo == max(degrees))


def is_complete(g: SimpleGraph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_regular(g: SimpleGraph) -> bool:
    return degree_profile(g).regular


def dominating_vertices(g: SimpleGraph) -> tuple[int, ...]:
    want = g.n - 1
    return tuple(u for u in range(g.n) if g.rows[u].bit_count() == want)


def _reach_mask(g: SimpleGraph, start: int) -> int:
    seen = 1 << start
    frontier = seen
    rows = g.rows
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= rows[low.bit_length() - 1]
            frontier ^= low
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: SimpleGraph) -> bool:
    if g.n <= 1:
        return True
    return _reach_mask(g, 0) == (1 << g.n) - 1


def diameter(g: SimpleGraph) -> int | None:
    """Exact BFS diameter; ``None`` when disconnected; 0 for a single vertex."""
    if g.n == 0:
        return None
    full = (1 << g.n) - 1
    rows = g.rows
    best = 0
    for s in range(g.n):
        seen = 1 << s
        frontier = seen
        dist = 0
        while True:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= rows[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            if not nxt:
                break
            dist += 1
            seen |= nxt
            frontier = nxt
        if seen != full:
            return None
        if dist > best:
            best = dist
    return best


def puncture(g: SimpleGraph,
             drop_edges: Iterable[tuple[int, int]] = (),
             drop_vertices: Iterable[int] = ()) -> tuple[SimpleGraph, tuple[int, ...]]:
    """Delete edges and/or vertices; survivors are relabeled contiguously.

    Returns the new graph and the tuple mapping each new index to its old one.
    """
    rows = list(g.rows)
    for u, v in drop_edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.adjacent(u, v):
            raise GraphError(f"edge ({u}, {v}) not present")
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    dropped = 0
    for u in drop_vertices:
        if not 0 <= u < g.n:
            raise GraphError(f"vertex {u} not present")
        dropped |= 1 << u
    keep = [u for u in range(g.n) if not (dropped >> u) & 1]
    new_index = {old: new for new, old in enumerate(keep)}
    new_rows = [0] * len(keep)
    for new_u, old_u in enumerate(keep):
        row = rows[old_u] & ~dropped
        while row:
            low = row & -row
            new_rows[new_u] |= 1 << new_index[low.bit_length() - 1]
            row ^= low
    return _graph_from_rows(len(keep), new_rows), tuple(keep)


# --- text formats -------------------------------------------------------------

def format_edge_list(g: SimpleGraph) -> str:
    """First line ``n m``, then one ``u v`` line per edge (u < v, sorted)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> SimpleGraph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphError("empty edge-list input")
    try:
        n, m = map(int, lines[0].split())
    except ValueError:
        raise GraphError(f"bad header line {lines[0]!r}, expected 'n m'") from None
    edges = []
    for ln in lines[1:]:
        try:
            u, v = map(int, ln.split())
        except ValueError:
            raise GraphError(f"bad edge line {ln!r}") from None
        edges.append((u, v))
    if len(edges) != m:
        raise GraphError(f"header promises {m} edges, found {len(edges)}")
    g = graph_from_edges(n, edges)
    if g.m != m:
        raise GraphError("duplicate edges in input")
    return g


def format_dot(g: SimpleGraph, labels: tuple[str, ...] | None = None,
               name: str = "G") -> str:
    def quote(s: str) -> str:
        return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = [f"graph {quote(name)} {{"]
    for u in range(g.n):
        label = f" [label={quote(labels[u])}]" if labels else ""
        lines.append(f"  {u}{label};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"

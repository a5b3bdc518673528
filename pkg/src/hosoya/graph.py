"""Simple undirected graphs, BFS distances and the brute-force Hosoya oracle."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DisconnectedGraph, LoopEdge, ParseError
from .poly import Polynomial

__all__ = [
    "Graph",
    "DistanceRow",
    "parse_graph",
    "format_edge_list",
    "bfs_distances",
    "hosoya_bruteforce",
    "partial_hosoya",
    "require_connected",
]


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``. Labels are
    carried for debugging output only and never influence a computation.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        adj = tuple(tuple(sorted(s)) for s in nbrs)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels must have one entry per vertex")
        return cls(n, adj, labels)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Sorted edge list with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return len(_component(self, 0)) == self.n

    def induced_subgraph(self, vertices: Sequence[int]) -> tuple[Graph, dict[int, int]]:
        """Subgraph induced by ``vertices`` (in the given order) and the global->local map."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[u], index[w])
            for u in vertices
            for w in self.adjacency[u]
            if w in index and u < w
        ]
        labels = [self.labels[v] for v in vertices] if self.labels else None
        return Graph.from_edges(len(vertices), edges, labels), index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))


def _component(g: Graph, start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def require_connected(g: Graph) -> None:
    if g.n == 0:
        raise DisconnectedGraph("graph has no vertices")
    comp = _component(g, 0)
    if len(comp) != g.n:
        missing = min(set(range(g.n)) - comp)
        raise DisconnectedGraph(
            f"graph is disconnected: vertex 0 reaches {len(comp)} of {g.n} vertices "
            f"(vertex {missing} unreachable)"
        )


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document into a connected graph.

    One edge per line as two whitespace-separated nonnegative integers;
    ``#`` starts a comment and blank lines are skipped. Vertex ids are
    compacted to ``0..n-1`` in order of first appearance. A repeated edge is
    the same edge and is kept once.
    """
    ids: dict[int, int] = {}
    first_line: list[tuple[int, str]] = []
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError("expected two vertex ids", line_no, raw)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError("vertex ids must be integers", line_no, raw) from None
        if a < 0 or b < 0:
            raise ParseError("vertex ids must be nonnegative", line_no, raw)
        if a == b:
            raise LoopEdge("loop edge", line_no, raw)
        for x in (a, b):
            if x not in ids:
                ids[x] = len(ids)
                first_line.append((line_no, raw))
        edges.append((ids[a], ids[b]))
    if not ids:
        raise ParseError("edge list is empty")
    g = Graph.from_edges(len(ids), edges, [str(k) for k in ids])
    comp = _component(g, 0)
    if len(comp) != g.n:
        stray = min(set(range(g.n)) - comp)
        line_no, raw = first_line[stray]
        raise DisconnectedGraph(
            f"line {line_no}: graph is disconnected; vertex {g.labels[stray]} is not reachable "
            f"from vertex {g.labels[0]}: {raw!r}"
        )
    return g


def format_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


@dataclass(frozen=True)
class DistanceRow:
    source: int
    dist: tuple[int, ...]


def _bfs(adj: tuple[tuple[int, ...], ...], n: int, source: int) -> list[int]:
    dist = [-1] * n
    dist[source] = 0
    queue = deque((source,))
    pop, push = queue.popleft, queue.append
    while queue:
        u = pop()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                push(w)
    return dist


def bfs_distances(g: Graph, source: int) -> DistanceRow:
    """Hop distances from ``source``; unreachable vertices raise DisconnectedGraph."""
    if not 0 <= source < g.n:
        raise IndexError(f"source {source} out of range")
    dist = _bfs(g.adjacency, g.n, source)
    if -1 in dist:
        raise DisconnectedGraph(f"vertex {dist.index(-1)} unreachable from {source}")
    return DistanceRow(source, tuple(dist))


def _histogram(dist: list[int]) -> list[int]:
    counts = [0] * (max(dist) + 1)
    for d in dist:
        counts[d] += 1
    return counts


def hosoya_bruteforce(g: Graph) -> Polynomial:
    """Hosoya polynomial by BFS from every vertex.

    Ordered pairs at each distance are tallied and halved. This is the
    oracle every other route is checked against.
    """
    if g.n == 0:
        raise DisconnectedGraph("graph has no vertices")
    adj, n = g.adjacency, g.n
    totals: list[int] = []
    for s in range(n):
        dist = _bfs(adj, n, s)
        if -1 in dist:
            raise DisconnectedGraph(f"vertex {dist.index(-1)} unreachable from {s}")
        hist = _histogram(dist)
        if len(hist) > len(totals):
            totals.extend([0] * (len(hist) - len(totals)))
        for k, c in enumerate(hist):
            totals[k] += c
    if totals:
        totals[0] = 0
    return Polynomial(c // 2 for c in totals)


def partial_hosoya(g: Graph, u: int) -> Polynomial:
    """Distance profile of ``u``: sum over ``v != u`` of ``t**d(u, v)``."""
    hist = _histogram(list(bfs_distances(g, u).dist))
    hist[0] = 0
    return Polynomial(hist)

"""Small named graphs and seeded random point-attached graphs."""

from __future__ import annotations

import random

from .construct import ConstructionSpec, Kind, PartSpec
from .graph import Graph

__all__ = [
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
    "theta_graph",
    "random_block",
    "random_part",
    "point_attach",
    "random_point_attached",
    "random_construction",
]


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def theta_graph(a: int, b: int, c: int) -> Graph:
    """Two poles (0 and 1) joined by internally disjoint paths of lengths a, b, c.

    At most one length may be 1, otherwise the graph would have parallel edges.
    """
    lengths = (a, b, c)
    if min(lengths) < 1 or sum(1 for x in lengths if x == 1) > 1:
        raise ValueError(f"invalid theta path lengths {lengths}")
    edges: list[tuple[int, int]] = []
    n = 2
    for length in lengths:
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, n))
            prev = n
            n += 1
        edges.append((prev, 1))
    return Graph.from_edges(n, edges)


def random_block(rng: random.Random, max_vertices: int = 8) -> Graph:
    """A cycle C3..C8, clique K2..K5, path or theta graph, capped at ``max_vertices``."""
    kind = rng.choice(("cycle", "clique", "path", "theta"))
    if kind == "cycle":
        return cycle_graph(rng.randint(3, min(8, max_vertices)))
    if kind == "clique":
        return complete_graph(rng.randint(2, min(5, max_vertices)))
    if kind == "path":
        return path_graph(rng.randint(2, min(5, max_vertices)))
    while True:
        a, b, c = (rng.randint(1, 4) for _ in range(3))
        if sum(1 for x in (a, b, c) if x == 1) <= 1 and a + b + c - 1 <= max_vertices:
            return theta_graph(a, b, c)


def random_part(rng: random.Random, max_vertices: int = 8) -> Graph:
    """A random connected graph on at most ``max_vertices`` vertices.

    Either a named block or a random spanning tree with a few extra chords,
    which often has cut vertices of its own.
    """
    if rng.random() < 0.5:
        return random_block(rng, max_vertices)
    n = rng.randint(1, max_vertices)
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for _ in range(rng.randint(0, n)):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


def point_attach(g: Graph, at: int, h: Graph, h_vertex: int) -> tuple[Graph, list[int]]:
    """Identify vertex ``at`` of ``g`` with vertex ``h_vertex`` of ``h``.

    Vertices of ``g`` keep their ids; the other vertices of ``h`` follow in
    order. Returns the new graph and the id of every vertex of ``h`` in it.
    """
    where = []
    nxt = g.n
    for v in range(h.n):
        if v == h_vertex:
            where.append(at)
        else:
            where.append(nxt)
            nxt += 1
    edges = g.edges() + [(where[u], where[v]) for u, v in h.edges()]
    return Graph.from_edges(nxt, edges), where


def random_point_attached(
    rng: random.Random, min_blocks: int = 2, max_blocks: int = 6
) -> tuple[Graph, list[list[int]]]:
    """Attach 2..6 random blocks one at a time at random vertices.

    Returns the graph and, for every attached piece, its vertex ids in the
    result (a valid caller-supplied partition into primary subgraphs).
    """
    k = rng.randint(min_blocks, max_blocks)
    g = random_block(rng)
    parts = [list(range(g.n))]
    for _ in range(k - 1):
        h = random_block(rng)
        g, where = point_attach(g, rng.randrange(g.n), h, rng.randrange(h.n))
        parts.append(where)
    return g, parts


def random_construction(
    rng: random.Random,
    kind: Kind | str,
    identical: bool = False,
    max_vertices: int = 8,
    max_k: int = 6,
) -> ConstructionSpec:
    """A random bouquet, circuit, chain or link of small connected parts.

    With ``identical`` every part is the same rooted graph, so the
    identical-copy formulas apply.
    """
    kind = Kind(kind)
    k = rng.randint(3 if kind is Kind.CIRCUIT else 1, max_k)

    def one() -> PartSpec:
        g = random_part(rng, max_vertices)
        return PartSpec(g, rng.randrange(g.n), rng.randrange(g.n))

    if identical:
        return ConstructionSpec.copies(kind, one(), k)
    return ConstructionSpec(kind, tuple(one() for _ in range(k)))

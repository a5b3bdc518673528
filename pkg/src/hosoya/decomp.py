"""Cut-vertex decomposition and the point-attaching formula.

A graph built by point-attaching from primary subgraphs G_1..G_k satisfies

    H(G) = sum_i H(G_i) + sum_{i<j} H_{x(i->j)}(G_i) * H_{x(j->i)}(G_j) * t**delta(i, j)

where x(i->j) is the vertex of G_i closest to G_j and delta(i, j) is the
distance between the two subgraphs. By default the primary subgraphs are the
biconnected blocks; a coarser partition may be supplied by the caller.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, replace
from typing import Mapping, NamedTuple, Sequence

import numpy as np

from .errors import InvalidPartition
from .graph import Graph, _bfs, hosoya_bruteforce, require_connected
from .poly import IndexReport, Method, Polynomial, indices_from_hosoya

__all__ = [
    "Part",
    "Attachment",
    "Decomposition",
    "find_blocks",
    "decompose_partition",
    "resolve_attachments",
    "hosoya_from_decomposition",
    "hosoya_tree_sum",
    "hosoya_via_decomposition",
    "decomposition_to_json",
]


@dataclass(frozen=True)
class Part:
    """One primary subgraph: its vertices in G and the induced subgraph on them.

    ``graph`` uses local ids ``0..len(vertices)-1`` in the order of ``vertices``.
    """

    vertices: tuple[int, ...]
    graph: Graph
    local: Mapping[int, int]


class Attachment(NamedTuple):
    x_ij: int  # vertex of part i nearest to part j
    x_ji: int  # vertex of part j nearest to part i
    delta: int


@dataclass(frozen=True)
class Decomposition:
    blocks: tuple[Part, ...]
    cut_vertices: frozenset[int]
    bc_tree: tuple[tuple[int, int], ...]  # (part index, cut vertex) edges
    attachments: Mapping[tuple[int, int], Attachment] | None = None

    @property
    def k(self) -> int:
        return len(self.blocks)

    def parts_at(self) -> dict[int, list[int]]:
        """Cut vertex -> indices of the parts containing it."""
        out: dict[int, list[int]] = defaultdict(list)
        for p, c in self.bc_tree:
            out[c].append(p)
        return dict(out)

    def cuts_of(self) -> list[list[int]]:
        """Part index -> cut vertices it contains."""
        out: list[list[int]] = [[] for _ in self.blocks]
        for p, c in self.bc_tree:
            out[p].append(c)
        return out


def _biconnected_vertex_sets(g: Graph) -> list[set[int]]:
    # Hopcroft-Tarjan lowpoint DFS with explicit stacks (no recursion depth limit).
    n, adj = g.n, g.adjacency
    if n == 1:
        return [{0}]
    disc = [-1] * n
    low = [0] * n
    disc[0] = 0
    clock = 1
    edge_stack: list[tuple[int, int]] = []
    blocks: list[set[int]] = []
    stack = [(0, -1, iter(adj[0]))]
    while stack:
        u, parent, it = stack[-1]
        descended = False
        for w in it:
            if w == parent:
                continue
            if disc[w] == -1:
                disc[w] = low[w] = clock
                clock += 1
                edge_stack.append((u, w))
                stack.append((w, u, iter(adj[w])))
                descended = True
                break
            if disc[w] < disc[u]:
                if disc[w] < low[u]:
                    low[u] = disc[w]
                edge_stack.append((u, w))
        if descended:
            continue
        stack.pop()
        if not stack:
            break
        p = stack[-1][0]
        if low[u] < low[p]:
            low[p] = low[u]
        if low[u] >= disc[p]:
            comp: set[int] = set()
            while True:
                a, b = edge_stack.pop()
                comp.add(a)
                comp.add(b)
                if a == p and b == u:
                    break
            blocks.append(comp)
    return blocks


def _assemble(g: Graph, vertex_sets: Sequence[Sequence[int]]) -> Decomposition:
    parts = []
    membership: dict[int, list[int]] = defaultdict(list)
    for idx, vs in enumerate(vertex_sets):
        verts = tuple(sorted(vs))
        sub, local = g.induced_subgraph(verts)
        parts.append(Part(verts, sub, local))
        for v in verts:
            membership[v].append(idx)
    cuts = frozenset(v for v, ps in membership.items() if len(ps) > 1)
    tree = tuple((p, c) for c in sorted(cuts) for p in membership[c])
    return Decomposition(tuple(parts), cuts, tree)


def find_blocks(g: Graph) -> Decomposition:
    """Split a connected graph into biconnected blocks (bridges are K2 blocks).

    Blocks are ordered by their sorted vertex tuples so the result does not
    depend on traversal order. Attachments are left unresolved.
    """
    require_connected(g)
    sets = sorted((tuple(sorted(s)) for s in _biconnected_vertex_sets(g)))
    return _assemble(g, sets)


def decompose_partition(g: Graph, parts: Sequence[Sequence[int]]) -> Decomposition:
    """Use a caller-supplied grouping of vertices as the primary subgraphs.

    Each part must induce a connected subgraph, every edge must lie inside a
    part, and parts together with their shared vertices must form a tree
    (so any two parts share at most one vertex).
    """
    require_connected(g)
    if not parts:
        raise InvalidPartition("no parts given")
    sets = []
    membership: dict[int, list[int]] = defaultdict(list)
    for idx, vs in enumerate(parts):
        s = set(vs)
        if not s:
            raise InvalidPartition(f"part {idx} is empty")
        if len(s) != len(vs):
            raise InvalidPartition(f"part {idx} repeats a vertex")
        bad = [v for v in s if not 0 <= v < g.n]
        if bad:
            raise InvalidPartition(f"part {idx} has out-of-range vertex {bad[0]}")
        sub, _ = g.induced_subgraph(sorted(s))
        if not sub.is_connected():
            raise InvalidPartition(f"part {idx} does not induce a connected subgraph")
        for v in s:
            membership[v].append(idx)
        sets.append(s)
    missing = [v for v in range(g.n) if v not in membership]
    if missing:
        raise InvalidPartition(f"vertex {missing[0]} is in no part")
    shared_pairs: dict[tuple[int, int], int] = defaultdict(int)
    for v, ps in membership.items():
        for a in range(len(ps)):
            for b in range(a + 1, len(ps)):
                shared_pairs[ps[a], ps[b]] += 1
                if shared_pairs[ps[a], ps[b]] > 1:
                    raise InvalidPartition(f"parts {ps[a]} and {ps[b]} share more than one vertex")
    for u, v in g.edges():
        if not set(membership[u]) & set(membership[v]):
            raise InvalidPartition(f"edge ({u}, {v}) lies in no part")
    shared = [v for v, ps in membership.items() if len(ps) > 1]
    nodes = len(sets) + len(shared)
    incidences = sum(len(membership[v]) for v in shared)
    if incidences != nodes - 1:
        raise InvalidPartition("parts do not attach in a tree-like way")
    return _assemble(g, [sorted(s) for s in sets])


def _cut_distances(d: Decomposition, cuts_of: list[list[int]]) -> list[dict[int, list[int]]]:
    rows: list[dict[int, list[int]]] = []
    for part, cuts in zip(d.blocks, cuts_of):
        g = part.graph
        rows.append({c: _bfs(g.adjacency, g.n, part.local[c]) for c in cuts})
    return rows


def resolve_attachments(d: Decomposition, g: Graph | None = None) -> Decomposition:
    """Fill ``(x_ij, x_ji, delta)`` for every pair of parts ``i < j``.

    From each part the block-cut tree is walked outward. Leaving part i
    through cut vertex c fixes x_ij = c for everything beyond; delta grows by
    the within-part distance between the entry and exit cut vertices of each
    part crossed. ``g`` is accepted for interface symmetry and not consulted.
    """
    k = d.k
    at = d.parts_at()
    cuts_of = d.cuts_of()
    rows = _cut_distances(d, cuts_of)
    locals_ = [p.local for p in d.blocks]
    att: dict[tuple[int, int], Attachment] = {}
    for i in range(k):
        for c in cuts_of[i]:
            stack = [(b, c, 0) for b in at[c] if b != i]
            while stack:
                b, entry, delta = stack.pop()
                if b > i:
                    att[i, b] = Attachment(c, entry, delta)
                row = rows[b][entry]
                loc = locals_[b]
                for c2 in cuts_of[b]:
                    if c2 == entry:
                        continue
                    d2 = delta + row[loc[c2]]
                    for b2 in at[c2]:
                        if b2 != b:
                            stack.append((b2, c2, d2))
    if len(att) != k * (k - 1) // 2:
        raise InvalidPartition("block-cut structure is not a connected tree")
    return replace(d, attachments=att)


def _profile(dist: list[int]) -> list[int]:
    counts = [0] * (max(dist) + 1)
    for x in dist:
        counts[x] += 1
    counts[0] = 0
    return counts


def hosoya_from_decomposition(d: Decomposition) -> Polynomial:
    """Evaluate the point-attaching formula on a resolved decomposition.

    Cross terms are grouped by (i, x_ij) so each partial polynomial of part i
    is multiplied once against the shifted sum of its partners' profiles.
    Pairs are visited in a fixed order, so the result is deterministic.
    """
    if d.attachments is None:
        raise ValueError("attachments not resolved")
    k = d.k
    cuts_of = d.cuts_of()
    rows = _cut_distances(d, cuts_of)
    partial = [{c: _profile(r) for c, r in rows[p].items()} for p in range(k)]
    total = Polynomial()
    for part in d.blocks:
        total = total + hosoya_bruteforce(part.graph)
    att = d.attachments
    for i in range(k):
        groups: dict[int, list[int]] = {}
        for j in range(i + 1, k):
            x, e, delta = att[i, j]
            pc = partial[j][e]
            buf = groups.get(x)
            if buf is None:
                buf = groups[x] = []
            need = delta + len(pc)
            if len(buf) < need:
                buf.extend([0] * (need - len(buf)))
            for m, c in enumerate(pc):
                if c:
                    buf[delta + m] += c
        for x in sorted(groups):
            total = total + Polynomial(partial[i][x]) * Polynomial(groups[x])
    return total


def _as_array(p: Sequence[int], dtype) -> np.ndarray:
    return np.array(list(p), dtype=dtype)


def _sum_shifted(terms: list[tuple[np.ndarray, int]], dtype) -> np.ndarray:
    size = max((len(a) + s for a, s in terms if len(a)), default=0)
    out = np.zeros(size, dtype=dtype)
    for a, s in terms:
        if len(a):
            out[s : s + len(a)] += a
    return out


def hosoya_tree_sum(d: Decomposition) -> Polynomial:
    """Evaluate the point-attaching formula by dynamic programming on the block-cut tree.

    For part i and one of its cut vertices c, the partners j lying beyond c
    all have x_ij = c, so their cross terms share the factor H_c(G_i) and

        sum_j H_{x_ji}(G_j) t**delta(i, j)

    is the branch profile seen from c: every vertex v != c on that side
    counted once as t**d(c, v). Branch profiles for both orientations of
    every tree edge come from one post-order and one pre-order pass, so the
    cost is linear in the tree size instead of quadratic in the number of
    parts. Summing over all (i, c) counts each unordered pair of parts twice.
    """
    k = d.k
    n_total = 1 + sum(len(p.vertices) - 1 for p in d.blocks)
    dtype = np.int64 if n_total * n_total < 2**62 else object
    cuts_of = d.cuts_of()
    at = d.parts_at()
    rows = _cut_distances(d, cuts_of)
    locals_ = [p.local for p in d.blocks]
    prof = [{c: _as_array(_profile(r), dtype) for c, r in rows[b].items()} for b in range(k)]

    total = Polynomial()
    for part in d.blocks:
        total = total + hosoya_bruteforce(part.graph)
    if k == 1:
        return total

    # Root the bipartite block-cut tree at part 0.
    parent_cut = [-1] * k
    parent_part: dict[int, int] = {}
    order = [0]
    for b in order:
        for c in cuts_of[b]:
            if c == parent_cut[b]:
                continue
            parent_part[c] = b
            for b2 in at[c]:
                if b2 != b:
                    parent_cut[b2] = c
                    order.append(b2)

    def dist(b: int, u: int, v: int) -> int:
        return rows[b][u][locals_[b][v]]

    # down[b]: profile from parent_cut[b] over b's subtree; below[c]: sum of down over children of c.
    down: list[np.ndarray | None] = [None] * k
    below: dict[int, np.ndarray] = {}
    for b in reversed(order[1:]):
        pc = parent_cut[b]
        terms = [(prof[b][pc], 0)]
        for c in cuts_of[b]:
            if c != pc:
                terms.append((below[c], dist(b, pc, c)))
        down[b] = _sum_shifted(terms, dtype)
        below[pc] = _sum_shifted([(below[pc], 0), (down[b], 0)], dtype) if pc in below else down[b]

    # up[c]: profile from c over everything on the parent side of c.
    up: dict[int, np.ndarray] = {}
    for b in order:
        pc = parent_cut[b]
        away: dict[int, np.ndarray] = {}
        for c in cuts_of[b]:
            if c == pc:
                others = [(up[c], 0)] + [(down[b2], 0) for b2 in at[c] if b2 != b and parent_cut[b2] == c]
                away[c] = _sum_shifted(others, dtype)
            else:
                away[c] = below[c]
        for c in cuts_of[b]:
            if c == pc:
                continue
            terms = [(prof[b][c], 0)]
            for c2 in cuts_of[b]:
                if c2 != c:
                    terms.append((away[c2], dist(b, c, c2)))
            up[c] = _sum_shifted(terms, dtype)

    cross: list[tuple[np.ndarray, int]] = []
    for c in sorted(at):
        branches = {parent_part[c]: up[c]}
        for b2 in at[c]:
            if b2 != parent_part[c]:
                branches[b2] = down[b2]
        whole = _sum_shifted([(a, 0) for a in branches.values()], dtype)
        for b in at[c]:
            rest = _sum_shifted([(whole, 0), (-branches[b], 0)], dtype)
            cross.append((np.convolve(prof[b][c], rest), 0))
    doubled = _sum_shifted(cross, dtype)
    return total + Polynomial(int(x) // 2 for x in doubled)


def hosoya_via_decomposition(
    g: Graph,
    parts: Sequence[Sequence[int]] | None = None,
    *,
    strategy: str = "tree",
) -> IndexReport:
    """Hosoya polynomial and indices of ``g`` through its primary subgraphs.

    Args:
        g: connected graph.
        parts: optional caller-supplied primary subgraphs as vertex lists;
            the biconnected blocks are used when omitted.
        strategy: ``"tree"`` (default) sums cross terms along the block-cut
            tree; ``"pairs"`` resolves every pair's attachment triple and
            evaluates the formula term by term.
    """
    d = find_blocks(g) if parts is None else decompose_partition(g, parts)
    if strategy == "tree":
        h = hosoya_tree_sum(d)
    elif strategy == "pairs":
        h = hosoya_from_decomposition(resolve_attachments(d, g))
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return indices_from_hosoya(h, Method.DECOMPOSITION)


def decomposition_to_json(d: Decomposition) -> dict:
    out = {
        "blocks": [list(p.vertices) for p in d.blocks],
        "cut_vertices": sorted(d.cut_vertices),
        "bc_tree": [[p, c] for p, c in d.bc_tree],
    }
    if d.attachments is not None:
        out["attachments"] = [
            [i, j, *d.attachments[i, j]] for i in range(d.k) for j in range(i + 1, d.k)
        ]
    return out

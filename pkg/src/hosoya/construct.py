"""Bouquets, circuits, chains and links of graphs.

Each construction can be materialised as an explicit graph and its Hosoya
polynomial evaluated from the parts alone. Summation forms are the primary
route for the identical-copies case; the rational closed forms are only
evaluated through exact division as a second opinion.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import FormulaMismatch, InvalidSpec
from .graph import Graph, bfs_distances, hosoya_bruteforce, partial_hosoya
from .poly import ONE, T, ZERO, Polynomial, div_exact, geometric_sum

__all__ = [
    "Kind",
    "PartSpec",
    "ConstructionSpec",
    "build_construction",
    "build_construction_with_map",
    "chain_offset",
    "cycle_hosoya",
    "cycle_partial_hosoya",
    "bouquet_sum",
    "circuit_sum",
    "chain_sum",
    "link_sum",
    "bouquet_identical",
    "circuit_identical",
    "chain_identical",
    "link_identical",
    "chain_weight",
    "link_weight",
    "chain_weight_rational",
    "link_weight_rational",
    "hosoya_bouquet",
    "hosoya_circuit",
    "hosoya_chain",
    "hosoya_link",
    "hosoya_construction",
]


class Kind(str, enum.Enum):
    BOUQUET = "bouquet"
    CIRCUIT = "circuit"
    CHAIN = "chain"
    LINK = "link"


@dataclass(frozen=True)
class PartSpec:
    graph: Graph
    x: int
    y: int | None = None


@dataclass(frozen=True)
class ConstructionSpec:
    """A construction of one of the four kinds over an ordered list of parts.

    ``identical`` marks that every part is the same (graph, x, y), which
    enables the closed shortcuts.
    """

    kind: Kind
    parts: tuple[PartSpec, ...]
    identical: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "parts", tuple(self.parts))
        k = len(self.parts)
        if k < 1:
            raise InvalidSpec("a construction needs at least one part")
        if self.kind is Kind.CIRCUIT and k < 3:
            raise InvalidSpec(f"a circuit needs k >= 3 parts, got {k}")
        needs_y = self.kind in (Kind.CHAIN, Kind.LINK)
        for i, p in enumerate(self.parts):
            if not 0 <= p.x < p.graph.n:
                raise InvalidSpec(f"part {i}: x={p.x} is not a vertex")
            if needs_y:
                if p.y is None:
                    raise InvalidSpec(f"part {i}: {self.kind.value} requires y")
                if not 0 <= p.y < p.graph.n:
                    raise InvalidSpec(f"part {i}: y={p.y} is not a vertex")
            if not p.graph.is_connected():
                raise InvalidSpec(f"part {i} is not connected")
        if self.identical and any(p != self.parts[0] for p in self.parts[1:]):
            raise InvalidSpec("identical=True but the parts differ")

    @property
    def k(self) -> int:
        return len(self.parts)

    @classmethod
    def copies(cls, kind: Kind | str, part: PartSpec, k: int) -> ConstructionSpec:
        return cls(Kind(kind), (part,) * k, identical=True)

    def to_json(self) -> dict:
        shown = self.parts[:1] if self.identical else self.parts
        parts = []
        for p in shown:
            item: dict = {"edges": [list(e) for e in p.graph.edges()], "n": p.graph.n, "x": p.x}
            if p.y is not None:
                item["y"] = p.y
            parts.append(item)
        return {"kind": self.kind.value, "parts": parts, "k": self.k, "identical": self.identical}

    @classmethod
    def from_json(cls, data: Mapping) -> ConstructionSpec:
        try:
            raw = data["parts"]
            parts = []
            for item in raw:
                edges = [tuple(e) for e in item["edges"]]
                n = item.get("n")
                if n is None:
                    n = 1 + max((max(e) for e in edges), default=0)
                parts.append(PartSpec(Graph.from_edges(n, edges), item["x"], item.get("y")))
            identical = bool(data.get("identical", False))
            k = data.get("k", len(parts))
            if identical:
                if len(parts) != 1:
                    raise InvalidSpec("identical spec must list exactly one part")
                parts = parts * k
            elif k != len(parts):
                raise InvalidSpec(f"k={k} but {len(parts)} parts listed")
            return cls(Kind(data["kind"]), tuple(parts), identical)
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InvalidSpec):
                raise
            raise InvalidSpec(f"malformed construction spec: {exc}") from exc


def build_construction_with_map(spec: ConstructionSpec) -> tuple[Graph, list[list[int]]]:
    """Materialise the construction.

    Parts are laid out in order; identified vertices keep the smaller
    provisional id and ids are then compacted. Returns the graph and, per
    part, the id of each of its vertices in the result.
    """
    offsets = []
    total = 0
    for p in spec.parts:
        offsets.append(total)
        total += p.graph.n
    root = list(range(total))

    def find(a: int) -> int:
        while root[a] != a:
            root[a] = root[root[a]]
            a = root[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            lo, hi = min(ra, rb), max(ra, rb)
            root[hi] = lo

    parts = spec.parts
    k = spec.k
    extra: list[tuple[int, int]] = []
    if spec.kind is Kind.BOUQUET:
        for i in range(1, k):
            union(offsets[0] + parts[0].x, offsets[i] + parts[i].x)
    elif spec.kind is Kind.CHAIN:
        for i in range(k - 1):
            union(offsets[i] + parts[i].y, offsets[i + 1] + parts[i + 1].x)
    elif spec.kind is Kind.CIRCUIT:
        for i in range(k):
            j = (i + 1) % k
            extra.append((offsets[i] + parts[i].x, offsets[j] + parts[j].x))
    else:
        for i in range(k - 1):
            extra.append((offsets[i] + parts[i].y, offsets[i + 1] + parts[i + 1].x))

    reps = sorted({find(a) for a in range(total)})
    compact = {r: idx for idx, r in enumerate(reps)}
    new_id = [compact[find(a)] for a in range(total)]
    edges = []
    labels = [""] * len(reps)
    where: list[list[int]] = []
    for i, p in enumerate(parts):
        base = offsets[i]
        where.append([new_id[base + v] for v in range(p.graph.n)])
        for u, v in p.graph.edges():
            edges.append((new_id[base + u], new_id[base + v]))
        for v in range(p.graph.n):
            nid = new_id[base + v]
            if not labels[nid]:
                inner = p.graph.labels[v] if p.graph.labels else f"v{v}"
                labels[nid] = f"part{i}:{inner}"
    edges.extend((new_id[a], new_id[b]) for a, b in extra)
    return Graph.from_edges(len(reps), edges, labels), where


def build_construction(spec: ConstructionSpec) -> Graph:
    return build_construction_with_map(spec)[0]


def chain_offset(ds: Sequence[int], i: int, j: int) -> int:
    """Sum of the spans ``d_l`` of the parts strictly between parts i and j (0-based)."""
    if j < i:
        i, j = j, i
    return sum(ds[i + 1 : j])


def cycle_hosoya(q: int) -> Polynomial:
    """Hosoya polynomial of the cycle C_q."""
    if q < 3:
        raise ValueError("cycle needs q >= 3")
    r = q // 2
    if q % 2:
        return Polynomial([0] + [q] * r)
    return Polynomial([0] + [q] * (r - 1) + [r])


def cycle_partial_hosoya(q: int) -> Polynomial:
    """Partial Hosoya polynomial of C_q at any vertex."""
    if q < 3:
        raise ValueError("cycle needs q >= 3")
    r = q // 2
    if q % 2:
        return Polynomial([0] + [2] * r)
    return Polynomial([0] + [2] * (r - 1) + [1])


# Polynomial-level forms. Each part is described by its Hosoya polynomial and
# the partial polynomials at its attachment vertices.


def bouquet_sum(parts: Sequence[tuple[Polynomial, Polynomial]]) -> Polynomial:
    """``parts`` are (H(G_i), H_{x_i}(G_i))."""
    total = sum((h for h, _ in parts), ZERO)
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            total = total + parts[i][1] * parts[j][1]
    return total


def circuit_sum(parts: Sequence[tuple[Polynomial, Polynomial]]) -> Polynomial:
    """``parts`` are (H(G_i), H_{x_i}(G_i)) placed around a cycle of length k."""
    k = len(parts)
    total = sum((h for h, _ in parts), ZERO)
    for i in range(k):
        for j in range(i + 1, k):
            gap = min(j - i, k - j + i)
            total = total + ((ONE + parts[i][1]) * (ONE + parts[j][1])).shift(gap)
    return total


def chain_sum(parts: Sequence[tuple[Polynomial, Polynomial, Polynomial, int]]) -> Polynomial:
    """``parts`` are (H(G_i), H_{x_i}(G_i), H_{y_i}(G_i), d(x_i, y_i))."""
    ds = [p[3] for p in parts]
    total = sum((p[0] for p in parts), ZERO)
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            total = total + (parts[i][2] * parts[j][1]).shift(chain_offset(ds, i, j))
    return total


def link_sum(parts: Sequence[tuple[Polynomial, Polynomial, Polynomial, int]]) -> Polynomial:
    """Same inputs as :func:`chain_sum`; consecutive parts are joined by an edge."""
    ds = [p[3] for p in parts]
    total = sum((p[0] for p in parts), ZERO)
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            term = (ONE + parts[i][2]) * (ONE + parts[j][1])
            total = total + term.shift(j - i + chain_offset(ds, i, j))
    return total


def bouquet_identical(h: Polynomial, hx: Polynomial, k: int) -> Polynomial:
    return h * k + hx * hx * (k * (k - 1) // 2)


def circuit_identical(h: Polynomial, hx: Polynomial, k: int) -> Polynomial:
    one_hx = ONE + hx
    return h * k + one_hx * one_hx * cycle_hosoya(k)


def chain_weight(d: int, k: int) -> Polynomial:
    """``sum_{i<j} t**((j-i-1)d)`` over k parts, i.e. ``sum_m (k-1-m) t**(m d)``.

    Built as ``sum_{a=1}^{k-1} (1 + t^d + ... + t^{(a-1)d})``.
    """
    if d == 0:
        return Polynomial((k * (k - 1) // 2,))
    return sum((geometric_sum(d, a) for a in range(1, k)), ZERO)


def link_weight(d: int, k: int) -> Polynomial:
    """``sum_{i<j} t**((j-i) + (j-i-1)d)`` over k parts."""
    out = [0] * ((k - 1) * (d + 1) - d + 1) if k > 1 else []
    for m in range(1, k):
        out[m * (d + 1) - d] += k - m
    return Polynomial(out)


def chain_weight_rational(d: int, k: int) -> Polynomial:
    """The same weight from ``(t^{kd} - k t^d + k - 1) / (t^d - 1)^2`` by exact division."""
    if d < 1:
        raise ValueError("rational chain form needs d >= 1")
    td = T**d
    num = T ** (k * d) - td * k + (k - 1)
    den = (td - 1) * (td - 1)
    return div_exact(num, den)


def link_weight_rational(d: int, k: int) -> Polynomial:
    """The link weight from ``(t^{kd+k+1} - k t^{d+2} + k t - t) / (t^{d+1} - 1)^2``."""
    num = T ** (k * d + k + 1) - (T ** (d + 2)) * k + T * k - T
    base = T ** (d + 1) - 1
    return div_exact(num, base * base)


def chain_identical(h: Polynomial, hx: Polynomial, hy: Polynomial, d: int, k: int) -> Polynomial:
    return h * k + hx * hy * chain_weight(d, k)


def link_identical(h: Polynomial, hx: Polynomial, hy: Polynomial, d: int, k: int) -> Polynomial:
    return h * k + (ONE + hx) * (ONE + hy) * link_weight(d, k)


def _profiles(spec: ConstructionSpec, with_y: bool):
    cache: dict[int, tuple] = {}
    out = []
    for p in spec.parts:
        key = id(p)
        if key not in cache:
            h = hosoya_bruteforce(p.graph)
            hx = partial_hosoya(p.graph, p.x)
            if with_y:
                hy = partial_hosoya(p.graph, p.y)
                d = bfs_distances(p.graph, p.x).dist[p.y]
                cache[key] = (h, hx, hy, d)
            else:
                cache[key] = (h, hx)
        out.append(cache[key])
    return out


def _expect(spec: ConstructionSpec, kind: Kind) -> None:
    if spec.kind is not kind:
        raise InvalidSpec(f"expected a {kind.value} spec, got {spec.kind.value}")


def _use_shortcut(spec: ConstructionSpec, shortcut: bool | None) -> bool:
    if shortcut is None:
        return spec.identical
    if shortcut and not spec.identical:
        raise InvalidSpec("identical-copies shortcut requested for non-identical parts")
    return shortcut


def hosoya_bouquet(spec: ConstructionSpec, shortcut: bool | None = None) -> Polynomial:
    _expect(spec, Kind.BOUQUET)
    prof = _profiles(spec, with_y=False)
    if _use_shortcut(spec, shortcut):
        h, hx = prof[0]
        return bouquet_identical(h, hx, spec.k)
    return bouquet_sum(prof)


def hosoya_circuit(spec: ConstructionSpec, shortcut: bool | None = None) -> Polynomial:
    """Circuit formula; the cyclic gap between positions i and j is taken modulo k."""
    _expect(spec, Kind.CIRCUIT)
    prof = _profiles(spec, with_y=False)
    if _use_shortcut(spec, shortcut):
        h, hx = prof[0]
        return circuit_identical(h, hx, spec.k)
    return circuit_sum(prof)


def _cross_check(summed: Polynomial, rational: Polynomial, what: str) -> None:
    if summed != rational:
        raise FormulaMismatch(f"{what}: summation form {summed} != rational form {rational}")


def hosoya_chain(spec: ConstructionSpec, shortcut: bool | None = None) -> Polynomial:
    _expect(spec, Kind.CHAIN)
    prof = _profiles(spec, with_y=True)
    if _use_shortcut(spec, shortcut):
        h, hx, hy, d = prof[0]
        if d >= 1:
            _cross_check(chain_weight(d, spec.k), chain_weight_rational(d, spec.k), "chain weight")
        return chain_identical(h, hx, hy, d, spec.k)
    return chain_sum(prof)


def hosoya_link(spec: ConstructionSpec, shortcut: bool | None = None) -> Polynomial:
    _expect(spec, Kind.LINK)
    prof = _profiles(spec, with_y=True)
    if _use_shortcut(spec, shortcut):
        h, hx, hy, d = prof[0]
        _cross_check(link_weight(d, spec.k), link_weight_rational(d, spec.k), "link weight")
        return link_identical(h, hx, hy, d, spec.k)
    return link_sum(prof)


_DISPATCH = {
    Kind.BOUQUET: hosoya_bouquet,
    Kind.CIRCUIT: hosoya_circuit,
    Kind.CHAIN: hosoya_chain,
    Kind.LINK: hosoya_link,
}


def hosoya_construction(spec: ConstructionSpec, shortcut: bool | None = None) -> Polynomial:
    return _DISPATCH[spec.kind](spec, shortcut)

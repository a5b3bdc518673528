"""Wall-clock comparison of brute force and block decomposition."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from typing import Callable, Iterable

from .construct import ConstructionSpec, Kind, PartSpec, build_construction
from .decomp import hosoya_via_decomposition
from .generate import cycle_graph
from .graph import Graph, hosoya_bruteforce
from .poly import Polynomial

__all__ = ["DEFAULT_SIZES", "BenchRow", "hexagon_construction", "run_bench", "rows_to_csv"]

DEFAULT_SIZES = (4, 16, 64, 256)
FIELDS = ("kind", "blocks", "vertices", "brute_s", "decompose_s", "speedup", "equal")


@dataclass(frozen=True)
class BenchRow:
    kind: str
    blocks: int
    vertices: int
    brute_s: float
    decompose_s: float
    equal: bool

    @property
    def speedup(self) -> float:
        return self.brute_s / self.decompose_s if self.decompose_s > 0 else float("inf")

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "blocks": self.blocks,
            "vertices": self.vertices,
            "brute_s": f"{self.brute_s:.6f}",
            "decompose_s": f"{self.decompose_s:.6f}",
            "speedup": f"{self.speedup:.2f}",
            "equal": str(self.equal).lower(),
        }


def hexagon_construction(kind: Kind | str, blocks: int, h: int = 3) -> Graph:
    """Chain (spiro) or link (polyphenyl) of ``blocks`` hexagons, contacts h apart."""
    return build_construction(ConstructionSpec.copies(kind, PartSpec(cycle_graph(6), 0, h), blocks))


def _timed(fn: Callable[[], Polynomial], repeats: int) -> tuple[Polynomial, float]:
    best, result = float("inf"), None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return result, best


def run_bench(sizes: Iterable[int] = DEFAULT_SIZES, kinds: Iterable[str] = ("link", "chain")) -> list[BenchRow]:
    rows = []
    for kind in kinds:
        for b in sizes:
            g = hexagon_construction(kind, b)
            repeats = 3 if g.n <= 500 else 1
            brute, t_brute = _timed(lambda: hosoya_bruteforce(g), repeats)
            fast, t_fast = _timed(lambda: hosoya_via_decomposition(g).hosoya, repeats)
            rows.append(BenchRow(kind, b, g.n, t_brute, t_fast, brute == fast))
    return rows


def rows_to_csv(rows: Iterable[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.as_dict())
    return buf.getvalue()

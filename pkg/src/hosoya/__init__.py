"""Exact Hosoya polynomials, Wiener and hyper-Wiener indices.

The brute-force BFS oracle lives in :mod:`hosoya.graph`; the cut-vertex
decomposition in :mod:`hosoya.decomp`; bouquet, circuit, chain and link
formulas in :mod:`hosoya.construct`; chemical families in :mod:`hosoya.chem`.
"""

from .chem import FamilyParams, FamilyResult, dendrimer, polyphenyl, q_graph, spiro, triangulane
from .construct import ConstructionSpec, Kind, PartSpec, build_construction, hosoya_construction
from .decomp import Decomposition, decompose_partition, find_blocks, hosoya_via_decomposition
from .errors import (
    DisconnectedGraph,
    FormulaMismatch,
    HosoyaError,
    InvalidParams,
    InvalidPartition,
    InvalidSpec,
    LoopEdge,
    NonzeroRemainder,
    ParseError,
)
from .graph import Graph, hosoya_bruteforce, parse_graph, partial_hosoya
from .poly import IndexReport, Method, Polynomial, div_exact, indices_from_hosoya

__version__ = "0.1.0"

__all__ = [
    "ConstructionSpec",
    "Decomposition",
    "DisconnectedGraph",
    "FamilyParams",
    "FamilyResult",
    "FormulaMismatch",
    "Graph",
    "HosoyaError",
    "IndexReport",
    "InvalidParams",
    "InvalidPartition",
    "InvalidSpec",
    "Kind",
    "LoopEdge",
    "Method",
    "NonzeroRemainder",
    "ParseError",
    "PartSpec",
    "Polynomial",
    "build_construction",
    "decompose_partition",
    "dendrimer",
    "div_exact",
    "find_blocks",
    "hosoya_bruteforce",
    "hosoya_construction",
    "hosoya_via_decomposition",
    "indices_from_hosoya",
    "parse_graph",
    "partial_hosoya",
    "polyphenyl",
    "q_graph",
    "spiro",
    "triangulane",
]

"""Rank and inertia of complex unit gain graphs, with bound and extremal-graph verification."""

from .cycles import (
    AmbiguousCycleTypeError,
    NotDisjointError,
    classify_cycle,
    contract,
    cycle_inertia,
    disjoint_cycles,
    pendant_cycles,
    theta,
)
from .fileformat import ParseError, parse, serialize
from .gains import GainError, Numeric, RationalAngle
from .graph import GainGraph, GraphError, UndirectedGraph
from .kernels import BACKEND
from .optimality import (
    bounds,
    characterize_lower,
    characterize_upper,
    ratio_check,
    unicyclic_rank_bounds,
)
from .spectral import InertiaTriple, UnstableRankError, inertia, rank, rank_underlying
from .transform import crucial_subgraph, delta_transform

__version__ = "0.1.0"

__all__ = [
    "AmbiguousCycleTypeError", "BACKEND", "GainError", "GainGraph", "GraphError",
    "InertiaTriple", "NotDisjointError", "Numeric", "ParseError", "RationalAngle",
    "UndirectedGraph", "UnstableRankError", "bounds", "characterize_lower",
    "characterize_upper", "classify_cycle", "contract", "crucial_subgraph",
    "cycle_inertia", "delta_transform", "disjoint_cycles", "inertia", "parse",
    "pendant_cycles", "rank", "rank_underlying", "ratio_check", "serialize", "theta",
    "unicyclic_rank_bounds",
]

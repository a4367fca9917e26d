"""Rank bounds ``r(G) - 2*theta <= r(Phi) <= r(G) + 2*theta`` and their extremal graphs.

:func:`bounds` decides optimality from ranks. :func:`characterize_lower` and
:func:`characterize_upper` decide it from structure alone (cycles, Types,
crucial subgraph) and never touch a rank, so the two can check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .cycles import CycleType, disjoint_cycles, theta
from .graph import GainGraph, UndirectedGraph, as_gain_graph, connected_components
from .spectral import RankResult, UnstableRankError, rank, rank_underlying
from .transform import crucial_subgraph

Direction = Literal["lower", "upper"]


class SoundnessError(AssertionError):
    """A rank fell outside ``[r(G) - 2*theta, r(G) + 2*theta]``."""


@dataclass(frozen=True)
class BoundsReport:
    r_phi: int
    r_g: int
    theta: int
    method: str

    @property
    def lower(self) -> int:
        return self.r_g - 2 * self.theta

    @property
    def upper(self) -> int:
        return self.r_g + 2 * self.theta

    @property
    def is_lower_optimal(self) -> bool:
        return self.r_phi == self.lower

    @property
    def is_upper_optimal(self) -> bool:
        return self.r_phi == self.upper

    @property
    def in_bounds(self) -> bool:
        return self.lower <= self.r_phi <= self.upper

    def optimal(self, direction: Direction) -> bool:
        return self.is_lower_optimal if direction == "lower" else self.is_upper_optimal


def bounds(phi: GainGraph | UndirectedGraph) -> BoundsReport:
    """Evaluate both bounds. Raises :class:`UnstableRankError` on an unstable numeric rank."""
    phi = as_gain_graph(phi)
    r: RankResult = rank(phi)
    if not r.stable:
        raise UnstableRankError(f"numeric rank {r.rank} unstable at tau={r.tolerance_used:g}")
    return BoundsReport(r.rank, rank_underlying(phi), theta(phi), r.method)


@dataclass(frozen=True)
class TypeEvidence:
    vertices: tuple[int, ...]
    cycle_type: CycleType
    order_mod_4: int
    ok: bool


@dataclass(frozen=True)
class CharacterizationReport:
    """Structural verdict on lower/upper optimality.

    ``condition_types`` is ``None`` when the cycles are not pairwise disjoint;
    the cycles are then not enumerated and the verdict is already false.
    """

    direction: Direction
    condition_disjoint: bool
    condition_types: bool | None
    type_evidence: tuple[TypeEvidence, ...]
    condition_crucial: bool
    delta_steps: int
    residual_cycles: int
    residual_isolated: int
    residual_other: int
    theta: int

    @property
    def verdict(self) -> bool:
        return self.condition_disjoint and bool(self.condition_types) and self.condition_crucial

    def residual_description(self) -> str:
        return (f"{self.residual_cycles} cycle(s), {self.residual_isolated} isolated vertex(es), "
                f"{self.residual_other} other component(s) after {self.delta_steps} delta-step(s); "
                f"theta(G) = {self.theta}")


_REQUIRED = {"lower": ("A", 2), "upper": ("B", 0)}


def _residual_shape(g: UndirectedGraph) -> tuple[int, int, int]:
    cycles = isolated = other = 0
    for comp in connected_components(g):
        if len(comp) == 1:
            isolated += 1
        elif len(comp) >= 3 and all(g.degree(v) == 2 for v in comp):
            cycles += 1
        else:
            other += 1
    return cycles, isolated, other


def characterize(phi: GainGraph | UndirectedGraph, direction: Direction) -> CharacterizationReport:
    phi = as_gain_graph(phi)
    want_type, want_mod = _REQUIRED[direction]
    th = theta(phi)

    dc = disjoint_cycles(phi)
    evidence: tuple[TypeEvidence, ...] = ()
    types_ok: bool | None = None
    if dc.disjoint:
        evidence = tuple(
            TypeEvidence(c.vertices, c.cycle_type, c.parity,
                         c.cycle_type == want_type and c.parity == want_mod)
            for c in dc.cycles
        )
        types_ok = all(e.ok for e in evidence)

    crucial = crucial_subgraph(phi)
    cycles, isolated, other = _residual_shape(crucial.residual.graph)
    crucial_ok = other == 0 and cycles == th

    return CharacterizationReport(
        direction=direction,
        condition_disjoint=dc.disjoint,
        condition_types=types_ok,
        type_evidence=evidence,
        condition_crucial=crucial_ok,
        delta_steps=crucial.k,
        residual_cycles=cycles,
        residual_isolated=isolated,
        residual_other=other,
        theta=th,
    )


def characterize_lower(phi: GainGraph | UndirectedGraph) -> CharacterizationReport:
    """Disjoint cycles, all Type A of order 2 mod 4, crucial subgraph = theta cycles + isolated vertices."""
    return characterize(phi, "lower")


def characterize_upper(phi: GainGraph | UndirectedGraph) -> CharacterizationReport:
    """Disjoint cycles, all Type B of order 0 mod 4, crucial subgraph = theta cycles + isolated vertices."""
    return characterize(phi, "upper")


def unicyclic_rank_bounds(p: int, cycle_type: CycleType, r_h: int | None, r_f: int | None = None) -> tuple[int, int]:
    """Interval containing ``r(Phi)`` for a gain cycle ``C_p`` glued at one vertex ``v`` to ``H``.

    ``r_h`` is the rank of ``H`` (which contains ``v``), ``r_f`` that of
    ``F = H - v``; only the one the Type needs must be supplied.
    """
    if p < 3:
        raise ValueError(f"cycle order must be at least 3, got {p}")
    if cycle_type in ("A", "B") and p % 2:
        raise ValueError(f"Type {cycle_type} needs an even cycle order, got {p}")
    if cycle_type in ("C", "D", "E") and p % 2 == 0:
        raise ValueError(f"Type {cycle_type} needs an odd cycle order, got {p}")
    if cycle_type == "B":
        if r_f is None:
            raise ValueError("Type B needs r_f")
        return p + r_f, p + r_f
    if r_h is None:
        raise ValueError(f"Type {cycle_type} needs r_h")
    if cycle_type == "A":
        return p - 2 + r_h, p - 2 + r_h
    if cycle_type == "E":
        return p - 1 + r_h, p - 1 + r_h
    if cycle_type in ("C", "D"):
        return p - 1 + r_h, p + r_h
    raise ValueError(f"unknown cycle type {cycle_type!r}")


ExtremalClass = Literal["acyclic", "c4_type_b"]


@dataclass(frozen=True)
class RatioReport:
    ratio: Fraction
    theta: int
    r_phi: int
    r_g: int
    extremal_class: ExtremalClass | None

    @property
    def lower(self) -> int:
        return 1 - self.theta

    @property
    def upper(self) -> int:
        return 1 + self.theta

    @property
    def in_bounds(self) -> bool:
        return self.lower <= self.ratio <= self.upper

    @property
    def upper_equal(self) -> bool:
        return self.ratio == self.upper

    @property
    def lower_equal(self) -> bool:
        return self.ratio == self.lower

    @property
    def classification_consistent(self) -> bool:
        """Equality at each end happens exactly for the predicted classes."""
        return (self.upper_equal == (self.extremal_class is not None)
                and self.lower_equal == (self.extremal_class == "acyclic"))


def extremal_class(phi: GainGraph) -> ExtremalClass | None:
    """``"acyclic"``, ``"c4_type_b"`` (a Type B 4-cycle plus isolated vertices) or ``None``."""
    th = theta(phi)
    if th == 0:
        return "acyclic"
    if th != 1:
        return None
    nontrivial = [c for c in connected_components(phi.graph) if len(c) > 1]
    if len(nontrivial) != 1 or len(nontrivial[0]) != 4:
        return None
    comp = nontrivial[0]
    if not all(phi.graph.degree(v) == 2 for v in comp):
        return None
    (cyc,) = disjoint_cycles(phi.induced(comp)).cycles
    return "c4_type_b" if cyc.cycle_type == "B" else None


def ratio_check(phi: GainGraph | UndirectedGraph) -> RatioReport:
    """Exact ``r(Phi)/r(G)`` against ``[1 - theta, 1 + theta]``; needs at least one edge."""
    phi = as_gain_graph(phi)
    if not phi.edges:
        raise ValueError("ratio r(Phi)/r(G) is undefined for an edgeless graph")
    b = bounds(phi)
    return RatioReport(Fraction(b.r_phi, b.r_g), b.theta, b.r_phi, b.r_g, extremal_class(phi))

"""Cycle space: theta, simple cycles, cycle Types, pendant cycles, contraction."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Literal, Mapping

from .gains import Gain, Numeric, RationalAngle
from .graph import GainGraph, UndirectedGraph, as_gain_graph, as_graph, connected_components

CycleType = Literal["A", "B", "C", "D", "E"]

AMBIGUITY_BAND = 1e-9


class AmbiguousCycleTypeError(ValueError):
    """A numeric gain sits too close to a Type boundary to classify."""


class NotDisjointError(ValueError):
    """The graph's cycles are not pairwise vertex-disjoint."""


def theta(g: GainGraph | UndirectedGraph) -> int:
    """Cycle space dimension ``|E| - |V| + omega``."""
    g = as_graph(g)
    return len(g.edges) - len(g.vertices) + len(connected_components(g))


def theta_after_delete(g: GainGraph | UndirectedGraph, v: int) -> int:
    return theta(as_graph(g).delete_vertices([v]))


def two_core(g: UndirectedGraph) -> UndirectedGraph:
    """Repeatedly strip vertices of degree < 2."""
    deg = {v: g.degree(v) for v in g.vertices}
    removed = set()
    stack = [v for v, d in deg.items() if d < 2]
    while stack:
        v = stack.pop()
        if v in removed:
            continue
        removed.add(v)
        for w in g.adjacency[v]:
            if w not in removed:
                deg[w] -= 1
                if deg[w] < 2:
                    stack.append(w)
    return g.delete_vertices(removed)


def simple_cycles(g: GainGraph | UndirectedGraph, limit: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every simple cycle once, as a vertex tuple starting at its smallest label.

    Each cycle is reported in the direction whose second vertex is smaller
    than its last, so rotations and reversals are never repeated. Only the
    2-core is searched. Stops after ``limit`` cycles when given.
    """
    core = two_core(as_graph(g))
    adj = {v: sorted(ws) for v, ws in core.adjacency.items()}
    found = 0

    def extend(s: int, path: list[int], on_path: set[int]) -> Iterator[tuple[int, ...]]:
        for w in adj[path[-1]]:
            if w == s:
                if len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
            elif w > s and w not in on_path:
                path.append(w)
                on_path.add(w)
                yield from extend(s, path, on_path)
                on_path.discard(path.pop())

    for s in core.order:
        for cyc in extend(s, [s], {s}):
            yield cyc
            found += 1
            if limit is not None and found >= limit:
                return


def classify_cycle(p: int, g: Gain) -> CycleType:
    """Type A-E of a gain cycle of order ``p`` with gain ``g``.

    Exact for :class:`RationalAngle`. Numeric gains whose decisive real part
    lies within ``AMBIGUITY_BAND`` of zero raise :class:`AmbiguousCycleTypeError`.
    """
    if p < 3:
        raise ValueError(f"cycle order must be at least 3, got {p}")
    if isinstance(g, RationalAngle):
        t = g.angle
        if p % 2 == 0:
            return "A" if t == Fraction((p // 2) % 2, 2) else "B"
        t = (t + Fraction(((p - 1) // 2) % 2, 2)) % 1
        if t < Fraction(1, 4) or t > Fraction(3, 4):
            return "C"
        if t in (Fraction(1, 4), Fraction(3, 4)):
            return "E"
        return "D"
    if isinstance(g, Numeric):
        z = g.to_complex()
        if p % 2 == 0:
            return "A" if abs(z - (-1) ** (p // 2)) <= AMBIGUITY_BAND else "B"
        x = ((-1) ** ((p - 1) // 2) * z).real
        if abs(x) <= AMBIGUITY_BAND:
            raise AmbiguousCycleTypeError(f"Re((-1)^((p-1)/2) * gain) = {x!r} is within the ambiguity band")
        return "C" if x > 0 else "D"
    raise TypeError(f"not a gain: {g!r}")


# (i_plus, i_minus, i_zero) of a gain cycle of order n, by Type
CYCLE_INERTIA = {
    "A": lambda n: ((n - 2) // 2, (n - 2) // 2, 2),
    "B": lambda n: (n // 2, n // 2, 0),
    "C": lambda n: ((n + 1) // 2, (n - 1) // 2, 0),
    "D": lambda n: ((n - 1) // 2, (n + 1) // 2, 0),
    "E": lambda n: ((n - 1) // 2, (n - 1) // 2, 1),
}


def cycle_inertia(p: int, cycle_type: CycleType) -> tuple[int, int, int]:
    return CYCLE_INERTIA[cycle_type](p)


@dataclass(frozen=True)
class CycleDescriptor:
    vertices: tuple[int, ...]
    gain: Gain
    cycle_type: CycleType

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def parity(self) -> int:
        """Cycle order modulo 4."""
        return len(self.vertices) % 4


def describe_cycle(phi: GainGraph, vertices: tuple[int, ...]) -> CycleDescriptor:
    g = phi.cycle_gain(vertices)
    return CycleDescriptor(tuple(vertices), g, classify_cycle(len(vertices), g))


@dataclass(frozen=True)
class DisjointCycles:
    """Outcome of :func:`disjoint_cycles`.

    When ``disjoint`` is false, ``shared_vertex`` names a vertex on two
    discovered cycles, or ``witness`` lists ``theta + 1`` distinct cycles.
    """

    disjoint: bool
    cycles: tuple[CycleDescriptor, ...]
    shared_vertex: int | None = None
    witness: tuple[tuple[int, ...], ...] = ()

    def __bool__(self) -> bool:
        return self.disjoint


def disjoint_cycles(g: GainGraph | UndirectedGraph) -> DisjointCycles:
    """All cycles of ``g`` if they are pairwise vertex-disjoint.

    Enumeration stops at ``theta(g) + 1`` cycles: that many already proves two
    of them meet. Cycles of a plain graph carry gain 1.
    """
    phi = as_gain_graph(g)
    th = theta(phi)
    found = list(simple_cycles(phi, limit=th + 1))
    if len(found) > th:
        return DisjointCycles(False, (), None, tuple(found))
    owner: dict[int, int] = {}
    for idx, cyc in enumerate(found):
        for v in cyc:
            if v in owner:
                return DisjointCycles(False, (), v, (found[owner[v]], cyc))
            owner[v] = idx
    # complete enumeration of pairwise disjoint cycles: exactly theta of them
    assert len(found) == th, (found, th)
    return DisjointCycles(True, tuple(describe_cycle(phi, c) for c in found))


def cycles_through(g: GainGraph | UndirectedGraph, v: int) -> list[tuple[int, ...]]:
    """Every simple cycle containing ``v`` (full enumeration; small graphs only)."""
    return [c for c in simple_cycles(g) if v in c]


def pendant_cycles(g: GainGraph | UndirectedGraph) -> list[tuple[CycleDescriptor, int]]:
    """Induced cycles with one vertex of degree 3 and all others of degree 2.

    Returned as ``(cycle, v)`` with the cycle listed from ``v``.
    """
    phi = as_gain_graph(g)
    graph = phi.graph
    deg2 = {v for v in graph.vertices if graph.degree(v) == 2}
    out = []
    seen: set[int] = set()
    for start in sorted(deg2):
        if start in seen:
            continue
        # component of the degree-2 vertices
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in graph.adjacency[x]:
                if y in deg2 and y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        ends = [x for x in comp if len(graph.adjacency[x] & comp) == 1]
        if len(comp) < 2 or len(ends) != 2:
            continue
        outside = [next(iter(graph.adjacency[x] - comp)) for x in ends]
        v = outside[0]
        if outside[1] != v or graph.degree(v) != 3:
            continue
        a = min(ends)
        walk = [v, a]
        prev = v
        while len(walk) < len(comp) + 1:
            nxt = next(y for y in graph.adjacency[walk[-1]] if y in comp and y != prev)
            prev = walk[-1]
            walk.append(nxt)
        out.append((describe_cycle(phi, tuple(walk)), v))
    out.sort(key=lambda item: (item[1], item[0].vertices))
    return out


@dataclass(frozen=True)
class ContractionResult:
    """``T_G`` (each cycle contracted to one vertex), ``C_G`` and ``Gamma_G = T_G - C_G``.

    Contracted vertices get fresh labels above every label of ``G``;
    ``origin`` maps each to the cycle it replaced.
    """

    t_graph: UndirectedGraph
    cycle_vertices: frozenset[int]
    outside_vertices: frozenset[int]
    gamma_graph: UndirectedGraph
    origin: Mapping[int, CycleDescriptor] = field(default_factory=dict)


def contract(g: GainGraph | UndirectedGraph) -> ContractionResult:
    dc = disjoint_cycles(g)
    if not dc.disjoint:
        raise NotDisjointError(
            f"cycles are not pairwise vertex-disjoint (shared vertex {dc.shared_vertex}, witness {list(dc.witness)})"
        )
    graph = as_graph(g)
    nxt = max(graph.vertices, default=-1) + 1
    rep: dict[int, int] = {}
    origin: dict[int, CycleDescriptor] = {}
    for i, cyc in enumerate(dc.cycles):
        t = nxt + i
        origin[t] = cyc
        for v in cyc.vertices:
            rep[v] = t
    outside = graph.vertices - rep.keys()
    edges = set()
    for u, v in graph.edges:
        a, b = rep.get(u, u), rep.get(v, v)
        if a != b:
            edges.add((min(a, b), max(a, b)))
    t_graph = UndirectedGraph(outside | origin.keys(), edges)
    return ContractionResult(
        t_graph=t_graph,
        cycle_vertices=frozenset(origin),
        outside_vertices=frozenset(outside),
        gamma_graph=t_graph.delete_vertices(origin.keys()),
        origin=origin,
    )

"""Simple undirected graphs and complex unit gain graphs.

Both types are immutable; every operation returns a new value. Vertex labels
are arbitrary non-negative integers and survive deletions untouched.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .gains import ONE, Gain, RationalAngle, gain_product

Edge = tuple[int, int]


class GraphError(ValueError):
    """Structural misuse: self-loops, duplicate edges, unknown vertices."""


def _key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class UndirectedGraph:
    vertices: frozenset[int]
    edges: frozenset[Edge]

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Edge] = ()):
        vs = frozenset(vertices)
        es = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u not in vs or v not in vs:
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            k = _key(u, v)
            if k in es:
                raise GraphError(f"duplicate edge ({u}, {v})")
            es.add(k)
        if any(v < 0 for v in vs):
            raise GraphError("vertex labels must be non-negative")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", frozenset(es))

    @classmethod
    def cycle(cls, n: int, start: int = 0) -> UndirectedGraph:
        vs = range(start, start + n)
        return cls(vs, [(start + i, start + (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int, start: int = 0) -> UndirectedGraph:
        return cls(range(start, start + n), [(start + i, start + i + 1) for i in range(n - 1)])

    @cached_property
    def adjacency(self) -> Mapping[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    @cached_property
    def order(self) -> list[int]:
        """Vertices in ascending label order (matrix row order)."""
        return sorted(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return _key(u, v) in self.edges

    def delete_vertices(self, removed: Iterable[int]) -> UndirectedGraph:
        removed = frozenset(removed)
        unknown = removed - self.vertices
        if unknown:
            raise GraphError(f"unknown vertices {sorted(unknown)}")
        keep = self.vertices - removed
        return UndirectedGraph(keep, (e for e in self.edges if e[0] in keep and e[1] in keep))

    def induced(self, kept: Iterable[int]) -> UndirectedGraph:
        return self.delete_vertices(self.vertices - frozenset(kept))

    def add_edge(self, u: int, v: int) -> UndirectedGraph:
        if _key(u, v) in self.edges:
            raise GraphError(f"duplicate edge ({u}, {v})")
        return UndirectedGraph(self.vertices, [*self.edges, (u, v)])


def connected_components(g: UndirectedGraph) -> list[frozenset[int]]:
    """Vertex sets of the components, ordered by smallest label."""
    seen: set[int] = set()
    parts = []
    for root in g.order:
        if root in seen:
            continue
        stack = [root]
        seen.add(root)
        comp = {root}
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        parts.append(frozenset(comp))
    return parts


@dataclass(frozen=True)
class GainGraph:
    """A graph whose oriented edges carry unit gains with ``gain(v,u) = conj(gain(u,v))``.

    Only the orientation ``(min, max)`` is stored; the reverse is derived, so
    conjugate symmetry holds by construction.
    """

    graph: UndirectedGraph
    _gains: Mapping[Edge, Gain] = field(repr=False)

    def __init__(self, graph: UndirectedGraph, gains: Mapping[Edge, Gain] | None = None):
        stored: dict[Edge, Gain] = {}
        for (u, v), g in (gains or {}).items():
            if not graph.has_edge(u, v):
                raise GraphError(f"gain given for non-edge ({u}, {v})")
            k = _key(u, v)
            g = g if k == (u, v) else g.conjugate()
            if k in stored and stored[k] != g:
                raise GraphError(f"inconsistent gains on edge {k}")
            stored[k] = g
        for e in graph.edges:
            stored.setdefault(e, ONE)
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "_gains", stored)

    @classmethod
    def empty(cls, vertices: Iterable[int] = ()) -> GainGraph:
        return cls(UndirectedGraph(vertices))

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[tuple[int, int, Gain]]) -> GainGraph:
        edges = list(edges)
        g = UndirectedGraph(vertices, [(u, v) for u, v, _ in edges])
        return cls(g, {(u, v): gain for u, v, gain in edges})

    @classmethod
    def cycle(cls, gains: Sequence[Gain], start: int = 0) -> GainGraph:
        """Cycle ``start, start+1, ..., start+n-1`` with ``gains[i]`` on the edge leaving vertex ``start+i``."""
        n = len(gains)
        return cls.from_edges(range(start, start + n),
                              [(start + i, start + (i + 1) % n, gains[i]) for i in range(n)])

    @property
    def vertices(self) -> frozenset[int]:
        return self.graph.vertices

    @property
    def edges(self) -> frozenset[Edge]:
        return self.graph.edges

    @property
    def order(self) -> list[int]:
        return self.graph.order

    def __len__(self) -> int:
        return len(self.graph)

    @property
    def gains(self) -> dict[Edge, Gain]:
        """Gains on every oriented edge (both orientations)."""
        out: dict[Edge, Gain] = {}
        for (u, v), g in self._gains.items():
            out[(u, v)] = g
            out[(v, u)] = g.conjugate()
        return out

    def gain(self, u: int, v: int) -> Gain:
        if u < v:
            try:
                return self._gains[(u, v)]
            except KeyError:
                pass
        elif (v, u) in self._gains:
            return self._gains[(v, u)].conjugate()
        raise GraphError(f"({u}, {v}) is not an edge")

    @property
    def is_exact(self) -> bool:
        return all(g.is_exact for g in self._gains.values())

    def add_edge(self, u: int, v: int, g: Gain) -> GainGraph:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if u not in self.vertices or v not in self.vertices:
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
        gains = dict(self._gains)
        gains[(u, v)] = g
        return GainGraph(self.graph.add_edge(u, v), gains)

    def add_vertices(self, vs: Iterable[int]) -> GainGraph:
        return GainGraph(UndirectedGraph(self.vertices | frozenset(vs), self.edges), self._gains)

    def delete_vertices(self, removed: Iterable[int]) -> GainGraph:
        sub = self.graph.delete_vertices(removed)
        return GainGraph(sub, {e: g for e, g in self._gains.items() if e in sub.edges})

    def induced(self, kept: Iterable[int]) -> GainGraph:
        return self.delete_vertices(self.vertices - frozenset(kept))

    def underlying(self) -> GainGraph:
        return GainGraph(self.graph)

    def relabel(self, mapping: Mapping[int, int]) -> GainGraph:
        return GainGraph.from_edges(
            (mapping[v] for v in self.vertices),
            ((mapping[u], mapping[v], g) for (u, v), g in self._gains.items()),
        )

    def disjoint_union(self, other: GainGraph) -> GainGraph:
        if self.vertices & other.vertices:
            raise GraphError("disjoint union needs disjoint vertex labels")
        return GainGraph.from_edges(
            self.vertices | other.vertices,
            [(u, v, g) for (u, v), g in (*self._gains.items(), *other._gains.items())],
        )

    def cycle_gain(self, cycle: Sequence[int]) -> Gain:
        """Gain of the closed walk ``cycle[0] -> cycle[1] -> ... -> cycle[0]``.

        A trailing repeat of the first vertex is accepted and ignored.
        """
        seq = list(cycle)
        if len(seq) > 1 and seq[0] == seq[-1]:
            seq.pop()
        if len(seq) < 3 or len(set(seq)) != len(seq):
            raise GraphError(f"{cycle!r} is not a simple cycle")
        steps = list(zip(seq, seq[1:] + seq[:1]))
        for u, v in steps:
            if not self.graph.has_edge(u, v):
                raise GraphError(f"({u}, {v}) is not an edge")
        return gain_product(self.gain(u, v) for u, v in steps)


def add_edge(phi: GainGraph, u: int, v: int, g: Gain = ONE) -> GainGraph:
    return phi.add_edge(u, v, g)


def delete_vertices(phi: GainGraph, removed: Iterable[int]) -> GainGraph:
    return phi.delete_vertices(removed)


def cycle_gain(phi: GainGraph, cycle: Sequence[int]) -> Gain:
    return phi.cycle_gain(cycle)


def underlying(phi: GainGraph) -> GainGraph:
    return phi.underlying()


def as_graph(g: GainGraph | UndirectedGraph) -> UndirectedGraph:
    return g.graph if isinstance(g, GainGraph) else g


def as_gain_graph(g: GainGraph | UndirectedGraph) -> GainGraph:
    return g if isinstance(g, GainGraph) else GainGraph(g)


__all__ = [
    "Edge", "GraphError", "UndirectedGraph", "GainGraph", "RationalAngle",
    "connected_components", "add_edge", "delete_vertices", "cycle_gain", "underlying",
    "as_graph", "as_gain_graph",
]

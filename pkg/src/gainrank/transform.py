"""Delta-transformations (delete a pendant vertex with its neighbour) and crucial subgraphs."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import GainGraph, GraphError, UndirectedGraph, as_gain_graph, as_graph


@dataclass(frozen=True)
class DeltaStep:
    pendant: int
    neighbor: int
    step_index: int


@dataclass(frozen=True)
class CrucialResult:
    residual: GainGraph
    steps: tuple[DeltaStep, ...]

    @property
    def k(self) -> int:
        return len(self.steps)


def pendant_vertices(g: GainGraph | UndirectedGraph) -> list[int]:
    g = as_graph(g)
    return [v for v in g.order if g.degree(v) == 1]


def delta_transform(phi: GainGraph | UndirectedGraph, v: int, step_index: int = 0) -> tuple[GainGraph, DeltaStep]:
    phi = as_gain_graph(phi)
    if v not in phi.vertices:
        raise GraphError(f"unknown vertex {v}")
    nbrs = phi.graph.neighbors(v)
    if len(nbrs) != 1:
        raise GraphError(f"vertex {v} is not pendant (degree {len(nbrs)})")
    (u,) = nbrs
    return phi.delete_vertices([v, u]), DeltaStep(v, u, step_index)


def crucial_subgraph(phi: GainGraph | UndirectedGraph) -> CrucialResult:
    """Apply delta-transformations, always at the smallest pendant label, until none is left."""
    phi = as_gain_graph(phi)
    steps = []
    while True:
        pendants = pendant_vertices(phi)
        if not pendants:
            return CrucialResult(phi, tuple(steps))
        phi, step = delta_transform(phi, pendants[0], len(steps))
        steps.append(step)

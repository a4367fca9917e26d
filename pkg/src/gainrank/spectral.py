"""Hermitian adjacency matrices, inertia and rank.

Two routes:

* exact -- every gain lies in ``{1, i, -1, -i}``; the matrix has Gaussian
  integer entries and the inertia comes from congruence elimination
  (:mod:`gainrank.kernels`).
* numeric -- anything else; eigenvalues from LAPACK's Hermitian solver with a
  zero band ``tau = 1e-9 * n * max|a_ij|``. The count is repeated at ``tau/10``
  and ``10*tau`` and flagged unstable when the three disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, NamedTuple

import numpy as np

from . import kernels
from .graph import GainGraph, UndirectedGraph, as_gain_graph

Method = Literal["exact", "numeric"]

TOLERANCE_FACTOR = 1e-9


class UnstableRankError(ArithmeticError):
    """The numeric rank changed across the tolerance band."""


class InertiaTriple(NamedTuple):
    i_plus: int
    i_minus: int
    i_zero: int

    @property
    def rank(self) -> int:
        return self.i_plus + self.i_minus

    @property
    def n(self) -> int:
        return self.i_plus + self.i_minus + self.i_zero


@dataclass(frozen=True)
class RankResult:
    rank: int
    method: Method
    tolerance_used: float | None
    stable: bool
    inertia: InertiaTriple

    def __int__(self) -> int:
        return self.rank


@dataclass(frozen=True)
class HermitianMatrix:
    """Adjacency matrix with rows in ascending vertex-label order.

    ``gaussian`` holds integer ``(re, im)`` matrices when every entry is a
    Gaussian integer, otherwise ``None``.
    """

    labels: tuple[int, ...]
    values: np.ndarray
    gaussian: tuple[list[list[int]], list[list[int]]] | None

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def is_exact(self) -> bool:
        return self.gaussian is not None


def adjacency_matrix(phi: GainGraph | UndirectedGraph) -> HermitianMatrix:
    phi = as_gain_graph(phi)
    labels = tuple(phi.order)
    index = {v: i for i, v in enumerate(labels)}
    n = len(labels)
    values = np.zeros((n, n), dtype=complex)
    re = [[0] * n for _ in range(n)]
    im = [[0] * n for _ in range(n)]
    exact = True
    for (u, v), g in phi.gains.items():
        i, j = index[u], index[v]
        values[i, j] = g.to_complex()
        gi = g.gaussian()
        if gi is None:
            exact = False
        else:
            re[i][j], im[i][j] = gi
    return HermitianMatrix(labels, values, (re, im) if exact else None)


def _count(eigs: np.ndarray, tau: float) -> InertiaTriple:
    pos = int(np.count_nonzero(eigs > tau))
    neg = int(np.count_nonzero(eigs < -tau))
    return InertiaTriple(pos, neg, len(eigs) - pos - neg)


def numeric_inertia(matrix: HermitianMatrix) -> tuple[InertiaTriple, float, bool]:
    """Eigenvalue sign counts with the stability check; returns ``(triple, tau, stable)``."""
    n = matrix.n
    if n == 0:
        return InertiaTriple(0, 0, 0), 0.0, True
    scale = float(np.abs(matrix.values).max())
    tau = TOLERANCE_FACTOR * n * scale
    eigs = np.linalg.eigvalsh(matrix.values)
    triple = _count(eigs, tau)
    stable = _count(eigs, tau / 10) == triple == _count(eigs, tau * 10)
    return triple, tau, stable


def exact_inertia(matrix: HermitianMatrix) -> InertiaTriple:
    if matrix.gaussian is None:
        raise ValueError("matrix has non-Gaussian-integer entries; use the numeric path")
    return InertiaTriple(*kernels.gaussian_inertia(*matrix.gaussian))


def rank(phi: GainGraph | UndirectedGraph, method: Method | None = None) -> RankResult:
    """Rank of ``A(phi)``; exact whenever all gains are fourth roots of unity.

    Pass ``method`` to force a route (``"exact"`` raises on unsupported gains).
    Never raises on instability -- inspect ``stable``.
    """
    matrix = adjacency_matrix(phi)
    if method is None:
        method = "exact" if matrix.is_exact else "numeric"
    if method == "exact":
        triple = exact_inertia(matrix)
        return RankResult(triple.rank, "exact", None, True, triple)
    triple, tau, stable = numeric_inertia(matrix)
    return RankResult(triple.rank, "numeric", tau, stable, triple)


def inertia(phi: GainGraph | UndirectedGraph, method: Method | None = None) -> InertiaTriple:
    """``(i_plus, i_minus, i_zero)`` of ``A(phi)``.

    Raises :class:`UnstableRankError` when the numeric count is not stable.
    """
    result = rank(phi, method)
    if not result.stable:
        raise UnstableRankError(f"numeric inertia {tuple(result.inertia)} unstable at tau={result.tolerance_used:g}")
    return result.inertia


def checked_rank(phi: GainGraph | UndirectedGraph, method: Method | None = None) -> int:
    return inertia(phi, method).rank


def rank_underlying(phi: GainGraph | UndirectedGraph) -> int:
    """``r(G)`` -- always exact, entries are 0/1."""
    g = phi.graph if isinstance(phi, GainGraph) else phi
    return checked_rank(GainGraph(g), "exact")

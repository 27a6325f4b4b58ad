"""Weighted multi-digraph model and its spectral matrices.

A graph is a vertex count plus a map from ordered vertex pairs to nonzero
real weights. Two vertices carry at most one edge per direction, so the only
multi-edges are oppositely oriented pairs; a pair (v, v) is a loop. All
derived matrices (adjacency, degree, Laplacian, signless Laplacian) are dense
numpy arrays.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from .errors import (
    AsymmetricWeights,
    InvalidGraph,
    NotSquare,
    NotSymmetric,
    OrderMismatch,
    TooLarge,
)

SYMMETRY_TOL = 1e-12
ISO_SEARCH_LIMIT = 12


@dataclass(frozen=True)
class WeightedDigraph:
    """Immutable weighted digraph with loops.

    `edges` maps ordered pairs (u, v) to weights. A stored weight is never
    zero (no edge and weight zero are the same thing), and loop weights are
    strictly positive.
    """

    order: int
    edges: dict[tuple[int, int], float] = field(default_factory=dict)

    def __post_init__(self):
        if self.order < 1:
            raise InvalidGraph(f"order must be positive, got {self.order}")
        for (u, v), w in self.edges.items():
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise InvalidGraph(f"edge ({u}, {v}) outside vertex range 0..{self.order - 1}")
            if w == 0:
                raise InvalidGraph(f"edge ({u}, {v}) stored with zero weight")
            if u == v and w <= 0:
                raise InvalidGraph(f"loop at {u} must have positive weight, got {w}")

    @classmethod
    def from_edges(cls, order: int, triples: Iterable[tuple[int, int, float]]) -> "WeightedDigraph":
        edges: dict[tuple[int, int], float] = {}
        for u, v, w in triples:
            if (u, v) in edges:
                raise InvalidGraph(f"duplicate ordered pair ({u}, {v})")
            edges[(u, v)] = float(w)
        return cls(order, edges)

    def weight(self, u: int, v: int) -> float:
        """Weight of the directed edge u -> v, or 0.0 when absent."""
        return self.edges.get((u, v), 0.0)

    def loop(self, v: int) -> float:
        return self.edges.get((v, v), 0.0)

    def is_symmetric(self) -> bool:
        """True when w(u, v) == w(v, u) for every ordered pair."""
        return all(self.edges.get((v, u)) == w for (u, v), w in self.edges.items())


def adjacency_matrix(g: WeightedDigraph) -> np.ndarray:
    """Dense adjacency matrix; entry (i, j) is the weight of i -> j."""
    a = np.zeros((g.order, g.order))
    for (u, v), w in g.edges.items():
        a[u, v] = w
    return a


def degree_matrix(g: WeightedDigraph) -> np.ndarray:
    """Diagonal matrix of degrees d_i = sum_j |a_ij| (loops counted once)."""
    a = adjacency_matrix(g)
    return np.diag(np.abs(a).sum(axis=1))


def _require_symmetric_weights(g: WeightedDigraph) -> None:
    for (u, v), w in g.edges.items():
        back = g.edges.get((v, u))
        if back != w:
            raise AsymmetricWeights(
                f"w({u}, {v}) = {w} but w({v}, {u}) = {0.0 if back is None else back}"
            )


def laplacian(g: WeightedDigraph) -> np.ndarray:
    """Laplacian D - A; defined only for symmetric weights."""
    _require_symmetric_weights(g)
    a = adjacency_matrix(g)
    return np.diag(np.abs(a).sum(axis=1)) - a


def signless_laplacian(g: WeightedDigraph) -> np.ndarray:
    """Signless Laplacian D + A; defined only for symmetric weights."""
    _require_symmetric_weights(g)
    a = adjacency_matrix(g)
    return np.diag(np.abs(a).sum(axis=1)) + a


def spectrum(m: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues of a symmetric real matrix.

    Raises NotSquare / NotSymmetric; symmetry tolerance is 1e-12 on the
    maximum entry difference.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {m.shape}")
    if m.size and np.max(np.abs(m - m.T)) > SYMMETRY_TOL:
        raise NotSymmetric("matrix is not symmetric within 1e-12")
    return np.linalg.eigvalsh(m)


def _general_spectrum(m: np.ndarray) -> np.ndarray:
    """Eigenvalues of an arbitrary square matrix, sorted by (real, imag)."""
    return np.sort_complex(np.linalg.eigvals(m))


def _complex_multisets_close(x: np.ndarray, y: np.ndarray, tol: float) -> bool:
    # lexicographic order is unstable when real parts nearly tie, so match
    # each eigenvalue to its nearest unused partner instead
    remaining = list(y)
    for value in x:
        gaps = [abs(value - other) for other in remaining]
        best = int(np.argmin(gaps))
        if gaps[best] > tol:
            return False
        remaining.pop(best)
    return True


def cospectral(a: np.ndarray, b: np.ndarray, tol: float = 1e-9) -> bool:
    """True when the sorted eigenvalue multisets of a and b match within tol.

    Symmetric inputs use the symmetric eigensolver; otherwise the general
    complex spectra are compared after a lexicographic sort. Unitary
    conjugates of asymmetric adjacency matrices are covered by the general
    path.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    for m in (a, b):
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise NotSquare(f"expected square matrices, got shape {m.shape}")
    if a.shape != b.shape:
        raise OrderMismatch(f"orders differ: {a.shape[0]} vs {b.shape[0]}")
    symmetric = (
        np.max(np.abs(a - a.T)) <= SYMMETRY_TOL and np.max(np.abs(b - b.T)) <= SYMMETRY_TOL
        if a.size
        else True
    )
    if symmetric:
        return bool(np.all(np.abs(spectrum(a) - spectrum(b)) <= tol))
    return _complex_multisets_close(_general_spectrum(a), _general_spectrum(b), tol)


def _vertex_signature(a: np.ndarray, v: int) -> tuple:
    # loop weight plus sorted out/in weight rows pin down everything a
    # relabeling can never change
    return (a[v, v], tuple(np.sort(a[v])), tuple(np.sort(a[:, v])))


def brute_force_isomorphic(g: WeightedDigraph, h: WeightedDigraph) -> bool:
    """Exhaustive weight-preserving vertex bijection search.

    Backtracking over vertex assignments, pruned by per-vertex signatures
    (loop weight, sorted out- and in-weight rows). Limited to order 12.
    """
    if g.order != h.order:
        raise OrderMismatch(f"orders differ: {g.order} vs {h.order}")
    if g.order > ISO_SEARCH_LIMIT:
        raise TooLarge(f"isomorphism search limited to order {ISO_SEARCH_LIMIT}")
    a = adjacency_matrix(g)
    b = adjacency_matrix(h)
    n = g.order
    sig_a = [_vertex_signature(a, v) for v in range(n)]
    sig_b = [_vertex_signature(b, v) for v in range(n)]
    if Counter(sig_a) != Counter(sig_b):
        return False
    candidates = [[j for j in range(n) if sig_b[j] == sig_a[i]] for i in range(n)]
    # assign the most constrained vertices first
    order_by = sorted(range(n), key=lambda i: len(candidates[i]))
    assign = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        i = order_by[k]
        for j in candidates[i]:
            if used[j]:
                continue
            ok = True
            for prev in order_by[:k]:
                p = assign[prev]
                if a[i, prev] != b[j, p] or a[prev, i] != b[p, j]:
                    ok = False
                    break
            if ok:
                assign[i] = j
                used[j] = True
                if extend(k + 1):
                    return True
                used[j] = False
        return False

    return extend(0)

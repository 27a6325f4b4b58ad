"""Density matrices from graph Laplacians.

A graph with symmetric weights and positive trace yields the quantum state
rho = L / tr(L) (or Q / tr(Q)): trace one, symmetric, positive semidefinite.
Both Laplacians are diagonally dominant under the absolute-value degree
convention, so graph-derived states are PSD even with negative edge weights;
the PSD check still guards direct matrix construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotPSD, NotSquare, NotSymmetric, ZeroTrace
from .graph import WeightedDigraph
from .starlike import SpectralKind, spectral_matrix

TRACE_TOL = 1e-12
SYMMETRY_TOL = 1e-12
EIGENVALUE_FLOOR = -1e-9


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Validated quantum state: real symmetric, trace one, PSD."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        object.__setattr__(self, "matrix", m)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise NotSquare(f"density matrix must be square, got shape {m.shape}")
        if np.max(np.abs(m - m.T)) > SYMMETRY_TOL:
            raise NotSymmetric("density matrix must be symmetric within 1e-12")
        trace = float(np.trace(m))
        if abs(trace - 1.0) > TRACE_TOL:
            raise ZeroTrace(f"trace must be 1, got {trace}")
        if float(np.linalg.eigvalsh(m)[0]) < EIGENVALUE_FLOOR:
            raise NotPSD("density matrix has an eigenvalue below -1e-9")

    @property
    def order(self) -> int:
        return self.matrix.shape[0]

    def eigenvalues(self) -> np.ndarray:
        """Ascending spectrum with tiny negatives clamped to zero."""
        return np.maximum(np.linalg.eigvalsh(self.matrix), 0.0)


def density_from_graph(g: WeightedDigraph, kind: SpectralKind) -> DensityMatrix:
    """Trace-normalized Laplacian or signless Laplacian of a graph.

    Raises ZeroTrace for an edgeless loopless graph, AsymmetricWeights when
    the Laplacian is undefined, and NotPSD if normalization produced an
    indefinite matrix.
    """
    m = spectral_matrix(g, kind)
    trace = float(np.trace(m))
    if trace <= 0.0:
        raise ZeroTrace("graph has no edges or loops, so the trace is zero")
    return DensityMatrix(m / trace)


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """S = -sum_i lambda_i log2(lambda_i), with 0 log 0 = 0."""
    lam = rho.eigenvalues()
    lam = lam[lam > 0.0]
    s = float(-np.sum(lam * np.log2(lam)))
    return s if s > 0.0 else 0.0


def is_pure(rho: DensityMatrix, tol: float = 1e-9) -> bool:
    """True when the numerical rank (eigenvalues above tol) is one."""
    return int(np.count_nonzero(rho.eigenvalues() > tol)) == 1

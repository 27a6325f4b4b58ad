"""Seidel operators and the generalized switching transform.

The switching operator on one cell of n vertices is U_n = (2/n)J_n - I_n,
a symmetric unitary involution. For a partitioned graph the full operator is
the block-diagonal direct sum of the cell operators with an identity on the
hub set D, and switching is the conjugation A |-> U A U. The transform is
realized edge-wise here; conjugation is only used as a cross-check.

Edge-wise realization, for each cell C of size n:
  * attachments of a hub vertex v, per direction: the weight vector x over C
    becomes (2s/n)j - x where s = sum(x). A half-attached vector with equal
    weights flips to the complementary half; a constant fully-attached vector
    is fixed; an empty vector stays empty.
  * every directed cross block between two cells is conjugated by the two
    cell operators. For a block with constant row sums r this equals
    B + (2r/n)J - (2/m)K, with K broadcasting the column sums, so no dense
    multiplication is needed.
  * everything inside a cell (loops included) and inside D is untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    BadAdjacencyCount,
    InvalidOrder,
    InvalidPartition,
    NonConstantRowSum,
    NotHalfAndHalf,
    NotRegularInduced,
    UnequalWeights,
    VerificationFailed,
)
from .graph import WeightedDigraph, adjacency_matrix, cospectral

ROW_SUM_TOL = 1e-12
CONJUGATION_TOL = 1e-12
WEIGHT_EQ_TOL = 1e-12


@dataclass(frozen=True)
class SeidelPartition:
    """Ordered cells C_1..C_k plus the hub set D.

    Cells have at least two vertices each; cells and D are pairwise disjoint.
    Vertex indices inside each part are kept sorted so the partition ordering
    (cells concatenated, then D) is canonical.
    """

    cells: tuple[tuple[int, ...], ...]
    d_cell: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(tuple(sorted(c)) for c in self.cells))
        object.__setattr__(self, "d_cell", tuple(sorted(self.d_cell)))
        seen: set[int] = set()
        for cell in self.cells:
            if len(cell) < 2:
                raise InvalidPartition(f"cell {cell} has fewer than 2 vertices")
            if seen & set(cell):
                raise InvalidPartition(f"cell {cell} overlaps another part")
            seen |= set(cell)
        if seen & set(self.d_cell):
            raise InvalidPartition("hub set D overlaps a cell")

    def members(self) -> set[int]:
        out = set(self.d_cell)
        for cell in self.cells:
            out |= set(cell)
        return out

    def check_cover(self, order: int) -> None:
        if self.members() != set(range(order)):
            raise InvalidPartition(f"partition does not cover vertices 0..{order - 1} exactly")


@dataclass(frozen=True)
class CategoryReport:
    """Hub-vertex categories per cell and the per-cell counts (p, q, r).

    Category 1 = adjacent to all cell vertices, 2 = to exactly half,
    3 = to none. `categories[(i, v)]` is the category of hub vertex v with
    respect to cell i.
    """

    categories: dict[tuple[int, int], int]
    counts: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class SeidelOperator:
    """Block description of a switching operator.

    `block_sizes` lists the cell operator orders; `identity_size` is the size
    of the trailing identity block. A single cell with no identity block is
    the plain operator U_n.
    """

    block_sizes: tuple[int, ...]
    identity_size: int = 0

    @property
    def order(self) -> int:
        return sum(self.block_sizes) + self.identity_size

    @property
    def kind(self) -> str:
        return "single" if len(self.block_sizes) == 1 and self.identity_size == 0 else "block"

    def matrix(self) -> np.ndarray:
        """Dense block-diagonal matrix in the partition's vertex ordering."""
        u = np.zeros((self.order, self.order))
        pos = 0
        for n in self.block_sizes:
            u[pos : pos + n, pos : pos + n] = seidel_matrix(n)
            pos += n
        for i in range(pos, pos + self.identity_size):
            u[i, i] = 1.0
        return u


def seidel_matrix(n: int) -> np.ndarray:
    """The order-n switching operator (2/n)J - I.

    Symmetric, unitary and involutory; n = 2 gives the Pauli X.
    """
    if n < 2:
        raise InvalidOrder(f"switching operator needs order >= 2, got {n}")
    u = np.full((n, n), 2.0 / n)
    np.fill_diagonal(u, 2.0 / n - 1.0)
    return u


def block_seidel(part: SeidelPartition) -> SeidelOperator:
    """Block operator diag{U_n1, ..., U_nk, I_|D|} for a partition."""
    return SeidelOperator(
        block_sizes=tuple(len(c) for c in part.cells),
        identity_size=len(part.d_cell),
    )


def switching_matrix(part: SeidelPartition, order: int) -> np.ndarray:
    """Switching operator in graph vertex order (not partition order)."""
    part.check_cover(order)
    u = np.zeros((order, order))
    for cell in part.cells:
        n = len(cell)
        for a in cell:
            for b in cell:
                u[a, b] = 2.0 / n - (1.0 if a == b else 0.0)
    for v in part.d_cell:
        u[v, v] = 1.0
    return u


def switch_cross_block(a: np.ndarray) -> np.ndarray:
    """Conjugate an m x n constant-row-sum block by the two cell operators.

    Expanding (2/m J - I) A (2/n J - I) with row sums fixed at r gives
    A + (2r/n)J - (2/m)K exactly, where K broadcasts the column sums of A.
    The column-sum term does not collapse to a multiple of J unless the
    column sums are constant too, so it is kept explicit.
    """
    a = np.asarray(a, dtype=float)
    m, n = a.shape
    row_sums = a.sum(axis=1)
    r = row_sums.mean()
    if np.max(np.abs(row_sums - r)) > ROW_SUM_TOL:
        raise NonConstantRowSum(f"row sums vary: {row_sums}")
    col_sums = a.sum(axis=0)
    return a + (2.0 * r / n) - (2.0 / m) * col_sums[np.newaxis, :]


def flip_half_pattern(x: Sequence[float]) -> np.ndarray:
    """Complement-flip a vector that is half zeros, half one constant c.

    Returns c*j - x, which is what the cell operator does to such a vector:
    the constant moves onto the previously empty half.
    """
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or len(x) % 2 != 0:
        raise NotHalfAndHalf(f"need an even-length vector, got shape {x.shape}")
    nonzero = x[x != 0]
    if len(nonzero) != len(x) // 2 or len(set(nonzero.tolist())) != 1:
        raise NotHalfAndHalf("vector is not half zeros and half one repeated constant")
    c = nonzero[0]
    return c - x


def _attachment_vector(g: WeightedDigraph, v: int, cell: tuple[int, ...], outgoing: bool) -> np.ndarray:
    if outgoing:
        return np.array([g.weight(v, u) for u in cell])
    return np.array([g.weight(u, v) for u in cell])


def _induced_block(g: WeightedDigraph, part_vertices: tuple[int, ...]) -> np.ndarray:
    k = len(part_vertices)
    b = np.zeros((k, k))
    for i, u in enumerate(part_vertices):
        for j, v in enumerate(part_vertices):
            b[i, j] = g.weight(u, v)
    return b


def _weights_equal(values: np.ndarray) -> bool:
    scale = 1.0 + np.max(np.abs(values))
    return np.max(values) - np.min(values) <= WEIGHT_EQ_TOL * scale


def validate_seidel(g: WeightedDigraph, part: SeidelPartition) -> CategoryReport:
    """Check the four switching-graph conditions and classify hub vertices.

    (a) the parts partition the vertex set, (b) the subgraphs induced by each
    cell and by D are regular in absolute weight (rows and columns), (c) each
    hub vertex is adjacent to 0, n/2 or n vertices of every cell, with equal
    weights per direction in the half-attached case, (d) parallel edges only
    occur as oppositely oriented pairs, which the edge map guarantees.
    """
    part.check_cover(g.order)
    for label, vertices in [(f"cell {i}", c) for i, c in enumerate(part.cells)] + [
        ("D", part.d_cell)
    ]:
        if len(vertices) < 2:
            continue
        block = _induced_block(g, vertices)
        absolute = np.abs(block)
        if not _weights_equal(absolute.sum(axis=1)) or not _weights_equal(absolute.sum(axis=0)):
            raise NotRegularInduced(f"induced subgraph on {label} is not regular")

    categories: dict[tuple[int, int], int] = {}
    counts = []
    for i, cell in enumerate(part.cells):
        n = len(cell)
        p = q = r = 0
        for v in part.d_cell:
            out_vec = _attachment_vector(g, v, cell, outgoing=True)
            in_vec = _attachment_vector(g, v, cell, outgoing=False)
            attached = (out_vec != 0) | (in_vec != 0)
            count = int(attached.sum())
            if count == 0:
                categories[(i, v)] = 3
                r += 1
            elif count == n:
                categories[(i, v)] = 1
                p += 1
            elif 2 * count == n:
                for name, vec in (("outgoing", out_vec), ("incoming", in_vec)):
                    present = vec != 0
                    if not present.any():
                        continue
                    if not np.array_equal(present, attached):
                        raise UnequalWeights(
                            f"hub {v} / cell {i}: {name} edges cover only part of the attachment"
                        )
                    if not _weights_equal(vec[present]):
                        raise UnequalWeights(
                            f"hub {v} / cell {i}: unequal {name} weights {vec[present]}"
                        )
                categories[(i, v)] = 2
                q += 1
            else:
                raise BadAdjacencyCount(
                    f"hub {v} is adjacent to {count} vertices of cell {i}; "
                    f"allowed counts are 0, {n} or n/2"
                )
        counts.append((p, q, r))
    return CategoryReport(categories=categories, counts=tuple(counts))


def _apply_switch(g: WeightedDigraph, part: SeidelPartition) -> WeightedDigraph:
    """Edge-wise switching transform; assumes the partition covers g."""
    edges = dict(g.edges)

    def put(key: tuple[int, int], w: float) -> None:
        if w == 0.0:
            edges.pop(key, None)
        else:
            edges[key] = float(w)

    for cell in part.cells:
        n = len(cell)
        for v in part.d_cell:
            for outgoing in (True, False):
                x = _attachment_vector(g, v, cell, outgoing)
                if not x.any():
                    continue
                w = (2.0 * x.sum() / n) - x
                for u, weight in zip(cell, w):
                    put((v, u) if outgoing else (u, v), weight)

    for i, ci in enumerate(part.cells):
        for j, cj in enumerate(part.cells):
            if i == j:
                continue
            block = np.array([[g.weight(u, v) for v in cj] for u in ci])
            if not block.any():
                continue
            new_block = switch_cross_block(block)
            for a, u in enumerate(ci):
                for b, v in enumerate(cj):
                    put((u, v), new_block[a, b])

    return WeightedDigraph(g.order, edges)


def switch(g: WeightedDigraph, part: SeidelPartition, verify: bool = False) -> WeightedDigraph:
    """Switching transform G -> G^pi; the result is cospectral with G.

    Validates the input first. Cross blocks between cells must carry
    constant row sums for the closed-form conjugation (NonConstantRowSum
    otherwise; the validation itself places no condition on them). With
    verify=True the edge-wise result is checked against the conjugation
    U A U (max deviation 1e-12) and the two adjacency spectra are compared;
    meant for tests, not production runs.
    """
    validate_seidel(g, part)
    result = _apply_switch(g, part)
    if verify:
        u = switching_matrix(part, g.order)
        a = adjacency_matrix(g)
        expected = u @ a @ u
        gap = float(np.max(np.abs(adjacency_matrix(result) - expected)))
        if gap > CONJUGATION_TOL:
            raise VerificationFailed(f"edge-wise switch deviates from U A U by {gap}")
        # the conjugation identity already forces equal spectra; the numeric
        # comparison is only well conditioned for symmetric matrices
        if np.max(np.abs(a - a.T)) <= CONJUGATION_TOL:
            if not cospectral(a, adjacency_matrix(result), 1e-9):
                raise VerificationFailed("switched graph is not cospectral with the input")
    return result

"""Laplacian- and signless-Laplacian-cospectral pairs via switching.

The pipeline lifts a graph G to a graph H whose adjacency matrix equals
L(G) or Q(G) (every vertex gains a loop holding the diagonal), switches H,
and projects the switched adjacency matrix back to a graph G'. Since the
switch is a unitary conjugation, L(G') (resp. Q(G')) shares its spectrum
with L(G) (resp. Q(G)).

The projection is only well defined when the switched matrix is realizable
as a Laplacian again; the starlike conditions checked here are sufficient
for that, not necessary.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import (
    AsymmetricWeights,
    CrossCellEdge,
    NegativeLoopWeight,
    NonComplementaryHalves,
    NonuniformCategory1Weights,
    NonuniformCategory2Weights,
    NotRealizable,
    OddCategory2Count,
    OrderMismatch,
    VerificationFailed,
)
from .graph import WeightedDigraph, cospectral, laplacian, signless_laplacian
from .switching import SeidelPartition, _apply_switch, switching_matrix, validate_seidel

REALIZABILITY_TOL = 1e-9
CONJUGATION_TOL = 1e-12


class SpectralKind(enum.Enum):
    LAPLACIAN = "laplacian"
    SIGNLESS = "signless"


def spectral_matrix(g: WeightedDigraph, kind: SpectralKind) -> np.ndarray:
    return laplacian(g) if kind is SpectralKind.LAPLACIAN else signless_laplacian(g)


@dataclass(frozen=True)
class StarlikeCellProfile:
    """Uniform attachment weights of one cell.

    w_plus / w_minus are the category-1 weights (hub to cell / cell to hub),
    w_half_plus / w_half_minus the category-2 ones; a weight is 0.0 when that
    direction carries no edges. q is the number of category-2 hub vertices.
    """

    cell_index: int
    w_plus: float
    w_minus: float
    w_half_plus: float
    w_half_minus: float
    p: int
    q: int
    r: int


def _direction_weight(
    g: WeightedDigraph, pairs: list[tuple[int, int]], cell_index: int, error: type
) -> float:
    """The single weight carried by all `pairs`, or 0.0 when none exist."""
    weights = {g.weight(u, v) for u, v in pairs}
    if not weights or weights == {0.0}:
        return 0.0
    if 0.0 in weights or len(weights) > 1:
        raise error(f"cell {cell_index}: weights {sorted(weights)} are not uniform")
    return weights.pop()


def validate_starlike(g: WeightedDigraph, part: SeidelPartition) -> list[StarlikeCellProfile]:
    """Check the starlike conditions on top of the switching-graph ones.

    No edges may run between distinct cells; category-1 edges share one
    weight per direction across each cell; the category-2 vertices of each
    cell come in an even number, split evenly between one half of the cell
    and its complement, again with one weight per direction.
    """
    report = validate_seidel(g, part)
    for i, ci in enumerate(part.cells):
        for j, cj in enumerate(part.cells):
            if i == j:
                continue
            for u in ci:
                for v in cj:
                    if g.weight(u, v) != 0.0:
                        raise CrossCellEdge(f"edge ({u}, {v}) joins cell {i} to cell {j}")

    profiles = []
    for i, cell in enumerate(part.cells):
        p, q, r = report.counts[i]
        cat1 = [v for v in part.d_cell if report.categories[(i, v)] == 1]
        cat2 = [v for v in part.d_cell if report.categories[(i, v)] == 2]

        w_plus = _direction_weight(
            g, [(v, u) for v in cat1 for u in cell], i, NonuniformCategory1Weights
        )
        w_minus = _direction_weight(
            g, [(u, v) for v in cat1 for u in cell], i, NonuniformCategory1Weights
        )

        if q % 2 != 0:
            raise OddCategory2Count(f"cell {i} has {q} category-2 hub vertices")
        halves: dict[frozenset[int], list[int]] = {}
        for v in cat2:
            attached = frozenset(
                u for u in cell if g.weight(v, u) != 0.0 or g.weight(u, v) != 0.0
            )
            halves.setdefault(attached, []).append(v)
        if halves:
            if len(halves) != 2:
                raise NonComplementaryHalves(
                    f"cell {i}: category-2 vertices use {len(halves)} distinct halves"
                )
            (s1, vs1), (s2, vs2) = halves.items()
            if s1 | s2 != set(cell) or s1 & s2:
                raise NonComplementaryHalves(f"cell {i}: attachment halves are not complementary")
            if len(vs1) != len(vs2):
                raise NonComplementaryHalves(
                    f"cell {i}: halves carry {len(vs1)} and {len(vs2)} vertices"
                )
        w_half_plus = _direction_weight(
            g,
            [(v, u) for att, vs in halves.items() for v in vs for u in att],
            i,
            NonuniformCategory2Weights,
        )
        w_half_minus = _direction_weight(
            g,
            [(u, v) for att, vs in halves.items() for v in vs for u in att],
            i,
            NonuniformCategory2Weights,
        )
        profiles.append(
            StarlikeCellProfile(
                cell_index=i,
                w_plus=w_plus,
                w_minus=w_minus,
                w_half_plus=w_half_plus,
                w_half_minus=w_half_minus,
                p=p,
                q=q,
                r=r,
            )
        )
    return profiles


def _graph_from_adjacency(a: np.ndarray) -> WeightedDigraph:
    n = a.shape[0]
    edges = {}
    for u in range(n):
        for v in range(n):
            if a[u, v] != 0.0:
                edges[(u, v)] = float(a[u, v])
    return WeightedDigraph(n, edges)


def lift_graph(g: WeightedDigraph, kind: SpectralKind) -> WeightedDigraph:
    """Graph whose adjacency matrix is L(G) or Q(G).

    Every vertex with a positive diagonal acquires a loop of weight
    d_i -/+ a_ii; off-diagonal entries become -a_ij (Laplacian) or +a_ij.
    Requires symmetric weights, like the Laplacians themselves.
    """
    return _graph_from_adjacency(spectral_matrix(g, kind))


def project_graph(h: WeightedDigraph, kind: SpectralKind) -> WeightedDigraph:
    """Inverse of lift_graph: recover G' with L(G') (or Q(G')) = A(H).

    Signless case: off-diagonals carry over and the loop weight is
    (a_ii - sum_j |a_ij|) / 2 per vertex, which must be nonnegative.
    Laplacian case: off-diagonals flip sign and no loop can contribute to
    the diagonal (a positive loop adds |l| to the degree and cancels against
    itself), so a_ii must equal the off-diagonal absolute row sum exactly
    and G' is loopless.
    """
    if not h.is_symmetric():
        raise AsymmetricWeights("projection needs a symmetric adjacency matrix")
    n = h.order
    edges: dict[tuple[int, int], float] = {}
    sign = 1.0 if kind is SpectralKind.SIGNLESS else -1.0
    for (u, v), w in h.edges.items():
        if u != v:
            edges[(u, v)] = sign * w
    off_sums = np.zeros(n)
    for (u, v), w in h.edges.items():
        if u != v:
            off_sums[u] += abs(w)
    tol = REALIZABILITY_TOL * (1.0 + max((abs(w) for w in h.edges.values()), default=0.0))
    for v in range(n):
        diag = h.loop(v)
        if kind is SpectralKind.SIGNLESS:
            loop = float(diag - off_sums[v]) / 2.0
            if loop < -tol:
                raise NegativeLoopWeight(
                    f"vertex {v}: diagonal {diag} below off-diagonal sum {off_sums[v]}"
                )
            if loop > tol:
                edges[(v, v)] = loop
        else:
            if abs(diag - off_sums[v]) > tol:
                raise NotRealizable(
                    f"vertex {v}: diagonal {diag} != off-diagonal absolute sum {off_sums[v]}"
                )
    return WeightedDigraph(n, edges)


def lq_switch(
    g: WeightedDigraph,
    part: SeidelPartition,
    kind: SpectralKind,
    force: bool = False,
    verify: bool = False,
) -> WeightedDigraph:
    """Produce G' sharing the Laplacian (or signless-Laplacian) spectrum of G.

    Runs lift -> switch -> project. The lifted graph is switched directly
    (lifting adds unequal loops to the hub vertices, so H itself usually
    fails the regularity validation even when G passes; the transform does
    not need it). In the Laplacian case the input's loop weights are carried
    onto G': the Laplacian of a positively-looped graph never sees its loops,
    so this is the unique choice that both satisfies L(G') = A(H^pi) and
    keeps the loop diagonal invariant.

    force=True skips the starlike validation and instead checks the claimed
    cospectrality after the fact, for inputs that switch cleanly without
    satisfying the (merely sufficient) starlike conditions.
    """
    if not force:
        validate_starlike(g, part)
    else:
        part.check_cover(g.order)
    h = lift_graph(g, kind)
    h_pi = _apply_switch(h, part)
    result = project_graph(h_pi, kind)
    if kind is SpectralKind.LAPLACIAN:
        edges = {key: w for key, w in result.edges.items()}
        for v in range(g.order):
            if g.loop(v) != 0.0:
                edges[(v, v)] = g.loop(v)
        result = WeightedDigraph(g.order, edges)
    if verify:
        u = switching_matrix(part, g.order)
        m = spectral_matrix(g, kind)
        gap = float(np.max(np.abs(spectral_matrix(result, kind) - u @ m @ u)))
        if gap > CONJUGATION_TOL:
            raise VerificationFailed(f"switched matrix deviates from U M U by {gap}")
    if force or verify:
        if not cospectral(spectral_matrix(g, kind), spectral_matrix(result, kind), 1e-9):
            raise VerificationFailed("switched graph lost cospectrality")
    return result


def loop_weights_preserved(g: WeightedDigraph, g_prime: WeightedDigraph) -> bool:
    """True when every loop weight matches exactly between the two graphs."""
    if g.order != g_prime.order:
        raise OrderMismatch(f"orders differ: {g.order} vs {g_prime.order}")
    return all(g.loop(v) == g_prime.loop(v) for v in range(g.order))

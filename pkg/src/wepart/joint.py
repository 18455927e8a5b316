"""Joint partitions of two graphs sharing a spectral radius.

A joint partition lives on the disjoint union G ⊔ H.  The union's Perron
weights are assembled per component (each normalized to minimum entry 1);
this is well-defined exactly when the two spectral radii agree, which
make_joint_context enforces.  The ratio law and the fractional-isomorphism
witness are invariant under per-component rescaling, so this normalization
is observationally neutral.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    GroundSetMismatch,
    NotBalanced,
    NotWeightEquitable,
    NuNotCellConstant,
    SpectralRadiusMismatch,
    WepartError,
)
from .graphs import Graph, disjoint_union
from .partitions import Partition, build_weighted_view
from .equitability import DEFAULT_TOL, SUPPORT_EPS, is_weight_equitable
from .spectral import perron


@dataclass(frozen=True)
class JointContext:
    """Two connected graphs with matching spectral radius, plus their union."""

    G: Graph
    H: Graph
    union: Graph
    offset: int
    nuG: np.ndarray
    nuH: np.ndarray
    lambda1: float

    @property
    def nu_union(self) -> np.ndarray:
        return np.concatenate([self.nuG, self.nuH])


def make_joint_context(g: Graph, h: Graph, tol: float = DEFAULT_TOL) -> JointContext:
    pg = perron(g)
    ph = perron(h)
    if abs(pg.lambda1 - ph.lambda1) > tol:
        raise SpectralRadiusMismatch(
            f"spectral radii differ: {pg.lambda1:.12g} vs {ph.lambda1:.12g}")
    union, offset = disjoint_union(g, h)
    return JointContext(G=g, H=h, union=union, offset=offset,
                        nuG=pg.nu, nuH=ph.nu, lambda1=pg.lambda1)


def _check_ground(ctx: JointContext, p: Partition) -> None:
    if p.n != ctx.union.n:
        raise GroundSetMismatch(
            f"joint partition over {p.n} vertices, union has {ctx.union.n}")


def is_balanced(ctx: JointContext, p: Partition) -> bool:
    """True iff every cell meets both V(G) and V(H)."""
    _check_ground(ctx, p)
    for cell in p.cells:
        if cell[0] > ctx.offset or cell[-1] <= ctx.offset:
            return False
    return True


def restriction(ctx: JointContext, p: Partition, side: str) -> Partition:
    """Nonempty cell intersections with one side, in that side's vertex ids."""
    _check_ground(ctx, p)
    if side not in ("G", "H"):
        raise ValueError(f"side must be 'G' or 'H', got {side!r}")
    assignment = {}
    if side == "G":
        for v in range(1, ctx.offset + 1):
            assignment[v] = p.assignment[v - 1]
        n = ctx.offset
    else:
        for v in range(ctx.offset + 1, ctx.union.n + 1):
            assignment[v - ctx.offset] = p.assignment[v - 1]
        n = ctx.union.n - ctx.offset
    return Partition([assignment[v] for v in range(1, n + 1)])


def ratio_check(ctx: JointContext, p: Partition, tol: float = DEFAULT_TOL) -> bool:
    """Norm-ratio law: cellwise ‖rho(P∩V(G))‖²/‖rho(P∩V(H))‖² is global.

    Requires p balanced and weight-equitable for the union; the common value
    is ‖rho(V(G))‖²/‖rho(V(H))‖².  Comparison is relative within tol.
    """
    if not is_balanced(ctx, p):
        raise NotBalanced("ratio law requires a balanced joint partition")
    nu = ctx.nu_union
    if not is_weight_equitable(ctx.union, nu, p, tol):
        raise NotWeightEquitable("ratio law requires a weight-equitable partition")
    global_ratio = float(ctx.nuG @ ctx.nuG) / float(ctx.nuH @ ctx.nuH)
    for cell in p.cells:
        g_part = sum(nu[u - 1] ** 2 for u in cell if u <= ctx.offset)
        h_part = sum(nu[u - 1] ** 2 for u in cell if u > ctx.offset)
        if abs(g_part / h_part - global_ratio) > tol * max(1.0, global_ratio):
            return False
    return True


def fractional_isomorphism_witness(ctx: JointContext, p: Partition,
                                   tol: float = DEFAULT_TOL) -> np.ndarray:
    """Doubly stochastic X commuting with A(G)⊕A(H), from the partition.

    Requires p balanced, weight-equitable on the union, and the Perron
    weights constant on every cell.  Returns X = S_bar S_bar^T, verified
    doubly stochastic, commuting, and support-connected across the sides.
    """
    if not is_balanced(ctx, p):
        raise NotBalanced("witness requires a balanced joint partition")
    nu = ctx.nu_union
    if not is_weight_equitable(ctx.union, nu, p, tol):
        raise NotWeightEquitable("witness requires a weight-equitable partition")
    for cell in p.cells:
        vals = [nu[u - 1] for u in cell]
        if max(vals) - min(vals) > tol:
            raise NuNotCellConstant(
                f"Perron weights vary on cell {cell}: {min(vals)}..{max(vals)}")
    x = build_weighted_view(ctx.union, nu, p).X
    a = ctx.union.adjacency_matrix()
    row_err = float(np.abs(x.sum(axis=1) - 1.0).max())
    col_err = float(np.abs(x.sum(axis=0) - 1.0).max())
    comm_err = float(np.abs(a @ x - x @ a).max())
    if max(row_err, col_err, comm_err) > max(tol, 1e-8):
        raise WepartError(
            f"witness verification failed: row {row_err:.3g}, "
            f"col {col_err:.3g}, commutator {comm_err:.3g}")
    off = ctx.offset
    g_covered = (x[:off, off:] > SUPPORT_EPS).any(axis=1).all()
    h_covered = (x[off:, :off] > SUPPORT_EPS).any(axis=1).all()
    if not (g_covered and h_covered):
        raise WepartError("witness support does not cross between the graphs")
    return x

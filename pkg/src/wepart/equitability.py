"""Equitability and weight-equitability tests.

The direct check on weight-intersection numbers is the canonical decision
procedure.  Two mathematically equivalent characterizations are implemented
as independent cross-validators and must agree with it:

  * the commutator check: the partition is weight-equitable iff the
    adjacency matrix commutes with the projector X of the partition;
  * the invariance check: iff the weighted adjacency operator
    (Bf)(u) = sum_{v~u} (nu_v/nu_u) f(v) maps cell indicators into the
    span of cell indicators (constant on every cell).

is_weight_equitable and is_weight_equitable_commute run on the compiled
kernels when available; is_B_invariant deliberately routes through the dense
b_operator so the three code paths stay distinct.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import (
    DimensionMismatch,
    GroundSetMismatch,
    NegativeEntry,
    NotSquare,
)
from .graphs import Graph
from .partitions import Partition, build_weighted_view

# Absolute tolerance on b*-deviations; nu carries ~1e-12 residual, so this
# leaves four orders of magnitude of safety margin.
DEFAULT_TOL = 1e-8

# Entries of magnitude above this count as support in scc_partition.
SUPPORT_EPS = 1e-12


def _check_inputs(graph: Graph, nu: np.ndarray, p: Partition) -> np.ndarray:
    nu = np.asarray(nu, dtype=float)
    if nu.shape != (graph.n,):
        raise DimensionMismatch(f"nu must have length {graph.n}, got {nu.shape}")
    if p.n != graph.n:
        raise GroundSetMismatch(f"partition over {p.n} vertices, graph has {graph.n}")
    return nu


@dataclass(frozen=True)
class IntersectionTable:
    """Per-vertex weight-intersection numbers and their cell constancy.

    per_vertex[u-1, j] = b*_{ij}(u) for u in cell i; constants[i, j] is the
    cell-averaged value (equal to the common value when is_we holds);
    max_deviation is the largest within-cell spread.
    """

    per_vertex: np.ndarray
    constants: np.ndarray
    is_we: bool
    max_deviation: float


def weight_intersection_numbers(graph: Graph, nu: np.ndarray, p: Partition,
                                tol: float = DEFAULT_TOL) -> IntersectionTable:
    """b*_{ij}(u) = (1/nu_u) * sum of nu_v over neighbors v of u in cell j."""
    nu = _check_inputs(graph, nu, p)
    n, m = graph.n, p.m
    per_vertex = np.zeros((n, m))
    for u in range(1, n + 1):
        for v in graph.neighbors(u):
            per_vertex[u - 1, p.assignment[v - 1]] += nu[v - 1]
        per_vertex[u - 1] /= nu[u - 1]
    constants = np.zeros((m, m))
    deviation = 0.0
    for i, cell in enumerate(p.cells):
        block = per_vertex[[u - 1 for u in cell]]
        constants[i] = block.mean(axis=0)
        deviation = max(deviation, float((block.max(axis=0) - block.min(axis=0)).max()))
    per_vertex.setflags(write=False)
    constants.setflags(write=False)
    return IntersectionTable(per_vertex=per_vertex, constants=constants,
                             is_we=deviation <= tol, max_deviation=deviation)


def is_weight_equitable(graph: Graph, nu: np.ndarray, p: Partition,
                        tol: float = DEFAULT_TOL) -> bool:
    """True iff the weight-intersection numbers are cell-independent."""
    nu = _check_inputs(graph, nu, p)
    indptr, indices = graph.csr
    return kernels.we_deviation(indptr, indices, nu, p.cell_array, p.m) <= tol


def is_weight_equitable_commute(graph: Graph, nu: np.ndarray, p: Partition,
                                tol: float = DEFAULT_TOL) -> bool:
    """True iff the adjacency matrix commutes with the partition projector."""
    nu = _check_inputs(graph, nu, p)
    indptr, indices = graph.csr
    return kernels.commutator_deviation(indptr, indices, nu,
                                        p.cell_array, p.m) <= tol


def is_equitable(graph: Graph, p: Partition) -> bool:
    """Exact integer check that plain neighbor counts are cell-independent."""
    if p.n != graph.n:
        raise GroundSetMismatch(f"partition over {p.n} vertices, graph has {graph.n}")
    indptr, indices = graph.csr
    return kernels.eq_deviation(indptr, indices, p.cell_array, p.m) == 0


def perron_constant_on_cells(nu: np.ndarray, p: Partition,
                             tol: float = DEFAULT_TOL) -> bool:
    """True iff within each cell max(nu) - min(nu) <= tol."""
    nu = np.asarray(nu, dtype=float)
    if nu.shape != (p.n,):
        raise DimensionMismatch(f"nu must have length {p.n}, got {nu.shape}")
    for cell in p.cells:
        vals = nu[[u - 1 for u in cell]]
        if float(vals.max() - vals.min()) > tol:
            return False
    return True


def quotient_eigen_check(graph: Graph, nu: np.ndarray, p: Partition,
                         tol: float = DEFAULT_TOL) -> bool:
    """Necessary condition: the cell-norm vector is a B-bar eigenvector.

    Checks ‖B_bar x - lambda1 x‖_inf <= tol with x_i = ‖rho(V_i)‖ and
    lambda1 taken as the Rayleigh quotient of nu (tight when nu is the
    Perron vector).
    """
    nu = _check_inputs(graph, nu, p)
    view = build_weighted_view(graph, nu, p)
    x = np.diag(view.D)
    a = graph.adjacency_matrix()
    lam = float(nu @ (a @ nu)) / float(nu @ nu)
    return float(np.abs(view.B_bar @ x - lam * x).max()) <= tol


def scc_partition(x: np.ndarray) -> Partition:
    """Strongly connected components of the support digraph of x.

    The digraph has an arc i -> j whenever |x_ij| exceeds the support
    threshold.  Components are returned as a canonical Partition.
    """
    x = np.asarray(x, dtype=float)
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {x.shape}")
    if x.size and float(x.min()) < 0.0:
        raise NegativeEntry("matrix must be entrywise nonnegative")
    n = x.shape[0]
    succ = [np.nonzero(x[i] > SUPPORT_EPS)[0] for i in range(n)]
    # Iterative Tarjan.
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    assignment = [-1] * n
    counter = 0
    comp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            children = succ[v]
            while pi < len(children):
                w = int(children[pi])
                pi += 1
                if index[w] == -1:
                    work.append((v, pi))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    assignment[w] = comp
                    if w == v:
                        break
                comp += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return Partition(assignment)


def b_operator(graph: Graph, nu: np.ndarray, f: np.ndarray) -> np.ndarray:
    """(Bf)(u) = sum over neighbors v of u of (nu_v / nu_u) * f(v)."""
    nu = np.asarray(nu, dtype=float)
    f = np.asarray(f, dtype=float)
    if nu.shape != (graph.n,) or f.shape != (graph.n,):
        raise DimensionMismatch(
            f"nu and f must have length {graph.n}, got {nu.shape} and {f.shape}")
    a = graph.adjacency_matrix()
    return (a @ (nu * f)) / nu


def is_B_invariant(graph: Graph, nu: np.ndarray, p: Partition,
                   tol: float = DEFAULT_TOL) -> bool:
    """True iff B maps every cell indicator to a cell-constant vector."""
    nu = _check_inputs(graph, nu, p)
    for j in range(p.m):
        indicator = np.zeros(graph.n)
        indicator[p.cell_array == j] = 1.0
        image = b_operator(graph, nu, indicator)
        for cell in p.cells:
            vals = image[[u - 1 for u in cell]]
            if float(vals.max() - vals.min()) > tol:
                return False
    return True


def coarsest_equitable(graph: Graph) -> Partition:
    """Coarsest equitable partition via neighborhood-multiset refinement.

    Starts from the single-cell partition and refines by the sorted multiset
    of neighbor colors until stable.  Every equitable partition refines the
    result.
    """
    n = graph.n
    colors = [0] * (n + 1)
    ncolors = 1
    while True:
        keys: dict[tuple, int] = {}
        new = [0] * (n + 1)
        for u in range(1, n + 1):
            key = (colors[u], tuple(sorted(colors[v] for v in graph.neighbors(u))))
            new[u] = keys.setdefault(key, len(keys))
        if len(keys) == ncolors:
            return Partition(new[1:])
        colors, ncolors = new, len(keys)

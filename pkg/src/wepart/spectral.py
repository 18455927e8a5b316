"""Perron eigenvector and spectral radius via shifted power iteration.

Power iteration runs on A + I rather than A: a connected bipartite graph has
-lambda1 in its spectrum, so unshifted iteration oscillates, while A + I has
a strictly dominant eigenvalue lambda1 + 1.  The shift is subtracted from the
converged Rayleigh quotient.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    NegativeEntry,
    NoConvergence,
    NotConnected,
    NotSquare,
    NotSymmetric,
    VertexOutOfRange,
)
from .graphs import Graph, is_connected

DEFAULT_TOL = 1e-12
MAX_ITERATIONS = 10 ** 6


@dataclass(frozen=True)
class PerronData:
    """Spectral radius and min-normalized positive eigenvector of a graph.

    residual is the achieved ‖A nu - lambda1 nu‖_inf, at most tol*(lambda1+1)
    (the convergence threshold of the shifted iteration).
    """

    lambda1: float
    nu: np.ndarray
    residual: float


def perron(graph: Graph, tol: float = DEFAULT_TOL, *,
           start: np.ndarray | None = None) -> PerronData:
    """Perron data of a connected graph.

    The iterate is renormalized to minimum entry 1 every step, so the
    returned nu has min exactly 1 by construction.  Convergence criterion:
    ‖(A+I)v - rho*v‖_inf <= tol*rho with rho the Rayleigh quotient of A + I.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not is_connected(graph):
        raise NotConnected("Perron vector requires a connected graph")
    a = graph.adjacency_matrix()
    n = graph.n
    if start is None:
        v = np.ones(n)
    else:
        v = np.asarray(start, dtype=float)
        if v.shape != (n,):
            raise ValueError(f"start vector must have length {n}")
        if not (v > 0).all():
            raise ValueError("start vector must be strictly positive")
        v = v / v.min()
    for _ in range(MAX_ITERATIONS):
        w = a @ v + v
        rho = float(v @ w) / float(v @ v)
        if float(np.abs(w - rho * v).max()) <= tol * rho:
            lam = rho - 1.0
            residual = float(np.abs(a @ v - lam * v).max())
            v = v.copy()
            v.setflags(write=False)
            return PerronData(lambda1=lam, nu=v, residual=residual)
        v = w / w.min()
    raise NoConvergence(f"power iteration exceeded {MAX_ITERATIONS} iterations")


def spectral_radius(matrix: np.ndarray, tol: float = DEFAULT_TOL) -> float:
    """Largest eigenvalue of a symmetric entrywise-nonnegative matrix."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {m.shape}")
    scale = float(np.abs(m).max()) if m.size else 0.0
    if float(np.abs(m - m.T).max()) > 1e-12 * max(1.0, scale):
        raise NotSymmetric("matrix is not symmetric")
    if m.size and float(m.min()) < 0.0:
        raise NegativeEntry("matrix must be entrywise nonnegative")
    k = m.shape[0]
    v = np.ones(k)
    for _ in range(MAX_ITERATIONS):
        w = m @ v + v
        rho = float(v @ w) / float(v @ v)
        if float(np.abs(w - rho * v).max()) <= tol * rho:
            return rho - 1.0
        v = w / float(np.abs(w).max())
    raise NoConvergence(f"power iteration exceeded {MAX_ITERATIONS} iterations")


def weight_degree(graph: Graph, nu: np.ndarray, u: int) -> float:
    """(1/nu_u) * sum of nu over the neighbors of u; equals lambda1."""
    if not (1 <= u <= graph.n):
        raise VertexOutOfRange(f"vertex {u} outside 1..{graph.n}")
    total = sum(nu[v - 1] for v in graph.neighbors(u))
    return float(total / nu[u - 1])

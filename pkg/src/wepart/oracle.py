"""Brute-force ground truth at desk scale.

Everything here is exhaustive and exponential: all set partitions, all
automorphisms, all pairings.  The point is to certify the fast paths on
small instances, not to scale.  Vertex caps are configuration, not
constants, via EnumerationBudget.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import factorial
from typing import Iterator, Optional

import numpy as np

from . import kernels
from .cotrees import pairs_partition
from .errors import (
    HasFixedPoint,
    NotConnected,
    NotInvolution,
    NotTwoHomogeneous,
    OddOrder,
    TooLarge,
)
from .graphs import Graph, is_connected
from .partitions import Partition, join_all
from .perms import is_fixed_point_free, is_involution
from .spectral import perron

PARTITION_MAX_N = 12
AUTOMORPHISM_MAX_N = 8
INVOLUTION_MAX_N = 12

DEFAULT_TOL = 1e-8


@dataclass(frozen=True)
class EnumerationBudget:
    """Caps on exhaustive searches; None picks the per-operation default."""

    max_n: Optional[int] = None
    max_count: Optional[int] = None


def _resolve_n(n: int, budget: Optional[EnumerationBudget],
               default_max: int, what: str) -> None:
    cap = default_max if budget is None or budget.max_n is None else budget.max_n
    if n > cap:
        raise TooLarge(f"{what} capped at n = {cap}, got n = {n}")


def _check_count(count: int, budget: Optional[EnumerationBudget],
                 what: str) -> None:
    if budget is not None and budget.max_count is not None:
        if count > budget.max_count:
            raise TooLarge(
                f"{what} would enumerate {count} objects, "
                f"budget allows {budget.max_count}")


def bell_number(n: int) -> int:
    """Number of set partitions of an n-set."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def _rgs_strings(n: int) -> Iterator[list[int]]:
    """Restricted growth strings of length n, lexicographic, each once.

    a[0] = 0 and a[i] <= 1 + max(a[0..i-1]); these are exactly the
    canonical cell assignments of set partitions.  The yielded list is
    reused; callers must copy.
    """
    a = [0] * n
    m = [0] * n
    while True:
        yield a
        i = n - 1
        while i > 0 and a[i] > m[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m[i] = max(m[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            m[j] = m[i]


def all_partitions(n: int, budget: Optional[EnumerationBudget] = None
                   ) -> Iterator[Partition]:
    """All Bell(n) set partitions of {1..n}, canonical, each exactly once."""
    _resolve_n(n, budget, PARTITION_MAX_N, "partition enumeration")
    _check_count(bell_number(n), budget, "partition enumeration")
    for a in _rgs_strings(n):
        yield Partition(a)


def enumerate_weight_equitable(graph: Graph, tol: float = DEFAULT_TOL,
                               budget: Optional[EnumerationBudget] = None
                               ) -> list[Partition]:
    """All weight-equitable partitions of a connected graph, by brute force.

    Runs the deviation kernel on raw assignment strings and only
    materializes Partition objects for the hits.
    """
    if not is_connected(graph):
        raise NotConnected("weight-equitable enumeration needs a connected graph")
    n = graph.n
    _resolve_n(n, budget, PARTITION_MAX_N, "weight-equitable enumeration")
    _check_count(bell_number(n), budget, "weight-equitable enumeration")
    nu = perron(graph).nu
    indptr, indices = graph.csr
    cell = np.empty(n, dtype=np.int32)
    hits = []
    for a in _rgs_strings(n):
        cell[:] = a
        m = int(cell.max()) + 1
        if kernels.we_deviation(indptr, indices, nu, cell, m) <= tol:
            hits.append(Partition(a))
    return hits


def all_automorphisms(graph: Graph,
                      budget: Optional[EnumerationBudget] = None
                      ) -> list[tuple[int, ...]]:
    """The full automorphism group, by pruned backtracking over images."""
    n = graph.n
    _resolve_n(n, budget, AUTOMORPHISM_MAX_N, "automorphism enumeration")
    _check_count(factorial(n), budget, "automorphism enumeration")
    nbr = [frozenset()] + [frozenset(graph.neighbors(u))
                           for u in range(1, n + 1)]
    deg = [0] + [len(nbr[u]) for u in range(1, n + 1)]
    image = [0] * (n + 1)
    used = [False] * (n + 1)
    found: list[tuple[int, ...]] = []

    def extend(v: int) -> None:
        if v > n:
            found.append(tuple(image[1:]))
            return
        for w in range(1, n + 1):
            if used[w] or deg[w] != deg[v]:
                continue
            if all((u in nbr[v]) == (image[u] in nbr[w])
                   for u in range(1, v)):
                image[v] = w
                used[w] = True
                extend(v + 1)
                used[w] = False
        image[v] = 0

    extend(1)
    return found


def find_fixed_point_free_involution(graph: Graph,
                                     budget: Optional[EnumerationBudget] = None
                                     ) -> Optional[tuple[int, ...]]:
    """A fixed-point-free involutionary automorphism, or None.

    Perfect-matching-shaped search: repeatedly pairs the smallest
    unassigned vertex, pruning on degree equality and on adjacency
    consistency with all pairs already placed.
    """
    n = graph.n
    if n % 2 == 1:
        raise OddOrder(f"n = {n} is odd; every involution has a fixed point")
    _resolve_n(n, budget, INVOLUTION_MAX_N, "involution search")
    # pairings of n points: (n-1)!! = n! / (2^(n/2) (n/2)!)
    _check_count(factorial(n) // (2 ** (n // 2) * factorial(n // 2)),
                 budget, "involution search")
    nbr = [frozenset()] + [frozenset(graph.neighbors(u))
                           for u in range(1, n + 1)]
    deg = [0] + [len(nbr[u]) for u in range(1, n + 1)]
    gamma = [0] * (n + 1)

    def extend() -> bool:
        u = next((v for v in range(1, n + 1) if gamma[v] == 0), 0)
        if u == 0:
            return True
        for w in range(u + 1, n + 1):
            if gamma[w] != 0 or deg[w] != deg[u]:
                continue
            ok = True
            for a in range(1, n + 1):
                b = gamma[a]
                if b == 0 or a in (u, w):
                    continue
                if (a in nbr[u]) != (b in nbr[w]) or (a in nbr[w]) != (b in nbr[u]):
                    ok = False
                    break
            if ok:
                gamma[u], gamma[w] = w, u
                if extend():
                    return True
                gamma[u] = gamma[w] = 0
        return False

    if extend():
        return tuple(gamma[1:])
    return None


def involution_to_partition(gamma: tuple[int, ...]) -> Partition:
    """Orbit pairs {u, γ(u)} of a fixed-point-free involution, as cells."""
    if not is_involution(gamma):
        raise NotInvolution(f"{gamma} is not an involution")
    if not is_fixed_point_free(gamma):
        raise HasFixedPoint(f"{gamma} fixes a point")
    return pairs_partition(gamma)


def partition_to_involution(p: Partition) -> tuple[int, ...]:
    """Product of transpositions over the cells of a 2-homogeneous partition."""
    gamma = [0] * p.n
    for cell in p.cells:
        if len(cell) != 2:
            raise NotTwoHomogeneous(
                f"cell {set(cell)} has size {len(cell)}, need 2")
        u, v = cell
        gamma[u - 1] = v
        gamma[v - 1] = u
    return tuple(gamma)


def max_we_refinement(graph: Graph, p: Partition, tol: float = DEFAULT_TOL,
                      budget: Optional[EnumerationBudget] = None) -> Partition:
    """Join of all weight-equitable partitions refining p (brute force).

    The result refines p, is weight-equitable (joins of weight-equitable
    partitions are weight-equitable), and every weight-equitable
    refinement of p refines it.  It always exists: the discrete partition
    is weight-equitable.
    """
    n = graph.n
    _resolve_n(n, budget, PARTITION_MAX_N, "refinement enumeration")
    count = 1
    for cell in p.cells:
        count *= bell_number(len(cell))
    _check_count(count, budget, "refinement enumeration")
    nu = perron(graph).nu
    indptr, indices = graph.csr
    cell_arr = np.empty(n, dtype=np.int32)
    hits: list[Partition] = []
    per_cell = [[list(a) for a in _rgs_strings(len(cell))] for cell in p.cells]
    for combo in product(*per_cell):
        offset = 0
        for members, local in zip(p.cells, combo):
            for v, c in zip(members, local):
                cell_arr[v - 1] = offset + c
            offset += max(local) + 1
        # renumber by first appearance so m is the true cell count
        q = Partition(cell_arr.tolist())
        if kernels.we_deviation(indptr, indices, nu, q.cell_array, q.m) <= tol:
            hits.append(q)
    return join_all(hits)

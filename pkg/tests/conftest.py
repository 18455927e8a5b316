"""Shared fixtures: named instances, definition-level oracles, corpora.

The oracles here recompute everything from first principles with plain
Python loops and dense linear algebra, independently of the package's
kernels, so the fast paths are certified against a second route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import pytest

from wepart import (
    Graph,
    Partition,
    all_partitions,
    is_B_invariant,
    is_equitable,
    is_weight_equitable,
    is_weight_equitable_commute,
    make_partition,
    perron,
)

TOL = 1e-8


# --- named instances -----------------------------------------------------------

def tree6() -> Graph:
    """Bipartite 6-vertex tree with non-constant Perron weights per side.

    nu is approximately (2.732, 1, 1, 1.414, 1.932, 1.932); the bipartition
    {1,2,3} | {4,5,6} is weight-equitable but not equitable.
    """
    return Graph(6, [(1, 4), (1, 5), (2, 5), (1, 6), (3, 6)])


TREE6_BIPARTITION = [{1, 2, 3}, {4, 5, 6}]
TREE6_NU = (1 + math.sqrt(3), 1.0, 1.0, math.sqrt(2),
            math.sqrt(2 + math.sqrt(3)), math.sqrt(2 + math.sqrt(3)))
TREE6_LAMBDA1 = math.sqrt(2 + math.sqrt(3))


def hex6() -> Graph:
    """6-vertex, 11-edge graph with Perron vector (1, sqrt2, 1, 1, sqrt2, 1).

    P = {{1,3,5},{2,4,6}} and Q = {{1,5,6},{2,3,4}} are weight-equitable but
    not equitable; their meet is not weight-equitable.
    """
    return Graph(6, [(1, 2), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5),
                     (2, 6), (3, 5), (3, 6), (4, 5), (5, 6)])


HEX6_P = [{1, 3, 5}, {2, 4, 6}]
HEX6_Q = [{1, 5, 6}, {2, 3, 4}]
HEX6_MEET = [{1, 5}, {3}, {6}, {2, 4}]
HEX6_NU = (1.0, math.sqrt(2), 1.0, 1.0, math.sqrt(2), 1.0)
HEX6_LAMBDA1 = 1 + 2 * math.sqrt(2)


def p4() -> Graph:
    return Graph(4, [(1, 2), (2, 3), (3, 4)])


def k2() -> Graph:
    return Graph(2, [(1, 2)])


def k3() -> Graph:
    return Graph(3, [(1, 2), (1, 3), (2, 3)])


def c4() -> Graph:
    return Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


def star4() -> Graph:
    return Graph(4, [(1, 2), (1, 3), (1, 4)])


def complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(1, n + 1)
                     for j in range(i + 1, n + 1)])


@pytest.fixture
def fig_tree():
    return tree6()


@pytest.fixture
def fig_hex():
    return hex6()


# --- definition-level oracles -----------------------------------------------------

def brute_we_deviation(graph: Graph, nu, p: Partition) -> float:
    """Max spread of (1/nu_u) sum_{v in N(u) cap V_j} nu_v over u in a cell.

    Pure-Python from the definition; independent of the package kernels.
    """
    worst = 0.0
    for cell in p.cells:
        for j in range(p.m):
            vals = []
            for u in cell:
                s = sum(nu[v - 1] for v in graph.neighbors(u)
                        if p.cell_of(v) == j)
                vals.append(s / nu[u - 1])
            worst = max(worst, max(vals) - min(vals))
    return worst


def brute_is_we(graph: Graph, nu, p: Partition, tol: float = TOL) -> bool:
    return brute_we_deviation(graph, nu, p) <= tol


def brute_is_equitable(graph: Graph, p: Partition) -> bool:
    for cell in p.cells:
        for j in range(p.m):
            counts = {sum(1 for v in graph.neighbors(u) if p.cell_of(v) == j)
                      for u in cell}
            if len(counts) > 1:
                return False
    return True


def dense_perron(graph: Graph):
    """Perron data via a dense symmetric eigensolver, as an oracle."""
    a = graph.adjacency_matrix()
    vals, vecs = np.linalg.eigh(a)
    lam = float(vals[-1])
    v = vecs[:, -1]
    if v.sum() < 0:
        v = -v
    assert (v > 0).all(), "Perron vector should be strictly positive"
    return lam, v / v.min()


# --- corpora ------------------------------------------------------------------------

@pytest.fixture(scope="session")
def atlas():
    """All connected graphs up to isomorphism, by vertex count 1..7."""
    import networkx as nx

    by_n: dict[int, list[Graph]] = {n: [] for n in range(1, 8)}
    for g in nx.graph_atlas_g()[1:]:
        n = g.number_of_nodes()
        if n <= 7 and nx.is_connected(g):
            by_n[n].append(Graph(n, [(u + 1, v + 1) for u, v in g.edges()]))
    counts = {n: len(by_n[n]) for n in by_n}
    assert counts == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}, counts
    return by_n


@dataclass
class SweepEntry:
    graph: Graph
    nu: np.ndarray
    lambda1: float
    we_parts: list  # all weight-equitable partitions
    agreement_ok: bool  # three checks agreed on every partition


@pytest.fixture(scope="session")
def sweep(atlas):
    """Per connected graph n <= 7: Perron data, all weight-equitable
    partitions, and three-route agreement over every partition."""
    entries = []
    for n in range(1, 8):
        for g in atlas[n]:
            data = perron(g)
            we = []
            agreement = True
            for p in all_partitions(n):
                direct = is_weight_equitable(g, data.nu, p, TOL)
                commute = is_weight_equitable_commute(g, data.nu, p, TOL)
                binv = is_B_invariant(g, data.nu, p, TOL)
                if not (direct == commute == binv):
                    agreement = False
                if direct:
                    we.append(p)
            entries.append(SweepEntry(g, data.nu, data.lambda1, we, agreement))
    return entries

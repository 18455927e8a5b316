"""Vertex partitions, lattice operations, and the weighted matrices.

A Partition stores a canonical assignment array: cells are numbered by their
smallest member, which makes equality a plain tuple comparison.  join uses
path-compressed union-find over the share-a-cell relation; meet intersects
cellwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    EmptyCell,
    GroundSetMismatch,
    NotPermutation,
    Overlap,
    Uncovered,
    VertexOutOfRange,
    WepartError,
)
from .graphs import Graph


class Partition:
    """Set partition of vertices 1..n with cells ordered by smallest member."""

    __slots__ = ("n", "assignment", "cells", "__dict__")

    def __init__(self, assignment: Sequence[int]):
        """Build from any cell-index array over vertices 1..n (0-based cells).

        The array is recanonicalized: cells are renumbered in order of first
        appearance, which equals ordering by smallest member.
        """
        n = len(assignment)
        relabel: dict[int, int] = {}
        canon = [0] * n
        for i, raw in enumerate(assignment):
            idx = relabel.get(raw)
            if idx is None:
                idx = len(relabel)
                relabel[raw] = idx
            canon[i] = idx
        self.n = n
        self.assignment: tuple[int, ...] = tuple(canon)
        cells: list[list[int]] = [[] for _ in range(len(relabel))]
        for v, idx in enumerate(self.assignment, start=1):
            cells[idx].append(v)
        self.cells: tuple[tuple[int, ...], ...] = tuple(tuple(c) for c in cells)

    @property
    def m(self) -> int:
        return len(self.cells)

    def cell_of(self, u: int) -> int:
        """0-based index of the cell containing vertex u."""
        if not (1 <= u <= self.n):
            raise VertexOutOfRange(f"vertex {u} outside 1..{self.n}")
        return self.assignment[u - 1]

    @cached_property
    def cell_array(self) -> np.ndarray:
        arr = np.array(self.assignment, dtype=np.int32)
        arr.setflags(write=False)
        return arr

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.assignment == other.assignment

    def __hash__(self) -> int:
        return hash(self.assignment)

    def __repr__(self) -> str:
        inner = ", ".join("{" + ",".join(map(str, c)) + "}" for c in self.cells)
        return f"Partition({inner})"


def make_partition(n: int, cells: Iterable[Iterable[int]]) -> Partition:
    """Validate disjoint nonempty cells covering 1..n and canonicalize."""
    assignment = [-1] * n
    for idx, cell in enumerate(cells):
        members = list(cell)
        if not members:
            raise EmptyCell("partition cells must be nonempty")
        for u in members:
            if not (1 <= u <= n):
                raise VertexOutOfRange(f"vertex {u} outside 1..{n}")
            if assignment[u - 1] != -1:
                raise Overlap(f"vertex {u} appears in two cells")
            assignment[u - 1] = idx
    missing = [v + 1 for v in range(n) if assignment[v] == -1]
    if missing:
        raise Uncovered(f"vertices {missing} not covered by any cell")
    return Partition(assignment)


def trivial_partition(n: int) -> Partition:
    return Partition([0] * n)


def discrete_partition(n: int) -> Partition:
    return Partition(range(n))


def _check_same_ground(p: Partition, q: Partition) -> None:
    if p.n != q.n:
        raise GroundSetMismatch(f"partitions over {p.n} and {q.n} vertices")


def refines(p: Partition, q: Partition) -> bool:
    """True iff every cell of p is contained in a cell of q."""
    _check_same_ground(p, q)
    for cell in p.cells:
        target = q.assignment[cell[0] - 1]
        if any(q.assignment[u - 1] != target for u in cell):
            return False
    return True


def join(p: Partition, q: Partition) -> Partition:
    """Coarsest partition refined by both, via union-find on shared cells."""
    _check_same_ground(p, q)
    parent = list(range(p.n))

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for part in (p, q):
        for cell in part.cells:
            first = find(cell[0] - 1)
            for u in cell[1:]:
                parent[find(u - 1)] = first
    return Partition([find(v) for v in range(p.n)])


def meet(p: Partition, q: Partition) -> Partition:
    """Finest partition refining both: nonempty cellwise intersections."""
    _check_same_ground(p, q)
    keys: dict[tuple[int, int], int] = {}
    assignment = [0] * p.n
    for v in range(p.n):
        key = (p.assignment[v], q.assignment[v])
        assignment[v] = keys.setdefault(key, len(keys))
    return Partition(assignment)


def join_all(parts: Sequence[Partition]) -> Partition:
    if not parts:
        raise ValueError("join_all needs at least one partition")
    result = parts[0]
    for p in parts[1:]:
        result = join(result, p)
    return result


def apply_automorphism(p: Partition, gamma: Sequence[int]) -> Partition:
    """Partition with cells gamma(V_i), recanonicalized."""
    n = p.n
    g = list(gamma)
    if len(g) != n or sorted(g) != list(range(1, n + 1)):
        raise NotPermutation(f"gamma is not a permutation of 1..{n}")
    assignment = [0] * n
    for v in range(1, n + 1):
        assignment[g[v - 1] - 1] = p.assignment[v - 1]
    return Partition(assignment)


# --- partition text format ---------------------------------------------------

def parse_partition(text: str, n: int) -> Partition:
    """One cell per line, space-separated 1-based vertex ids."""
    cells = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln:
            continue
        try:
            cells.append([int(tok) for tok in ln.split()])
        except ValueError as exc:
            raise WepartError(f"bad partition line {ln!r}") from exc
    return make_partition(n, cells)


def format_partition(p: Partition) -> str:
    return "\n".join(" ".join(map(str, cell)) for cell in p.cells) + "\n"


# --- weighted matrices -------------------------------------------------------

@dataclass(frozen=True)
class WeightedView:
    """Matrices derived from (graph, Perron weights, partition).

    D:       m x m diagonal of cell norms ‖rho(V_i)‖ = sqrt(sum nu_u^2).
    S_tilde: n x m, nu_u in column j when u is in cell j.
    S_bar:   S_tilde * D^-1, orthonormal columns.
    B_tilde: S_tilde^T A S_tilde (intra-cell edges counted twice).
    B_bar:   D^-1 B_tilde D^-1, the condensed adjacency matrix.
    X:       S_bar S_bar^T, the orthogonal projector onto cell space.
    """

    D: np.ndarray
    S_tilde: np.ndarray
    S_bar: np.ndarray
    B_tilde: np.ndarray
    B_bar: np.ndarray
    X: np.ndarray


def build_weighted_view(graph: Graph, nu: np.ndarray, p: Partition) -> WeightedView:
    n = graph.n
    nu = np.asarray(nu, dtype=float)
    if nu.shape != (n,):
        raise DimensionMismatch(f"nu must have length {n}, got {nu.shape}")
    if p.n != n:
        raise GroundSetMismatch(f"partition over {p.n} vertices, graph has {n}")
    m = p.m
    s_tilde = np.zeros((n, m))
    s_tilde[np.arange(n), p.cell_array] = nu
    norms = np.sqrt((s_tilde ** 2).sum(axis=0))
    d = np.diag(norms)
    s_bar = s_tilde / norms[np.newaxis, :]
    a = graph.adjacency_matrix()
    b_tilde = s_tilde.T @ a @ s_tilde
    b_bar = b_tilde / np.outer(norms, norms)
    x = s_bar @ s_bar.T
    for arr in (d, s_tilde, s_bar, b_tilde, b_bar, x):
        arr.setflags(write=False)
    return WeightedView(D=d, S_tilde=s_tilde, S_bar=s_bar,
                        B_tilde=b_tilde, B_bar=b_bar, X=x)

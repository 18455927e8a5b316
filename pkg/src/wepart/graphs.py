"""Simple undirected graphs with graph6 and edge-list input/output.

Vertices are 1-based everywhere in the public API.  Graphs are immutable
once constructed; derived representations (adjacency matrix, CSR arrays)
are cached on first use and marked read-only.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DuplicateEdge,
    EmptySet,
    MalformedEdgeList,
    MalformedGraph6,
    SelfLoop,
    TooLarge,
    VertexOutOfRange,
)

# Graphs larger than this are rejected by the parsers.
MAX_VERTICES = 2 ** 16


class Graph:
    """Undirected simple graph on vertices 1..n."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 _validated: bool = False):
        if n < 1:
            raise EmptySet("graph must have at least one vertex")
        if n > MAX_VERTICES:
            raise TooLarge(f"graph on {n} vertices exceeds cap {MAX_VERTICES}")
        self.n = n
        if _validated:
            pairs = sorted(edges)
        else:
            pairs = self._validate(n, edges)
        self._edges: tuple[tuple[int, int], ...] = tuple(pairs)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self._edges:
            adj[u - 1].append(v)
            adj[v - 1].append(u)
        self._adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(nbrs)) for nbrs in adj)

    @staticmethod
    def _validate(n: int, edges: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 1..{n}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DuplicateEdge(f"edge ({key[0]}, {key[1]}) repeated")
            seen.add(key)
        return sorted(seen)

    # --- accessors ---------------------------------------------------------

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted (u, v) pairs with u < v."""
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def neighbors(self, u: int) -> tuple[int, ...]:
        self._check_vertex(u)
        return self._adj[u - 1]

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._neighbor_sets[u - 1]

    def _check_vertex(self, u: int) -> None:
        if not (1 <= u <= self.n):
            raise VertexOutOfRange(f"vertex {u} outside 1..{self.n}")

    @cached_property
    def _neighbor_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(nbrs) for nbrs in self._adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self._adj)

    def adjacency_matrix(self) -> np.ndarray:
        """Dense float64 adjacency matrix (read-only, cached)."""
        return self._dense

    @cached_property
    def _dense(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self._edges:
            a[u - 1, v - 1] = 1.0
            a[v - 1, u - 1] = 1.0
        a.setflags(write=False)
        return a

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """(indptr, indices) int32 arrays over 0-based vertices."""
        indptr = np.zeros(self.n + 1, dtype=np.int32)
        for i, nbrs in enumerate(self._adj):
            indptr[i + 1] = indptr[i] + len(nbrs)
        indices = np.empty(indptr[-1], dtype=np.int32)
        pos = 0
        for nbrs in self._adj:
            for v in nbrs:
                indices[pos] = v - 1
                pos += 1
        indptr.setflags(write=False)
        indices.setflags(write=False)
        return indptr, indices

    # --- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# --- graph6 ----------------------------------------------------------------

def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 record (no header line, no trailing junk)."""
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise MalformedGraph6("non-ASCII byte in graph6 record") from exc
    else:
        data = bytes(text)
    data = data.rstrip(b"\r\n")
    if not data:
        raise MalformedGraph6("empty record")
    for b in data:
        if not (63 <= b <= 126):
            raise MalformedGraph6(f"byte {b} outside graph6 range 63..126")
    n, body = _read_graph6_size(data)
    if n > MAX_VERTICES:
        raise TooLarge(f"graph6 record declares n={n} > {MAX_VERTICES}")
    if n == 0:
        raise EmptySet("graph6 record declares an empty graph")
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise MalformedGraph6(
            f"payload has {len(body)} bytes, expected {expect} for n={n}")
    edges = []
    i, j = 0, 1
    consumed = 0
    for b in body:
        val = b - 63
        for shift in (5, 4, 3, 2, 1, 0):
            bit = (val >> shift) & 1
            if consumed < nbits:
                if bit:
                    edges.append((i + 1, j + 1))
                i += 1
                if i == j:
                    i, j = 0, j + 1
                consumed += 1
            elif bit:
                raise MalformedGraph6("nonzero padding bits")
    return Graph(n, edges, _validated=True)


def _read_graph6_size(data: bytes) -> tuple[int, bytes]:
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedGraph6("truncated 8-byte size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, data[8:]
    if len(data) < 4:
        raise MalformedGraph6("truncated 4-byte size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, data[4:]


def emit_graph6(graph: Graph) -> str:
    """Canonical graph6 encoding of the graph (vertex order preserved)."""
    n = graph.n
    if n > MAX_VERTICES:
        raise TooLarge(f"cannot encode n={n} > {MAX_VERTICES}")
    out = bytearray()
    if n <= 62:
        out.append(n + 63)
    else:
        out.append(126)
        out.extend(((n >> shift) & 63) + 63 for shift in (12, 6, 0))
    adj = graph._neighbor_sets
    acc = 0
    nacc = 0
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | (1 if (i + 1) in col else 0)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc, nacc = 0, 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return out.decode("ascii")


# --- edge lists ------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" header plus m "u v" lines format."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise MalformedEdgeList("empty input")
    head = lines[0].split()
    if len(head) != 2:
        raise MalformedEdgeList(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise MalformedEdgeList(f"header must be 'n m', got {lines[0]!r}") from exc
    if n < 1:
        raise EmptySet("graph must have at least one vertex")
    if n > MAX_VERTICES:
        raise TooLarge(f"edge list declares n={n} > {MAX_VERTICES}")
    if m < 0:
        raise MalformedEdgeList(f"negative edge count {m}")
    if len(lines) - 1 != m:
        raise MalformedEdgeList(
            f"header promises {m} edges, found {len(lines) - 1} lines")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise MalformedEdgeList(f"edge line must be 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise MalformedEdgeList(f"edge line must be 'u v', got {ln!r}") from exc
        edges.append((u, v))
    return Graph(n, edges)


def emit_edge_list(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


# --- operations ------------------------------------------------------------

def is_connected(graph: Graph) -> bool:
    """True iff every vertex is reachable from vertex 1."""
    n = graph.n
    seen = [False] * (n + 1)
    seen[1] = True
    stack = [1]
    count = 1
    while stack:
        u = stack.pop()
        for v in graph.neighbors(u):
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == n


def complement(graph: Graph) -> Graph:
    n = graph.n
    sets = graph._neighbor_sets
    edges = [(u, v) for u in range(1, n) for v in range(u + 1, n + 1)
             if v not in sets[u - 1]]
    return Graph(n, edges, _validated=True)


def disjoint_union(g: Graph, h: Graph) -> tuple[Graph, int]:
    """Union with h's vertices shifted up by g.n; returns (graph, offset)."""
    offset = g.n
    edges = list(g.edges())
    edges.extend((u + offset, v + offset) for u, v in h.edges())
    return Graph(g.n + h.n, edges, _validated=True), offset


def induced_subgraph(graph: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on the given vertex set, relabeled 1..k in sorted id order."""
    vs = sorted(set(vertices))
    if not vs:
        raise EmptySet("induced subgraph needs at least one vertex")
    for u in vs:
        graph._check_vertex(u)
    relabel = {u: i + 1 for i, u in enumerate(vs)}
    keep = set(vs)
    edges = [(relabel[u], relabel[v]) for u, v in graph.edges()
             if u in keep and v in keep]
    return Graph(len(vs), edges, _validated=True)

"""Vertex permutations as 1-based image tuples: p[i] is the image of i+1."""

from __future__ import annotations

from typing import Sequence

from .errors import NotPermutation
from .graphs import Graph


def check_permutation(p: Sequence[int], n: int) -> tuple[int, ...]:
    t = tuple(p)
    if len(t) != n or sorted(t) != list(range(1, n + 1)):
        raise NotPermutation(f"not a permutation of 1..{n}: {t}")
    return t


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """(p o q)(x) = p(q(x)): q applied first."""
    return tuple(p[q[i] - 1] for i in range(len(q)))


def inverse(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, img in enumerate(p, start=1):
        inv[img - 1] = i
    return tuple(inv)


def power(p: Sequence[int], k: int) -> tuple[int, ...]:
    if k < 0:
        p, k = inverse(p), -k
    result = identity(len(p))
    for _ in range(k):
        result = compose(result, p)
    return result


def order(p: Sequence[int]) -> int:
    """Order of the permutation, by repeated composition."""
    ident = identity(len(p))
    current = tuple(p)
    k = 1
    while current != ident:
        current = compose(current, p)
        k += 1
    return k


def is_involution(p: Sequence[int]) -> bool:
    return all(p[p[i] - 1] == i + 1 for i in range(len(p)))


def is_fixed_point_free(p: Sequence[int]) -> bool:
    return all(p[i] != i + 1 for i in range(len(p)))


def is_automorphism(graph: Graph, p: Sequence[int]) -> bool:
    """True iff the permutation preserves adjacency."""
    g = check_permutation(p, graph.n)
    return all(graph.has_edge(g[u - 1], g[v - 1]) for u, v in graph.edges())


def format_cycles(p: Sequence[int]) -> str:
    """Cycle notation, e.g. "(1 4)(2 3)"; identity prints "()"."""
    n = len(p)
    seen = [False] * (n + 1)
    out = []
    for start in range(1, n + 1):
        if seen[start] or p[start - 1] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        v = p[start - 1]
        while v != start:
            cycle.append(v)
            seen[v] = True
            v = p[v - 1]
        out.append("(" + " ".join(map(str, cycle)) + ")")
    return "".join(out) if out else "()"

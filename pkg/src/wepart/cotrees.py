"""Cotrees: canonical decomposition trees of cographs.

A cograph decomposes recursively: a single vertex is a leaf; a disconnected
cograph is a 0-node over the cotrees of its components; a cograph with
disconnected complement is a 1-node over the cotrees of the co-components.
Labels alternate on root-leaf paths automatically (a component is connected,
a co-component has connected complement), every internal node has at least
two children, and two vertices are adjacent iff their least common ancestor
is a 1-node.

Canonical codes: a leaf's code is "·"; an internal node's code is
"label(child codes, sorted, space-separated)".  Children are stored sorted
by code, so the root code is a canonical term for the whole graph, printed
as-is by the CLI.  Codes are interned to small integers per tree so the
traversal algorithms compare and group in O(1).

Orbits (the automorphism-group orbits of the tree): the root is alone in
its orbit; two nodes share an orbit iff their parents do and their codes
are equal.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Iterator, Optional

from .errors import (
    BadC,
    BadN,
    NoSuchAutomorphism,
    NotCograph,
    OddOrder,
    TooLarge,
    WepartError,
)
from .graphs import Graph
from .partitions import Partition
from .perms import identity

LEAF_CODE = "·"

# enumerate_connected_cographs guard: the count roughly triples per vertex
# (7068 classes at n = 12).
ENUMERATION_MAX_N = 12


class CotreeNode:
    __slots__ = ("label", "children", "vertex", "code", "code_id", "orbit",
                 "depth")

    def __init__(self, label: Optional[int], children: tuple,
                 vertex: Optional[int]):
        self.label = label
        self.vertex = vertex
        if vertex is not None:
            self.code = LEAF_CODE
            self.children = ()
        else:
            self.children = tuple(sorted(children, key=lambda c: c.code))
            self.code = f"{label}({' '.join(c.code for c in self.children)})"
        self.code_id = -1
        self.orbit = -1
        self.depth = -1

    @property
    def is_leaf(self) -> bool:
        return self.vertex is not None


def leaf(vertex: int) -> CotreeNode:
    return CotreeNode(None, (), vertex)


def internal(label: int, children) -> CotreeNode:
    kids = tuple(children)
    if label not in (0, 1):
        raise WepartError(f"internal node label must be 0 or 1, got {label}")
    if len(kids) < 2:
        raise WepartError("internal cotree node needs at least two children")
    return CotreeNode(label, kids, None)


class Cotree:
    """Rooted cotree with codes, interned code ids, depths, and orbits."""

    def __init__(self, root: CotreeNode):
        self.root = root
        nodes: list[CotreeNode] = []
        queue = [root]
        root.depth = 0
        intern: dict[str, int] = {}
        orbit_keys: dict[tuple[int, int], int] = {}
        leaves: list[CotreeNode] = []
        while queue:
            node = queue.pop(0)
            nodes.append(node)
            node.code_id = intern.setdefault(node.code, len(intern))
            if node is root:
                node.orbit = 0
                orbit_keys[(-1, node.code_id)] = 0
            if node.is_leaf:
                leaves.append(node)
            for child in node.children:
                child.depth = node.depth + 1
                queue.append(child)
        # second pass: orbits need parents resolved in BFS order
        for node in nodes:
            for child in node.children:
                key = (node.orbit, child.code_id)
                child.orbit = orbit_keys.setdefault(key, len(orbit_keys))
        self.nodes = nodes
        self.leaves = leaves
        self.n = len(leaves)
        ids = sorted(l.vertex for l in leaves)
        if ids != list(range(1, self.n + 1)):
            raise WepartError(f"leaf vertex ids must be 1..{self.n}, got {ids}")
        for node in nodes:
            if not node.is_leaf:
                for child in node.children:
                    if not child.is_leaf and child.label == node.label:
                        raise WepartError("cotree labels must alternate")

    def term(self) -> str:
        """Canonical parenthesized term, e.g. 1(0(· ·) ·)."""
        return self.root.code


def canonical_codes(tree: Cotree) -> Cotree:
    """Codes are computed at construction; returns the tree unchanged."""
    return tree


def j_numbers(tree: Cotree) -> Cotree:
    """Orbit ids are computed at construction; returns the tree unchanged."""
    return tree


# --- recognition -------------------------------------------------------------

def build_cotree(graph: Graph) -> Cotree:
    """Canonical cotree of a cograph; NotCograph when an induced P4 exists."""
    adj = [set()] + [set(graph.neighbors(u)) for u in range(1, graph.n + 1)]

    def decompose(sub: list[int]) -> CotreeNode:
        if len(sub) == 1:
            return leaf(sub[0])
        comps = _components(adj, sub)
        if len(comps) > 1:
            return internal(0, [decompose(c) for c in comps])
        cocomps = _co_components(adj, sub)
        if len(cocomps) > 1:
            return internal(1, [decompose(c) for c in cocomps])
        raise NotCograph(
            f"graph and complement both connected on {len(sub)} vertices")

    return Cotree(decompose(list(range(1, graph.n + 1))))


def _components(adj: list[set], sub: list[int]) -> list[list[int]]:
    keep = set(sub)
    unseen = set(sub)
    comps = []
    for start in sub:
        if start not in unseen:
            continue
        unseen.discard(start)
        comp = [start]
        stack = [start]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v in unseen:
                    unseen.discard(v)
                    comp.append(v)
                    stack.append(v)
        comps.append(sorted(comp))
    assert keep == set().union(*comps) if comps else not keep
    return comps


def _co_components(adj: list[set], sub: list[int]) -> list[list[int]]:
    """Components of the complement, via the unvisited-set traversal trick."""
    unseen = set(sub)
    comps = []
    while unseen:
        start = unseen.pop()
        comp = [start]
        frontier = [start]
        while frontier:
            u = frontier.pop()
            reach = unseen - adj[u]
            unseen -= reach
            comp.extend(reach)
            frontier.extend(reach)
        comps.append(sorted(comp))
    return comps


def reconstruct(tree: Cotree) -> Graph:
    """The unique cograph whose cotree this is: u~v iff their LCA is a 1."""
    edges: list[tuple[int, int]] = []

    def leaves_below(node: CotreeNode) -> list[int]:
        if node.is_leaf:
            return [node.vertex]
        groups = [leaves_below(c) for c in node.children]
        if node.label == 1:
            for i in range(len(groups)):
                for j in range(i + 1, len(groups)):
                    edges.extend((u, v) for u in groups[i] for v in groups[j])
        merged = []
        for g in groups:
            merged.extend(g)
        return merged

    leaves_below(tree.root)
    return Graph(tree.n, ((min(u, v), max(u, v)) for u, v in edges),
                 _validated=True)


# --- fixed-point-free involutions on leaves ----------------------------------

def has_nice_automorphism(tree: Cotree) -> bool:
    """Whether the leaves admit a fixed-point-free involutionary tree map.

    Walks the tree grouping each node's children by code: an even class can
    always be paired internally; an odd class forces its one unpaired member
    to admit the property itself, and an unpaired leaf is fatal.  A
    single-leaf tree has no fixed-point-free map at all.
    """
    if tree.n == 1:
        return False
    stack = [tree.root]
    while stack:
        node = stack.pop()
        for members in _code_classes(node):
            if len(members) % 2 == 1:
                odd = members[-1]
                if odd.is_leaf:
                    return False
                stack.append(odd)
    return True


def _code_classes(node: CotreeNode) -> list[list[CotreeNode]]:
    classes: dict[int, list[CotreeNode]] = {}
    for child in node.children:
        classes.setdefault(child.code_id, []).append(child)
    return list(classes.values())


def nice_automorphism(tree: Cotree) -> tuple[int, ...]:
    """A fixed-point-free involution of the vertices respecting the tree.

    Pairs equal-code siblings two by two (mapping their leaves through the
    canonical child order) and descends into the one unpaired subtree of
    every odd class.  By construction the result is an automorphism of
    reconstruct(tree).
    """
    if tree.n == 1:
        raise NoSuchAutomorphism("a single leaf cannot move")
    sigma = [0] * (tree.n + 1)
    stack = [tree.root]
    pairs: list[tuple[CotreeNode, CotreeNode]] = []
    while stack:
        node = stack.pop()
        for members in _code_classes(node):
            for a, b in zip(members[0::2], members[1::2]):
                pairs.append((a, b))
            if len(members) % 2 == 1:
                odd = members[-1]
                if odd.is_leaf:
                    raise NoSuchAutomorphism(
                        "an odd class of leaves has an unpaired leaf")
                stack.append(odd)
    for a, b in pairs:
        _map_leaves(a, b, sigma)
    return tuple(sigma[1:])


def _map_leaves(a: CotreeNode, b: CotreeNode, sigma: list[int]) -> None:
    """Map the leaves of two equal-code subtrees onto each other, both ways."""
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if x.is_leaf:
            sigma[x.vertex] = y.vertex
            sigma[y.vertex] = x.vertex
        else:
            # children sorted by code on both sides, so zipping aligns codes
            stack.extend(zip(x.children, y.children))


def two_homogeneous_partition(graph: Graph) -> Optional[Partition]:
    """Partition into n/2 orbit pairs of a fixed-point-free involution.

    Returns None when the cotree search fails; the result, when present, is
    an equitable (hence weight-equitable) partition with cells of size 2.
    """
    if graph.n % 2 == 1:
        raise OddOrder(f"n = {graph.n} is odd; no 2-homogeneous partition")
    tree = build_cotree(graph)
    if not has_nice_automorphism(tree):
        return None
    gamma = nice_automorphism(tree)
    return pairs_partition(gamma)


def pairs_partition(gamma: tuple[int, ...]) -> Partition:
    """Cells {u, gamma(u)} of a fixed-point-free involution."""
    n = len(gamma)
    assignment = [-1] * n
    nxt = 0
    for u in range(1, n + 1):
        if assignment[u - 1] == -1:
            assignment[u - 1] = nxt
            assignment[gamma[u - 1] - 1] = nxt
            nxt += 1
    return Partition(assignment)


def c_homogeneous_search(tree: Cotree, c: int) -> bool:
    """Generalization of the pairing search to cells of size c.

    Every child class must split into groups of c identical subtrees; a
    remainder is tolerated only when it is a single internal subtree, which
    must then admit the property itself.  c = 2 coincides with
    has_nice_automorphism.  May return false negatives for equitability:
    a graph can have a c-homogeneous equitable partition without the cyclic
    cell symmetry this searches for.
    """
    if c < 2:
        raise BadC(f"c must be at least 2, got {c}")
    if tree.n == 1:
        return False
    stack = [tree.root]
    while stack:
        node = stack.pop()
        for members in _code_classes(node):
            r = len(members) % c
            if r == 0:
                continue
            if r > 1 or members[-1].is_leaf:
                return False
            stack.append(members[-1])
    return True


# --- automorphism generators --------------------------------------------------

def aut_generators(tree: Cotree) -> list[tuple[int, ...]]:
    """Generators of Aut(reconstruct(tree)): adjacent swaps of equal subtrees.

    Automorphisms of a cograph are exactly the label-preserving cotree maps,
    and those are generated by transposing equal-code sibling subtrees.
    """
    gens: list[tuple[int, ...]] = []
    for node in tree.nodes:
        for members in _code_classes(node):
            for a, b in zip(members, members[1:]):
                sigma = list(identity(tree.n))
                swap = [0] * (tree.n + 1)
                _map_leaves(a, b, swap)
                for v in range(1, tree.n + 1):
                    if swap[v]:
                        sigma[v - 1] = swap[v]
                gens.append(tuple(sigma))
    return gens


# --- generation ----------------------------------------------------------------

def random_cotree(n: int, seed) -> Cotree:
    """Random connected cograph as a cotree, deterministic under the seed.

    Recursive random composition: each internal node splits its leaf count
    into k parts, k uniform in {2..min(4, parts available)}; labels
    alternate with the root labeled 1 (so the graph is connected for
    n >= 2).  Leaves are numbered in generation order.  No uniformity claim
    over isomorphism classes.
    """
    if n < 1:
        raise BadN(f"n must be positive, got {n}")
    rng = random.Random(seed)
    counter = [0]

    def gen(size: int, label: int) -> CotreeNode:
        if size == 1:
            counter[0] += 1
            return leaf(counter[0])
        k = rng.randint(2, min(4, size))
        cuts = sorted(rng.sample(range(1, size), k - 1))
        bounds = [0] + cuts + [size]
        parts = [bounds[i + 1] - bounds[i] for i in range(k)]
        return internal(label, [gen(p, 1 - label) for p in parts])

    return Cotree(gen(n, 1))


# --- exhaustive enumeration -----------------------------------------------------

# A template is LEAF_CODE for a leaf or (label, (child templates...)); child
# templates are kept sorted by their code strings, giving one representative
# per isomorphism class.

def _template_code(t) -> str:
    if t == LEAF_CODE:
        return LEAF_CODE
    label, children = t
    return f"{label}({' '.join(_template_code(c) for c in children)})"


@lru_cache(maxsize=None)
def _templates(size: int, label: int) -> tuple:
    """All canonical cotree shapes on `size` leaves with root label `label`."""
    if size == 1:
        return (LEAF_CODE,)
    results = []
    for parts in _partitions_desc(size):
        if len(parts) < 2:
            continue
        by_size: dict[int, int] = {}
        for p in parts:
            by_size[p] = by_size.get(p, 0) + 1
        pools = []
        for p, count in sorted(by_size.items()):
            choices = list(combinations_with_replacement(
                _templates(p, 1 - label), count))
            pools.append(choices)
        for combo in product(*pools):
            children = [t for group in combo for t in group]
            children.sort(key=_template_code)
            results.append((label, tuple(children)))
    return tuple(results)


def _partitions_desc(s: int) -> Iterator[tuple[int, ...]]:
    """Integer partitions of s in nonincreasing part order."""

    def rec(remaining: int, cap: int, acc: list[int]):
        if remaining == 0:
            yield tuple(acc)
            return
        for part in range(min(cap, remaining), 0, -1):
            acc.append(part)
            yield from rec(remaining - part, part, acc)
            acc.pop()

    yield from rec(s, s, [])


def _instantiate(template) -> Cotree:
    counter = [0]

    def build(t) -> CotreeNode:
        if t == LEAF_CODE:
            counter[0] += 1
            return leaf(counter[0])
        label, children = t
        return internal(label, [build(c) for c in children])

    return Cotree(build(template))


def enumerate_connected_cotrees(n: int, max_n: int = ENUMERATION_MAX_N) -> Iterator[Cotree]:
    """Canonical cotrees of all connected cographs on n vertices."""
    if n < 1:
        raise BadN(f"n must be positive, got {n}")
    if n > max_n:
        raise TooLarge(f"enumeration capped at n = {max_n}, requested {n}")
    if n == 1:
        yield Cotree(leaf(1))
        return
    for template in _templates(n, 1):
        yield _instantiate(template)


def enumerate_connected_cographs(n: int, max_n: int = ENUMERATION_MAX_N) -> Iterator[Graph]:
    """One representative per isomorphism class of connected cographs on n."""
    for tree in enumerate_connected_cotrees(n, max_n):
        yield reconstruct(tree)

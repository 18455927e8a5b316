"""Tests for cotree construction, canonical terms, enumeration, the pairing
search for 2-homogeneous partitions, and its size-c generalization."""

from __future__ import annotations

import pytest

from wepart import (
    BadC,
    BadN,
    Graph,
    NoSuchAutomorphism,
    NotCograph,
    OddOrder,
    TooLarge,
    all_automorphisms,
    aut_generators,
    build_cotree,
    c_homogeneous_search,
    complement,
    enumerate_connected_cographs,
    enumerate_connected_cotrees,
    find_fixed_point_free_involution,
    has_nice_automorphism,
    is_automorphism,
    is_equitable,
    is_fixed_point_free,
    is_involution,
    nice_automorphism,
    pairs_partition,
    random_cotree,
    reconstruct,
    two_homogeneous_partition,
)

from conftest import c4, complete, k2, k3, p4, star4

# Connected cographs up to isomorphism by vertex count (OEIS A000669).
CONNECTED_COUNTS = [1, 1, 2, 5, 12, 33, 90, 261, 766, 2312]


class TestBuild:
    def test_terms_of_named_graphs(self):
        assert build_cotree(Graph(1, [])).term() == "·"
        assert build_cotree(k2()).term() == "1(· ·)"
        assert build_cotree(k3()).term() == "1(· · ·)"
        assert build_cotree(star4()).term() == "1(0(· · ·) ·)"
        assert build_cotree(c4()).term() == "1(0(· ·) 0(· ·))"

    def test_term_is_isomorphism_invariant(self):
        # Relabeled C4s share the term.
        a = Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
        b = Graph(4, [(1, 3), (3, 2), (2, 4), (1, 4)])
        assert build_cotree(a).term() == build_cotree(b).term()

    def test_path_is_not_a_cograph(self):
        with pytest.raises(NotCograph):
            build_cotree(p4())
        with pytest.raises(NotCograph):
            build_cotree(Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]))

    def test_complement_flips_root_label(self):
        # The complement of a connected cograph with a connected complement
        # swaps labels level by level; spot-check via P4-free 5-vertex case.
        g = Graph(5, [(1, 2), (1, 3), (2, 3), (4, 5), (1, 4), (1, 5),
                      (2, 4), (2, 5), (3, 4), (3, 5)])
        t = build_cotree(g)
        assert t.term().startswith("1(")

    def test_round_trip_graph_to_tree(self):
        for seed in range(20):
            t = random_cotree(12, seed)
            g = reconstruct(t)
            assert build_cotree(g).term() == t.term()

    def test_round_trip_tree_to_graph(self):
        for n in range(1, 8):
            for t in enumerate_connected_cotrees(n):
                g = reconstruct(t)
                assert g.n == n
                assert build_cotree(g).term() == t.term()

    def test_reconstruct_is_connected(self):
        from wepart import is_connected
        for n in range(2, 8):
            for t in enumerate_connected_cotrees(n):
                assert is_connected(reconstruct(t))


class TestEnumeration:
    def test_counts_match_reference(self):
        for n, want in enumerate(CONNECTED_COUNTS, start=1):
            assert len(list(enumerate_connected_cotrees(n))) == want

    def test_terms_are_distinct(self):
        for n in range(1, 8):
            terms = [t.term() for t in enumerate_connected_cotrees(n)]
            assert len(terms) == len(set(terms))

    def test_graphs_are_pairwise_non_isomorphic(self):
        # Distinct canonical terms imply distinct graphs; verify against
        # an independent isomorphism test on a small slice.
        import networkx as nx
        graphs = [reconstruct(t) for t in enumerate_connected_cotrees(5)]
        nxg = [nx.Graph(list(g.edges())) for g in graphs]
        for i in range(len(nxg)):
            for j in range(i + 1, len(nxg)):
                assert not nx.is_isomorphic(nxg[i], nxg[j])

    def test_bounds(self):
        with pytest.raises(BadN):
            list(enumerate_connected_cotrees(0))
        with pytest.raises(TooLarge):
            list(enumerate_connected_cotrees(13))

    def test_cograph_iterator_matches(self):
        graphs = list(enumerate_connected_cographs(6))
        assert len(graphs) == 33
        assert all(g.n == 6 for g in graphs)


class TestPairing:
    def test_named_instances(self):
        assert has_nice_automorphism(build_cotree(c4()))
        assert has_nice_automorphism(build_cotree(k2()))
        assert not has_nice_automorphism(build_cotree(k3()))
        assert not has_nice_automorphism(build_cotree(star4()))
        assert not has_nice_automorphism(build_cotree(Graph(1, [])))

    def test_c4_pairing(self):
        gamma = nice_automorphism(build_cotree(c4()))
        assert gamma == (2, 1, 4, 3)
        assert two_homogeneous_partition(c4()).cells == ((1, 2), (3, 4))

    def test_no_automorphism_raises(self):
        with pytest.raises(NoSuchAutomorphism):
            nice_automorphism(build_cotree(star4()))

    def test_two_homogeneous_none_when_absent(self):
        assert two_homogeneous_partition(star4()) is None

    def test_odd_order_rejected(self):
        with pytest.raises(OddOrder):
            two_homogeneous_partition(k3())

    def test_pairing_output_is_valid(self):
        # Wherever the search succeeds, the returned permutation is a
        # fixed-point-free involutive automorphism and its orbit partition
        # is equitable with all cells of size 2.
        for n in (2, 4, 6, 8):
            for t in enumerate_connected_cotrees(n):
                if not has_nice_automorphism(t):
                    continue
                g = reconstruct(t)
                gamma = nice_automorphism(t)
                assert is_involution(gamma)
                assert is_fixed_point_free(gamma)
                assert is_automorphism(g, gamma)
                p = pairs_partition(gamma)
                assert all(len(c) == 2 for c in p.cells)
                assert is_equitable(g, p)

    def test_search_is_exact_small(self):
        # The structural search agrees with brute-force existence of a
        # fixed-point-free involutive automorphism on all connected
        # cographs with up to 8 vertices.
        for n in (2, 4, 6, 8):
            for t in enumerate_connected_cotrees(n):
                g = reconstruct(t)
                oracle = find_fixed_point_free_involution(g) is not None
                assert has_nice_automorphism(t) == oracle, t.term()


class TestCHomogeneous:
    def test_known_values(self):
        assert c_homogeneous_search(build_cotree(c4()), 2)
        assert not c_homogeneous_search(build_cotree(c4()), 3)
        assert not c_homogeneous_search(build_cotree(c4()), 4)
        assert c_homogeneous_search(build_cotree(complete(4)), 2)
        assert c_homogeneous_search(build_cotree(k3()), 3)
        assert not c_homogeneous_search(build_cotree(star4()), 2)

    def test_matches_pairing_at_two(self):
        for n in range(2, 8):
            for t in enumerate_connected_cotrees(n):
                assert c_homogeneous_search(t, 2) == has_nice_automorphism(t)

    def test_success_yields_equitable_cells(self):
        # A positive search at c = 3 must be backed by an actual
        # 3-homogeneous equitable partition; confirm by brute force.
        from wepart import all_partitions
        found = 0
        for t in enumerate_connected_cotrees(6):
            if not c_homogeneous_search(t, 3):
                continue
            found += 1
            g = reconstruct(t)
            ok = any(all(len(c) == 3 for c in p.cells) and is_equitable(g, p)
                     for p in all_partitions(6))
            assert ok, t.term()
        assert found > 0

    def test_bad_c(self):
        with pytest.raises(BadC):
            c_homogeneous_search(build_cotree(c4()), 1)


class TestAutomorphisms:
    def test_generators_are_automorphisms(self):
        for n in range(2, 7):
            for t in enumerate_connected_cotrees(n):
                g = reconstruct(t)
                gens = aut_generators(t)
                for sigma in gens:
                    assert is_automorphism(g, sigma)
                    assert is_involution(sigma)

    def test_generators_generate_full_group(self):
        # Closure of the generators matches the brute-force group.
        for n in range(2, 7):
            for t in enumerate_connected_cotrees(n):
                g = reconstruct(t)
                target = set(all_automorphisms(g))
                from wepart import compose, identity
                group = {identity(n)}
                frontier = [identity(n)]
                gens = aut_generators(t)
                while frontier:
                    cur = frontier.pop()
                    for s in gens:
                        nxt = compose(s, cur)
                        if nxt not in group:
                            group.add(nxt)
                            frontier.append(nxt)
                assert group == target, t.term()

    def test_orbits_match_automorphism_orbits(self):
        # Leaves carry orbit ids; two vertices share an id exactly when an
        # automorphism maps one to the other.
        for n in range(2, 7):
            for t in enumerate_connected_cotrees(n):
                g = reconstruct(t)
                autos = all_automorphisms(g)
                orbit_id = {}
                for node in t.nodes:
                    if node.vertex is not None:
                        orbit_id[node.vertex] = node.orbit
                for u in range(1, n + 1):
                    for v in range(1, n + 1):
                        reachable = any(sigma[u - 1] == v for sigma in autos)
                        assert (orbit_id[u] == orbit_id[v]) == reachable


class TestRandom:
    def test_deterministic(self):
        for seed in (0, 1, 7, 123):
            assert (random_cotree(15, seed).term()
                    == random_cotree(15, seed).term())

    def test_varies_with_seed(self):
        terms = {random_cotree(15, s).term() for s in range(10)}
        assert len(terms) > 1

    def test_leaf_set_and_connectivity(self):
        from wepart import is_connected
        for seed in range(10):
            t = random_cotree(9, seed)
            g = reconstruct(t)
            assert g.n == 9
            assert is_connected(g)
            assert build_cotree(g).term() == t.term()

    def test_bad_n(self):
        with pytest.raises(BadN):
            random_cotree(0, 1)

"""Tests for the brute-force oracles: partition enumeration, exhaustive
weight-equitable search, automorphism groups, involution pairing, and the
maximal weight-equitable refinement."""

from __future__ import annotations

import math

import pytest

from wepart import (
    EnumerationBudget,
    Graph,
    HasFixedPoint,
    NotConnected,
    NotInvolution,
    NotTwoHomogeneous,
    OddOrder,
    TooLarge,
    all_automorphisms,
    all_partitions,
    bell_number,
    discrete_partition,
    enumerate_connected_cographs,
    enumerate_weight_equitable,
    find_fixed_point_free_involution,
    identity,
    involution_to_partition,
    is_automorphism,
    is_equitable,
    is_fixed_point_free,
    is_involution,
    is_weight_equitable,
    join,
    make_partition,
    max_we_refinement,
    partition_to_involution,
    perron,
    refines,
    trivial_partition,
)

from conftest import TOL, c4, complete, k2, k3, p4, star4, tree6


class TestPartitionEnumeration:
    def test_bell_numbers(self):
        assert [bell_number(n) for n in range(9)] == [
            1, 1, 2, 5, 15, 52, 203, 877, 4140]

    def test_counts_match_bell(self):
        for n in range(1, 9):
            assert sum(1 for _ in all_partitions(n)) == bell_number(n)

    def test_all_distinct_and_canonical(self):
        seen = set()
        for p in all_partitions(5):
            assert p.n == 5
            assert p not in seen
            seen.add(p)
            # canonical: cells ordered by smallest member
            firsts = [c[0] for c in p.cells]
            assert firsts == sorted(firsts)

    def test_extremes_present(self):
        parts = list(all_partitions(4))
        assert trivial_partition(4) in parts
        assert discrete_partition(4) in parts

    def test_budget_max_n(self):
        with pytest.raises(TooLarge):
            list(all_partitions(6, EnumerationBudget(max_n=5)))

    def test_budget_max_count(self):
        with pytest.raises(TooLarge):
            list(all_partitions(6, EnumerationBudget(max_count=100)))
        assert sum(1 for _ in all_partitions(4,
                   EnumerationBudget(max_count=15))) == 15

    def test_default_cap(self):
        with pytest.raises(TooLarge):
            list(all_partitions(13))


class TestWeightEquitableEnumeration:
    def test_path_has_four(self):
        g = p4()
        found = list(enumerate_weight_equitable(g))
        cells = {p.cells for p in found}
        assert cells == {
            ((1, 2, 3, 4),),
            ((1, 3), (2, 4)),
            ((1, 4), (2, 3)),
            ((1,), (2,), (3,), (4,)),
        }

    def test_triangle_has_all_five(self):
        assert len(list(enumerate_weight_equitable(k3()))) == bell_number(3)

    def test_matches_pointwise_check(self, fig_hex):
        nu = perron(fig_hex).nu
        listed = set(enumerate_weight_equitable(fig_hex))
        for p in all_partitions(6):
            assert (p in listed) == is_weight_equitable(fig_hex, nu, p, TOL)

    def test_requires_connected(self):
        with pytest.raises(NotConnected):
            list(enumerate_weight_equitable(Graph(3, [(1, 2)])))

    def test_join_closure_small(self, atlas):
        # The weight-equitable partitions of a graph are closed under join.
        for n in range(2, 6):
            for g in atlas[n]:
                nu = perron(g).nu
                found = list(enumerate_weight_equitable(g))
                for a in found:
                    for b in found:
                        assert is_weight_equitable(g, nu, join(a, b), TOL)


class TestAutomorphismGroups:
    def test_group_orders(self):
        assert len(all_automorphisms(k3())) == 6
        assert len(all_automorphisms(p4())) == 2
        assert len(all_automorphisms(c4())) == 8
        assert len(all_automorphisms(star4())) == 6
        assert len(all_automorphisms(complete(5))) == 120

    def test_members_are_automorphisms(self, fig_tree):
        autos = all_automorphisms(fig_tree)
        assert identity(6) in autos
        for sigma in autos:
            assert is_automorphism(fig_tree, sigma)

    def test_exhaustive_against_filter(self):
        # The pruned search finds exactly the permutations passing the
        # definition check.
        from itertools import permutations
        g = tree6()
        want = {p for p in permutations(range(1, 7)) if is_automorphism(g, p)}
        assert set(all_automorphisms(g)) == want

    def test_budget(self):
        with pytest.raises(TooLarge):
            all_automorphisms(complete(9))
        with pytest.raises(TooLarge):
            all_automorphisms(c4(), EnumerationBudget(max_count=10))


class TestInvolutions:
    def test_k2(self):
        assert find_fixed_point_free_involution(k2()) == (2, 1)

    def test_c4_finds_one(self):
        gamma = find_fixed_point_free_involution(c4())
        assert gamma is not None
        assert is_involution(gamma) and is_fixed_point_free(gamma)
        assert is_automorphism(c4(), gamma)

    def test_star_has_none(self):
        assert find_fixed_point_free_involution(star4()) is None

    def test_odd_order(self):
        with pytest.raises(OddOrder):
            find_fixed_point_free_involution(k3())

    def test_swap_of_two_homogeneous_equitable_is_automorphism(self, atlas):
        # For any graph, swapping the two vertices of every cell of a
        # 2-homogeneous equitable partition is an automorphism, and orbit
        # partitions of fixed-point-free involutive automorphisms are
        # 2-homogeneous equitable; so existence coincides.  Exhaustive for
        # n in {4, 6}.
        for n in (4, 6):
            for g in atlas[n]:
                has_partition = False
                for p in all_partitions(n):
                    if not all(len(c) == 2 for c in p.cells):
                        continue
                    if not is_equitable(g, p):
                        continue
                    has_partition = True
                    gamma = partition_to_involution(p)
                    assert is_automorphism(g, gamma), (g.edges(), p.cells)
                gamma = find_fixed_point_free_involution(g)
                if gamma is not None:
                    orbit = involution_to_partition(gamma)
                    assert all(len(c) == 2 for c in orbit.cells)
                    assert is_equitable(g, orbit)
                assert has_partition == (gamma is not None)

    def test_swap_property_random_n8(self):
        # Same equivalence on seeded random connected graphs with 8
        # vertices, where no exhaustive atlas is available.
        import random
        rng = random.Random(20260814)
        checked = 0
        while checked < 60:
            n = 8
            edges = [(i, j) for i in range(1, n + 1)
                     for j in range(i + 1, n + 1) if rng.random() < 0.4]
            try:
                g = Graph(n, edges)
            except Exception:
                continue
            from wepart import is_connected
            if not is_connected(g):
                continue
            checked += 1
            gamma = find_fixed_point_free_involution(g)
            found = False
            for p in all_partitions(n):
                if (all(len(c) == 2 for c in p.cells)
                        and is_equitable(g, p)):
                    found = True
                    assert is_automorphism(g, partition_to_involution(p))
                    break
            assert found == (gamma is not None)


class TestPairingBijections:
    def test_round_trip_from_involution(self):
        gamma = (2, 1, 4, 3, 6, 5)
        p = involution_to_partition(gamma)
        assert p.cells == ((1, 2), (3, 4), (5, 6))
        assert partition_to_involution(p) == gamma

    def test_round_trip_from_partition(self):
        p = make_partition(4, [{1, 3}, {2, 4}])
        assert involution_to_partition(partition_to_involution(p)) == p

    def test_rejects_non_involution(self):
        with pytest.raises(NotInvolution):
            involution_to_partition((2, 3, 1))

    def test_rejects_fixed_points(self):
        with pytest.raises(HasFixedPoint):
            involution_to_partition((1, 3, 2, 4))

    def test_rejects_odd_cells(self):
        with pytest.raises(NotTwoHomogeneous):
            partition_to_involution(make_partition(3, [{1, 2}, {3}]))
        with pytest.raises(NotTwoHomogeneous):
            partition_to_involution(trivial_partition(4))


class TestMaxWeRefinement:
    def test_already_we_is_fixed(self):
        g = p4()
        p = make_partition(4, [{1, 4}, {2, 3}])
        assert max_we_refinement(g, p) == p
        assert max_we_refinement(g, trivial_partition(4)) == trivial_partition(4)

    def test_discrete_is_fixed(self):
        g = star4()
        assert max_we_refinement(g, discrete_partition(4)) == discrete_partition(4)

    def test_non_we_input_refines(self):
        # {1,2},{3,4} is not weight-equitable for the path; the maximal
        # weight-equitable refinement drops to singletons.
        g = p4()
        p = make_partition(4, [{1, 2}, {3, 4}])
        out = max_we_refinement(g, p)
        assert out == discrete_partition(4)

    def test_is_coarsest_we_refinement(self, atlas):
        # Output is weight-equitable, refines the input, and is refined by
        # every weight-equitable refinement of the input.
        for n in range(2, 6):
            for g in atlas[n]:
                nu = perron(g).nu
                we = [p for p in all_partitions(n)
                      if is_weight_equitable(g, nu, p, TOL)]
                for p in all_partitions(n):
                    out = max_we_refinement(g, p)
                    assert refines(out, p)
                    assert is_weight_equitable(g, nu, out, TOL)
                    for q in we:
                        if refines(q, p):
                            assert refines(q, out)

    def test_budget(self):
        g = complete(4)
        with pytest.raises(TooLarge):
            max_we_refinement(g, trivial_partition(4),
                              budget=EnumerationBudget(max_count=3))

"""Tests for one-line permutations: group laws, cycle notation, graph action."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wepart import (
    NotPermutation,
    check_permutation,
    compose,
    format_cycles,
    identity,
    inverse,
    is_automorphism,
    is_fixed_point_free,
    is_involution,
    order,
    power,
)

from conftest import c4, k3, p4, star4

perms = st.integers(min_value=1, max_value=7).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
)


class TestBasics:
    def test_identity(self):
        assert identity(4) == (1, 2, 3, 4)
        assert identity(0) == ()

    def test_check_permutation_accepts(self):
        assert check_permutation([2, 1, 3], 3) == (2, 1, 3)

    def test_check_permutation_rejects(self):
        with pytest.raises(NotPermutation):
            check_permutation([1, 1, 2], 3)
        with pytest.raises(NotPermutation):
            check_permutation([1, 2], 3)
        with pytest.raises(NotPermutation):
            check_permutation([0, 1, 2], 3)

    def test_compose_applies_right_first(self):
        # p o q maps x through q, then p.
        p = (2, 3, 1)
        q = (1, 3, 2)
        assert compose(p, q) == (2, 1, 3)

    def test_inverse_example(self):
        assert inverse((2, 3, 1)) == (3, 1, 2)

    def test_power_and_order(self):
        p = (2, 3, 1, 5, 4)  # 3-cycle times transposition: order lcm(3,2)=6
        assert order(p) == 6
        assert power(p, 0) == identity(5)
        assert power(p, 6) == identity(5)
        assert power(p, 2) == compose(p, p)
        assert power(p, -1) == inverse(p)


class TestGroupLaws:
    @given(perms)
    def test_inverse_cancels(self, p):
        p = tuple(p)
        n = len(p)
        assert compose(p, inverse(p)) == identity(n)
        assert compose(inverse(p), p) == identity(n)

    @given(perms)
    def test_identity_neutral(self, p):
        p = tuple(p)
        e = identity(len(p))
        assert compose(p, e) == p
        assert compose(e, p) == p

    @given(perms, st.integers(min_value=-6, max_value=12))
    def test_power_additive(self, p, k):
        p = tuple(p)
        assert compose(power(p, k), p) == power(p, k + 1)

    @given(perms)
    def test_order_annihilates(self, p):
        p = tuple(p)
        m = order(p)
        assert m >= 1
        assert power(p, m) == identity(len(p))
        for d in range(1, m):
            if m % d == 0:
                assert power(p, d) != identity(len(p))

    @settings(max_examples=40)
    @given(st.integers(min_value=1, max_value=6).flatmap(
        lambda n: st.tuples(
            st.permutations(list(range(1, n + 1))),
            st.permutations(list(range(1, n + 1))),
        )
    ))
    def test_inverse_antihomomorphism(self, pq):
        p, q = (tuple(x) for x in pq)
        assert inverse(compose(p, q)) == compose(inverse(q), inverse(p))


class TestCycleNotation:
    def test_examples(self):
        assert format_cycles((4, 3, 2, 1)) == "(1 4)(2 3)"
        assert format_cycles((2, 3, 1)) == "(1 2 3)"
        assert format_cycles((1, 2, 3)) == "()"
        assert format_cycles(()) == "()"

    def test_fixed_points_omitted(self):
        assert format_cycles((1, 3, 2, 4)) == "(2 3)"


class TestPredicates:
    def test_involution(self):
        assert is_involution((2, 1, 4, 3))
        assert is_involution((1, 2))
        assert not is_involution((2, 3, 1))

    def test_fixed_point_free(self):
        assert is_fixed_point_free((2, 1, 4, 3))
        assert not is_fixed_point_free((1, 3, 2))

    def test_automorphism_path(self):
        g = p4()
        assert is_automorphism(g, (4, 3, 2, 1))
        assert is_automorphism(g, identity(4))
        assert not is_automorphism(g, (2, 1, 3, 4))

    def test_automorphism_cycle_and_star(self):
        assert is_automorphism(c4(), (2, 3, 4, 1))
        assert is_automorphism(star4(), (1, 3, 4, 2))
        assert not is_automorphism(star4(), (2, 1, 3, 4))

    def test_automorphism_preserves_we(self):
        # Relabeling by any automorphism maps weight-equitable partitions
        # onto weight-equitable partitions.
        from wepart import all_partitions, apply_automorphism, is_weight_equitable, perron

        g = c4()
        nu = perron(g).nu
        gamma = (2, 3, 4, 1)
        for p in all_partitions(4):
            lhs = is_weight_equitable(g, nu, p)
            rhs = is_weight_equitable(g, nu, apply_automorphism(p, gamma))
            assert lhs == rhs

    def test_random_conjugation_keeps_order(self):
        rng = random.Random(7)
        for _ in range(25):
            n = rng.randint(2, 8)
            p = tuple(rng.sample(range(1, n + 1), n))
            q = tuple(rng.sample(range(1, n + 1), n))
            conj = compose(compose(q, p), inverse(q))
            assert order(conj) == order(p)

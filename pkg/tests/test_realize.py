import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bidegree import (
    BiDegreeSequence,
    DiGraph,
    RestrictedInstance,
    bds_of,
    f_normal_order,
    f_prefix,
    is_bigraphical,
    is_feasible_restricted,
    is_graphical_undirected,
    normal_order,
    realize_greedy,
    validate,
)
from bidegree.oracle import oracle_realizations, oracle_restricted
from bidegree.realize import NotEnoughAllowedVertices, greedy_reachable

from conftest import digraphs, random_digraph, sequences


def undirected_degree_sequences(n):
    """Degree multisets of every simple graph on n vertices (brute force)."""
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        deg = [0] * n
        for j, (u, v) in enumerate(pairs):
            if mask >> j & 1:
                deg[u] += 1
                deg[v] += 1
        seen.add(tuple(sorted(deg, reverse=True)))
    return seen


class TestUndirected:
    def test_triangle(self):
        assert is_graphical_undirected([2, 2, 2])

    def test_star(self):
        assert is_graphical_undirected([3, 1, 1, 1])

    def test_brute_force_rejects(self):
        assert (3, 3, 1, 1) not in undirected_degree_sequences(4)
        assert not is_graphical_undirected([3, 3, 1, 1])

    def test_empty(self):
        assert is_graphical_undirected([])

    def test_oracle_agreement(self):
        mismatches = []
        for n in range(1, 7):
            realizable = {tuple(x for x in d if x) for d in undirected_degree_sequences(n)}
            for d in itertools.combinations_with_replacement(range(5, 0, -1), n):
                if is_graphical_undirected(d) != (d in realizable):
                    mismatches.append(d)
        assert mismatches == []


class TestIsBigraphical:
    def test_unit_cycle(self):
        assert is_bigraphical(BiDegreeSequence.from_pairs([(1, 1)] * 3))
        assert len(oracle_realizations(BiDegreeSequence.from_pairs([(1, 1)] * 3))) > 0

    def test_out_star(self):
        assert is_bigraphical(validate({1: (2, 0), 2: (0, 1), 3: (0, 1)}))

    def test_sum_mismatch(self):
        assert not is_bigraphical(validate({1: (1, 0), 2: (1, 0), 3: (0, 1)}))

    def test_empty(self):
        assert is_bigraphical(validate([]))

    def test_only_in_degrees(self):
        assert not is_bigraphical(validate([(0, 1), (0, 1)]))

    @given(sequences(max_n=4, max_deg=3))
    @settings(max_examples=300)
    def test_matches_oracle(self, b):
        assert is_bigraphical(b) == bool(oracle_realizations(b))

    @given(sequences(max_n=7, max_deg=5))
    def test_strategy_independent(self, b):
        assert is_bigraphical(b, "max-out") == is_bigraphical(b, "min-index")


class TestRealizeGreedy:
    def test_unit_cycle_trace(self, ones3):
        assert realize_greedy(ones3).result.arcs == {(1, 2), (3, 1), (2, 3)}

    def test_out_star(self):
        r = realize_greedy(validate({1: (2, 0), 2: (0, 1), 3: (0, 1)}))
        assert r.result.arcs == {(1, 2), (1, 3)}

    def test_pigeonhole(self):
        r = realize_greedy(validate({1: (2, 2), 2: (1, 1)}))
        assert not r.ok and r.failed_step == 0

    def test_failure_round_reported(self):
        # passes the quick checks; 1 would need an arc from itself once 2 is spent
        b = validate([(0, 1), (1, 2), (2, 0)])
        assert not oracle_realizations(b)
        r = realize_greedy(b)
        assert r.result is None and r.failed_step == 1

    @given(digraphs(max_n=7))
    def test_roundtrip(self, g):
        for strategy in ("max-out", "min-index"):
            r = realize_greedy(bds_of(g), strategy)
            assert r.ok
            assert bds_of(r.result) == bds_of(g)

    @given(sequences(max_n=6, max_deg=4))
    def test_complete_iff_bigraphical(self, b):
        assert realize_greedy(b).ok == is_bigraphical(b)

    def test_deterministic(self):
        rng = random.Random(3)
        g = random_digraph(rng, 8, 0.4)
        assert realize_greedy(bds_of(g)) == realize_greedy(bds_of(g))


def test_greedy_reachable_contains_strategies():
    rng = random.Random(0)
    for _ in range(40):
        b = bds_of(random_digraph(rng, 5, 0.4))
        reach = greedy_reachable(b)
        for strategy in ("max-out", "min-index"):
            assert realize_greedy(b, strategy).result.key() in reach
        truth = {g.key() for g in oracle_realizations(b)}
        assert reach <= truth


class TestFNormal:
    def test_single_allowed(self, ones3):
        inst = RestrictedInstance(ones3, 3, frozenset({2}))
        assert f_normal_order(inst).order == (1, 2, 3)

    def test_forbidden_block(self):
        b = BiDegreeSequence.from_pairs([(1, 1)] * 4, start=1)
        assert f_normal_order(RestrictedInstance(b, 4, frozenset({1}))).order == (2, 3, 1, 4)

    def test_empty_forbidden_is_normal(self):
        b = validate({1: (0, 2), 2: (3, 2), 3: (1, 1), 4: (2, 1)})
        assert f_normal_order(RestrictedInstance(b, 4)).order == normal_order(b, 4).order

    def test_prefix_single(self, ones3):
        assert f_prefix(RestrictedInstance(ones3, 3, frozenset({2})), 1).members == {1}

    def test_prefix_unrestricted(self):
        b = validate({1: (0, 2), 2: (3, 2), 3: (1, 1), 4: (2, 1)})
        assert f_prefix(RestrictedInstance(b, 4), 2).members == set(normal_order(b, 4).order[:2])

    def test_prefix_too_long(self, ones3):
        with pytest.raises(NotEnoughAllowedVertices):
            f_prefix(RestrictedInstance(ones3, 3, frozenset({1, 2})), 1)


class TestRestrictedFeasibility:
    def test_witness(self, ones3):
        inst = RestrictedInstance(ones3, 3, frozenset({2}))
        assert oracle_restricted(inst)
        assert is_feasible_restricted(inst)

    def test_no_room(self, ones3):
        assert not is_feasible_restricted(RestrictedInstance(ones3, 3, frozenset({1, 2})))

    @given(sequences(max_n=6, max_deg=4), st.data())
    def test_empty_forbidden_degenerates(self, b, data):
        if not len(b):
            return
        pivot = data.draw(st.sampled_from(b.ids))
        assert is_feasible_restricted(RestrictedInstance(b, pivot)) == is_bigraphical(b)

    @given(digraphs(min_n=2, max_n=4), st.data())
    @settings(max_examples=200)
    def test_matches_oracle(self, g, data):
        b = bds_of(g)
        if not len(b):
            return
        pivot = data.draw(st.sampled_from(b.ids))
        others = [v for v in b.ids if v != pivot]
        forbidden = data.draw(st.frozensets(st.sampled_from(others))) if others else frozenset()
        inst = RestrictedInstance(b, pivot, forbidden)
        assert is_feasible_restricted(inst) == oracle_restricted(inst)

    def test_pivot_cannot_be_forbidden(self, ones3):
        with pytest.raises(ValueError):
            RestrictedInstance(ones3, 3, frozenset({3}))

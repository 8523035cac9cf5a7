import pytest
from hypothesis import given, settings

from bidegree import BiDegreeSequence, BranchState, bds_of, count_realizations, enumerate_all, feasible_extension, validate
from bidegree.core import OutNeighborhood, a_reduce, normal_order
from bidegree.oracle import catalog, decode, oracle_count, oracle_realizations
from bidegree.realize import is_bigraphical

from conftest import sequences

ONES3 = BiDegreeSequence.from_pairs([(1, 1)] * 3, start=1)


class TestFeasibleExtension:
    def test_fully_chosen(self):
        b = validate({1: (2, 0), 2: (0, 1), 3: (0, 1), 4: (1, 1), 5: (0, 1)})
        bs = BranchState(b, 1, frozenset({2, 3}), frozenset({4}))
        reduced = a_reduce(b, OutNeighborhood.of(normal_order(b, 1), 1, {2, 3}))
        assert feasible_extension(bs) == is_bigraphical(reduced)

    def test_nothing_decided(self):
        for b in (ONES3, validate([(0, 1), (1, 2), (2, 0)])):
            assert feasible_extension(BranchState(b, b.ids[0])) == is_bigraphical(b)

    def test_all_forbidden(self):
        assert not feasible_extension(BranchState(ONES3, 3, forbidden=frozenset({1, 2})))

    def test_chosen_cannot_repeat(self):
        # 2 still has in-degree left after 1>2, but a second 1>2 would be parallel
        b = validate({1: (2, 0), 2: (0, 2), 3: (0, 1), 4: (1, 0)})
        assert not feasible_extension(BranchState(b, 1, frozenset({2}), frozenset({3})))
        assert feasible_extension(BranchState(b, 1, frozenset({2})))

    def test_invariants(self):
        with pytest.raises(ValueError):
            BranchState(ONES3, 3, frozenset({1}), frozenset({1}))
        with pytest.raises(ValueError):
            BranchState(ONES3, 3, frozenset({1, 2}))


class TestEnumerate:
    def test_two_cycle(self):
        graphs = list(enumerate_all(BiDegreeSequence.from_pairs([(1, 1)] * 2, start=1)))
        assert [g.arcs for g in graphs] == [{(1, 2), (2, 1)}]

    def test_three_cycles(self):
        graphs = list(enumerate_all(ONES3))
        assert len(graphs) == 2 == len(oracle_realizations(ONES3))

    def test_out_star(self):
        graphs = list(enumerate_all(validate({1: (2, 0), 2: (0, 1), 3: (0, 1)})))
        assert [g.arcs for g in graphs] == [{(1, 2), (1, 3)}]

    def test_limit(self):
        b = BiDegreeSequence.from_pairs([(1, 1)] * 4)
        assert len(list(enumerate_all(b, limit=4))) == 4
        assert list(enumerate_all(b, limit=4)) == list(enumerate_all(b))[:4]

    def test_deterministic(self):
        b = BiDegreeSequence.from_pairs([(2, 1), (1, 2), (1, 1), (1, 1)])
        assert list(enumerate_all(b)) == list(enumerate_all(b))

    def test_no_prune_matches(self):
        for key, masks in list(catalog(4).items())[::37]:
            b = BiDegreeSequence.from_mapping({v: (key[v], key[4 + v]) for v in range(4)})
            assert [g.arcs for g in enumerate_all(b)] == [g.arcs for g in enumerate_all(b, prune=False)]

    @given(sequences(max_n=4, max_deg=3))
    @settings(max_examples=200)
    def test_matches_oracle(self, b):
        got = [g.key() for g in enumerate_all(b)]
        assert len(got) == len(set(got))
        assert set(got) == {g.key() for g in oracle_realizations(b)}
        for key in got:
            assert bds_of(decode_key(key)) == b


def decode_key(key):
    from bidegree import DiGraph

    return DiGraph(frozenset(key))


class TestCount:
    def test_derangements(self):
        assert count_realizations(BiDegreeSequence.from_pairs([(1, 1)] * 4)) == 9

    def test_non_graphical(self):
        assert count_realizations(validate([(1, 0), (1, 0), (0, 1)])) == 0

    def test_empty(self):
        assert count_realizations(validate([])) == 1
        assert oracle_count(validate([])) == 1

"""Noncrossing matchings, short arcs, color sets, words, partial matchings."""

import json
import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import RUNNING_ARCS, RUNNING_COLOR_SETS, RUNNING_WORD, catalan
from webforge.matchings import (
    BalancedWord,
    DomainError,
    NoncrossingMatching,
    PartialMatching,
    brute_force_matchings,
    color_sets,
    enumerate_matchings,
    enumerate_partial_matchings,
    hat,
    remove_arc,
    short_arcs,
    word_of_matching,
    word_sign,
)


def inversion_sign(letters) -> int:
    """Oracle: parity of inversions of the subscripted word."""
    counts = {}
    sub = []
    for x in letters:
        counts[x] = counts.get(x, 0) + 1
        sub.append((x, counts[x]))
    inv = sum(1 for i, j in combinations(range(len(sub)), 2)
              if sub[i] > sub[j])
    return -1 if inv % 2 else 1


class TestEnumeration:
    def test_k1(self):
        assert [m.arcs for m in enumerate_matchings(1)] == [((1, 2),)]

    @pytest.mark.parametrize("k", range(1, 8))
    def test_catalan_counts(self, k):
        assert len(enumerate_matchings(k)) == catalan(k)

    @pytest.mark.parametrize("k", range(1, 6))
    def test_agrees_with_brute_force(self, k):
        assert set(enumerate_matchings(k)) == set(brute_force_matchings(k))

    def test_crossing_rejected(self):
        with pytest.raises(DomainError):
            NoncrossingMatching(k=2, arcs=((1, 3), (2, 4)))

    def test_not_perfect_rejected(self):
        with pytest.raises(DomainError):
            NoncrossingMatching(k=2, arcs=((1, 2), (2, 3)))


class TestShortArcs:
    def test_adjacent_pair(self):
        m = NoncrossingMatching(k=2, arcs=((1, 2), (3, 4)))
        assert short_arcs(m) == [1, 3]

    def test_running_example(self):
        m = NoncrossingMatching(k=9, arcs=RUNNING_ARCS)
        assert short_arcs(m) == [3, 6, 8, 10, 14, 18]

    def test_wraparound_counts(self):
        # the arc {6,1} is short with index 6
        m = NoncrossingMatching(k=3, arcs=((1, 6), (2, 3), (4, 5)))
        assert short_arcs(m) == [2, 4, 6]

    @pytest.mark.parametrize("k", range(2, 8))
    def test_at_least_two(self, k):
        for m in enumerate_matchings(k):
            assert len(short_arcs(m)) >= 2


class TestColorSets:
    def test_running_example(self):
        m = NoncrossingMatching(k=9, arcs=RUNNING_ARCS)
        assert color_sets(m) == RUNNING_COLOR_SETS

    def test_small_pair_unordered(self):
        m = NoncrossingMatching(k=2, arcs=((1, 2), (3, 4)))
        assert {frozenset(c) for c in color_sets(m)} == {
            frozenset({2, 3}), frozenset({4, 1})}

    def test_two_short_arcs(self):
        m = NoncrossingMatching(k=3, arcs=((1, 6), (2, 5), (3, 4)))
        cs = color_sets(m)
        assert {frozenset(c) for c in cs} == {
            frozenset({1, 2, 3}), frozenset({4, 5, 6})}
        assert 1 in cs[0]

    @pytest.mark.parametrize("k", range(1, 8))
    def test_partition_and_no_monochromatic_arc(self, k):
        for m in enumerate_matchings(k):
            cs = color_sets(m)
            assert sorted(x for block in cs for x in block) == list(
                range(1, 2 * k + 1))
            assert 1 in cs[0]
            where = {x: j for j, block in enumerate(cs) for x in block}
            for a, b in m.arcs:
                assert where[a] != where[b]


class TestWords:
    def test_simple(self):
        assert word_of_matching(
            NoncrossingMatching(k=2, arcs=((1, 2), (3, 4)))).letters == (1, 1, 2, 2)
        assert word_of_matching(
            NoncrossingMatching(k=2, arcs=((1, 4), (2, 3)))).letters == (1, 2, 2, 1)

    def test_running_example(self):
        m = NoncrossingMatching(k=9, arcs=RUNNING_ARCS)
        assert word_of_matching(m).letters == RUNNING_WORD

    def test_signs(self):
        assert word_sign((1, 1, 2, 2)) == 1
        assert word_sign((1, 2, 1, 2)) == -1
        # two inversions: even parity
        assert word_sign((1, 2, 2, 1)) == 1

    def test_unbalanced_rejected(self):
        with pytest.raises(DomainError):
            word_sign((1, 1, 2))
        with pytest.raises(DomainError):
            BalancedWord(k=2, d=2, letters=(1, 1, 1, 2))

    @pytest.mark.parametrize("k", range(1, 6))
    def test_sign_oracle_on_matchings(self, k):
        for m in enumerate_matchings(k):
            letters = word_of_matching(m).letters
            assert word_sign(letters) == inversion_sign(letters)

    @given(st.integers(min_value=1, max_value=5), st.integers(min_value=1, max_value=3),
           st.randoms(use_true_random=False))
    @settings(max_examples=60, deadline=None)
    def test_sign_oracle_random_words(self, k, d, rng):
        letters = [sym for sym in range(1, k + 1) for _ in range(d)]
        rng.shuffle(letters)
        assert word_sign(letters) == inversion_sign(letters)


class TestPartialMatchings:
    def test_type_counting(self):
        pm = PartialMatching(n=4, arcs=((1, 4),), doubled=frozenset({2}))
        assert pm.k == 2
        assert pm.content() == (1, 2, 0, 1)
        assert pm.encoding() == (1, 2, 2, 4)

    def test_doubled_overlap_rejected(self):
        with pytest.raises(DomainError):
            PartialMatching(n=4, arcs=((1, 4),), doubled=frozenset({1}))

    def test_hat_identity_on_full(self):
        pm = PartialMatching(n=4, arcs=((1, 2), (3, 4)), doubled=frozenset())
        assert hat(pm).arcs == ((1, 2), (3, 4))

    def test_hat_doubled_only(self):
        pm = PartialMatching(n=3, arcs=(), doubled=frozenset({1, 3}))
        assert hat(pm).arcs == ((1, 2), (3, 4))

    def test_hat_mixed(self):
        pm = PartialMatching(n=4, arcs=((1, 4),), doubled=frozenset({2}))
        assert hat(pm).arcs == ((1, 4), (2, 3))

    @pytest.mark.parametrize("k,n", [(2, 5), (2, 6), (3, 6), (3, 7)])
    def test_hat_always_noncrossing(self, k, n):
        for pm in enumerate_partial_matchings(k, n):
            m = hat(pm)
            assert m.k == k  # constructor enforces noncrossing

    def test_json_round_trip(self):
        pm = PartialMatching(n=5, arcs=((2, 5),), doubled=frozenset({1}))
        assert PartialMatching.from_json(
            json.loads(json.dumps(pm.to_json()))) == pm


class TestRemoveArc:
    def test_simple(self):
        m = NoncrossingMatching(k=2, arcs=((1, 2), (3, 4)))
        assert remove_arc(m, 1).arcs == ((1, 2),)

    def test_nested(self):
        m = NoncrossingMatching(k=2, arcs=((1, 4), (2, 3)))
        assert remove_arc(m, 2).arcs == ((1, 2),)

    def test_running_example(self):
        m = NoncrossingMatching(k=9, arcs=RUNNING_ARCS)
        assert remove_arc(m, 3).k == 8

    def test_absent_arc_rejected(self):
        m = NoncrossingMatching(k=2, arcs=((1, 2), (3, 4)))
        with pytest.raises(DomainError):
            remove_arc(m, 2)

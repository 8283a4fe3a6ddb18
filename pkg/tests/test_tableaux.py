"""Two-column tableaux: enumeration, bijections, descents, standardization."""

import pytest
from hypothesis import given, settings, strategies as st

from conftest import RUNNING_ARCS, SSYT18_COL1, SSYT18_COL2, catalan
from webforge.matchings import DomainError, NoncrossingMatching, color_sets
from webforge.tableaux import (
    ContentEncoding,
    SemistandardTableau,
    StandardTableau,
    catalan_bijection,
    catalan_bijection_inverse,
    descents,
    destandardize,
    enumerate_semistandard,
    enumerate_standard,
    parse_tableau,
    partial_matching_of_tableau,
    row_descents,
    standardize,
    tableau_of_partial_matching,
)


def brute_force_standard(k):
    """Oracle: filter all 2-subsets splits by the row condition."""
    from itertools import combinations
    out = []
    for col1 in combinations(range(1, 2 * k + 1), k):
        col2 = tuple(x for x in range(1, 2 * k + 1) if x not in col1)
        if all(a < b for a, b in zip(col1, col2)):
            out.append((col1, col2))
    return out


def brute_force_semistandard(k, n):
    from itertools import combinations
    out = []
    for col1 in combinations(range(1, n + 1), k):
        for col2 in combinations(range(1, n + 1), k):
            if all(a <= b for a, b in zip(col1, col2)):
                out.append((col1, col2))
    return out


class TestEnumeration:
    def test_k1(self):
        assert [(t.col1, t.col2) for t in enumerate_standard(1)] == [((1,), (2,))]

    def test_k2(self):
        assert [(t.col1, t.col2) for t in enumerate_standard(2)] == [
            ((1, 2), (3, 4)), ((1, 3), (2, 4))]

    @pytest.mark.parametrize("k", range(1, 8))
    def test_catalan_counts(self, k):
        tabs = enumerate_standard(k)
        assert len(tabs) == catalan(k)
        assert [(t.col1, t.col2) for t in tabs] == brute_force_standard(k)

    def test_k0_rejected(self):
        with pytest.raises(DomainError):
            enumerate_standard(0)

    @pytest.mark.parametrize("k,n", [(1, 4), (2, 4), (2, 6), (3, 5)])
    def test_semistandard_counts(self, k, n):
        assert [(t.col1, t.col2) for t in enumerate_semistandard(k, n)] == \
            brute_force_semistandard(k, n)

    def test_invalid_tableaux_rejected(self):
        with pytest.raises(DomainError):
            StandardTableau(k=2, col1=(1, 4), col2=(2, 3))
        with pytest.raises(DomainError):
            SemistandardTableau(k=2, n=4, col1=(2, 3), col2=(1, 4))


class TestCatalanBijection:
    def test_small(self):
        t = StandardTableau(k=2, col1=(1, 2), col2=(3, 4))
        assert catalan_bijection(t).arcs == ((1, 4), (2, 3))
        t = StandardTableau(k=2, col1=(1, 3), col2=(2, 4))
        assert catalan_bijection(t).arcs == ((1, 2), (3, 4))

    def test_running_example(self, running_tableau):
        assert catalan_bijection(running_tableau).arcs == RUNNING_ARCS

    @pytest.mark.parametrize("k", range(1, 7))
    def test_round_trip(self, k):
        for t in enumerate_standard(k):
            assert catalan_bijection_inverse(catalan_bijection(t)) == t


class TestDescents:
    def test_examples(self):
        assert descents(StandardTableau(k=2, col1=(1, 3), col2=(2, 4))) == {2, 4}
        assert descents(StandardTableau(k=2, col1=(1, 2), col2=(3, 4))) == {1, 3}

    def test_running_example(self, running_tableau, running_matching):
        sizes = sorted(len(c) for c in color_sets(running_matching))
        assert sizes == [2, 2, 3, 3, 4, 4]
        n = 18
        d = descents(running_tableau)
        # a descent at i means i and its cyclic successor share a color set
        where = {}
        for j, block in enumerate(color_sets(running_matching)):
            for x in block:
                where[x] = j
        assert d == {i for i in range(1, n + 1) if where[i] == where[i % n + 1]}

    @pytest.mark.parametrize("k", range(1, 6))
    def test_matches_row_oracle(self, k):
        for t in enumerate_standard(k):
            assert descents(t) == row_descents(t)


class TestStandardization:
    def test_fixes_standard(self):
        t = SemistandardTableau(k=2, n=4, col1=(1, 2), col2=(3, 4))
        std, enc = standardize(t)
        assert (std.col1, std.col2) == ((1, 2), (3, 4))
        assert enc.a == (1, 2, 3, 4)

    def test_doubled_values(self):
        # rows (1,1) and (2,2): both values doubled
        t = SemistandardTableau(k=2, n=2, col1=(1, 2), col2=(1, 2))
        std, enc = standardize(t)
        assert (std.col1, std.col2) == ((1, 3), (2, 4))
        assert enc.a == (1, 1, 2, 2)

    def test_running_semistandard(self, ssyt18, running_tableau):
        std, enc = standardize(ssyt18)
        assert std == running_tableau
        assert destandardize(std, enc) == ssyt18

    @pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6)])
    def test_destandardize_round_trip(self, k, n):
        for t in enumerate_semistandard(k, n):
            std, enc = standardize(t)
            assert destandardize(std, enc) == t

    def test_encoding_validation(self):
        with pytest.raises(DomainError):
            ContentEncoding(d=(1, 1), a=(2, 1))
        enc = ContentEncoding.from_content((2, 0, 2))
        assert enc.a == (1, 1, 3, 3)
        assert enc.k == 2


class TestPartialMatchingBijection:
    def test_doubled_only(self):
        t = SemistandardTableau(k=2, n=3, col1=(1, 3), col2=(1, 3))
        pm = partial_matching_of_tableau(t)
        assert pm.arcs == ()
        assert pm.doubled == frozenset({1, 3})

    def test_running_hat(self, ssyt18, running_matching):
        from webforge.matchings import hat
        pm = partial_matching_of_tableau(ssyt18)
        assert hat(pm) == running_matching

    @pytest.mark.parametrize("k,n", [(2, 5), (2, 6), (3, 6), (3, 7)])
    def test_round_trip(self, k, n):
        for t in enumerate_semistandard(k, n):
            assert tableau_of_partial_matching(partial_matching_of_tableau(t)) == t


class TestParsing:
    def test_standard(self):
        t = parse_tableau({"k": 2, "col1": [1, 2], "col2": [3, 4]})
        assert isinstance(t, StandardTableau)

    def test_semistandard(self):
        t = parse_tableau({"k": 2, "n": 5, "col1": [1, 2], "col2": [2, 5]})
        assert isinstance(t, SemistandardTableau)
        assert t.n == 5

    @given(st.sampled_from(enumerate_semistandard(2, 5)))
    @settings(max_examples=40, deadline=None)
    def test_json_round_trip(self, t):
        assert parse_tableau(t.to_json()) == t

"""Labelings, invariant vectors, duality, and exact evaluation."""

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from webforge.matchings import (
    DomainError,
    NoncrossingMatching,
    enumerate_matchings,
    word_of_matching,
    word_sign,
)
from webforge.tableaux import (
    SemistandardTableau,
    catalan_bijection,
    enumerate_standard,
)
from webforge.webs import claw_web, sl2_web_of_matching, tableau_to_web
from webforge.invariants import (
    alt_sign_factor,
    delta_matching_expansion,
    delta_monomial,
    dual_matchings,
    evaluate_monomial,
    evaluate_web,
    exact_det,
    invariant_vector,
    labeling_count,
    pairing,
    sign_lemma_factor,
)


def perm_sign(p) -> int:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p))
              if p[i] > p[j])
    return -1 if inv % 2 else 1


class TestLabelings:
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_claw_counts(self, k):
        w = claw_web(range(1, k + 1), k=k)
        # a full claw forces the legs to carry distinct single letters
        for p in permutations(range(1, k + 1)):
            assert labeling_count(w, p) == 1
        assert labeling_count(w, (1,) * k) == (1 if k == 1 else 0)

    def test_word_length_checked(self):
        w = claw_web({1, 2}, k=2)
        with pytest.raises(DomainError):
            labeling_count(w, (1, 2, 1))

    @pytest.mark.parametrize("k", [2, 3])
    def test_claw_invariant_is_determinant(self, k):
        vec = invariant_vector(claw_web(range(1, k + 1), k=k))
        expected = sorted((p, perm_sign(p)) for p in permutations(range(1, k + 1)))
        assert sorted(vec.coeffs) == expected

    def test_coefficient_is_signed_pairing(self):
        m = NoncrossingMatching(k=3, arcs=((1, 6), (2, 3), (4, 5)))
        t = next(t for t in enumerate_standard(3) if catalan_bijection(t) == m)
        w = tableau_to_web(t)[0]
        vec = invariant_vector(w)
        for wrd, c in vec.coeffs:
            assert c == word_sign(wrd) * pairing(w, wrd)
        assert vec.coefficient((9,) * 6) == 0


class TestDuality:
    @pytest.mark.parametrize("k", [2, 3])
    def test_web_dual_to_its_matching(self, k):
        for t in enumerate_standard(k):
            m = catalan_bijection(t)
            for w in tableau_to_web(t):
                assert dual_matchings(w) == [(m, 1)]

    def test_sl2_duals(self):
        # the bivalent whites force distinct letters across each arc, so
        # the nested matching pairs with the unnested word and vice versa
        m = NoncrossingMatching(k=2, arcs=((1, 4), (2, 3)))
        other = NoncrossingMatching(k=2, arcs=((1, 2), (3, 4)))
        assert dual_matchings(sl2_web_of_matching(m)) == [(other, 1)]


class TestMonomials:
    def test_delta_monomial(self):
        mono = delta_monomial((1, 1, 2, 2))
        assert mono.subsets == ((1, 2), (3, 4))

    def test_unbalanced_rejected(self):
        with pytest.raises(DomainError):
            delta_monomial((1, 1, 2))

    def test_evaluate_single_minor(self):
        # all-ones word: a single minor on every column
        mono = delta_monomial((1, 1))
        assert mono.subsets == ((1, 2),)
        assert evaluate_monomial(mono, [(1, 2), (3, 4)]) == Fraction(-2)

    def test_claw_evaluation(self):
        w = claw_web({1, 2}, k=2)
        assert evaluate_web(w, [(1, 2), (3, 4)]) == Fraction(-2)

    @given(st.lists(st.lists(st.fractions(max_denominator=6), min_size=3,
                             max_size=3), min_size=3, max_size=3))
    @settings(max_examples=50, deadline=None)
    def test_det_oracle(self, rows):
        leibniz = sum(
            perm_sign(p) * rows[0][p[0]] * rows[1][p[1]] * rows[2][p[2]]
            for p in permutations(range(3)))
        assert exact_det(rows) == leibniz


class TestExpansion:
    def test_simple(self):
        m = NoncrossingMatching(k=2, arcs=((1, 2), (3, 4)))
        assert delta_matching_expansion(m) == {
            (1, 2, 1, 2): 1, (1, 2, 2, 1): -1,
            (2, 1, 1, 2): -1, (2, 1, 2, 1): 1}

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_sign_identity(self, k):
        # the sl2 web of M expands as a global sign times the arc product
        for t in enumerate_standard(k):
            m = catalan_bijection(t)
            vec = invariant_vector(sl2_web_of_matching(m))
            sigma = sign_lemma_factor(t)
            expected = {w: sigma * c
                        for w, c in delta_matching_expansion(m).items()}
            assert dict(vec.coeffs) == expected


class TestSignFactors:
    def test_examples(self):
        from webforge.tableaux import StandardTableau
        t0 = StandardTableau(k=2, col1=(1, 2), col2=(3, 4))
        t1 = StandardTableau(k=2, col1=(1, 3), col2=(2, 4))
        assert sign_lemma_factor(t0) == 1
        assert sign_lemma_factor(t1) == -1
        assert alt_sign_factor(t0) == -1
        assert alt_sign_factor(t1) == 1

    def test_running_example(self, running_tableau):
        assert sign_lemma_factor(running_tableau) == -1


class TestStitchedEvaluation:
    def seeded_vectors(self, k, n, seed):
        import random
        rng = random.Random(seed)
        return [tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                      for _ in range(k)) for _ in range(n)]

    @pytest.mark.parametrize("k,n,seed", [(2, 4, 1), (2, 5, 2), (3, 7, 3)])
    def test_extension_independence(self, k, n, seed):
        from webforge.tableaux import enumerate_semistandard
        vt = self.seeded_vectors(k, n, seed)
        for t in enumerate_semistandard(k, n):
            webs = tableau_to_web(t)
            vals = {evaluate_web(w, vt) for w in webs}
            assert len(vals) == 1

    def test_doubled_column_matches_repeated_columns(self):
        t = SemistandardTableau(k=2, n=3, col1=(1, 2), col2=(2, 3))
        vt = self.seeded_vectors(2, 3, 7)
        w = tableau_to_web(t)[0]
        from webforge.tableaux import standardize
        std, enc = standardize(t)
        parent = tableau_to_web(std)[0]
        duplicated = [vt[a - 1] for a in enc.a]
        assert evaluate_web(w, vt) == evaluate_web(parent, duplicated)

import random

import pytest
from hypothesis import assume, given, strategies as st

from conftest import random_brunnian, rf_words, words
from linkhomotopy.rfree import (
    NormalForm,
    RFWord,
    basis_pairs,
    delete_strand,
    is_brunnian,
    brunnian_witness,
    lcs_degree,
    normal_form,
    quotient_rank,
    quotient_rank_formula,
    rf_equal,
    tau_I_sigma,
)
from linkhomotopy.words import Word, parse_word, random_word, simple_commutator


def rf(text, n):
    return RFWord(parse_word(text, n - 1), n)


class TestEquality:
    def test_rf_relation(self):
        assert rf_equal(rf("[t1, t2 t1 t2']", 3), rf("e", 3))

    def test_not_commutative(self):
        assert not rf_equal(rf("t1 t2", 3), rf("t2 t1", 3))

    @given(rf_words())
    def test_reflexive(self, w):
        assert rf_equal(w, w)

    @given(st.integers(2, 5), st.data())
    def test_rf_relations_family(self, n, data):
        g = data.draw(words(n - 1, 10))
        i = data.draw(st.integers(1, n - 1))
        ti = Word.generator(i, n - 1)
        assert rf_equal(RFWord(simple_commutator([ti, g * ti * ~g]), n), RFWord(Word.identity(n - 1), n))


class TestDegree:
    def test_examples(self):
        assert lcs_degree(rf("t1", 3)) == 1
        assert lcs_degree(rf("[t1,t2]", 3)) == 2
        assert lcs_degree(rf("e", 3)) == 3

    @given(st.integers(3, 5), st.data())
    def test_additivity(self, n, data):
        ws = [data.draw(words(n - 1, 6)) for _ in range(data.draw(st.integers(1, 3)))]
        c = RFWord(simple_commutator(ws), n)
        degrees = [lcs_degree(RFWord(w, n)) for w in ws]
        if lcs_degree(c) < n:
            assert lcs_degree(c) >= sum(degrees)


class TestNormalForm:
    def test_commutator(self):
        nf = normal_form(rf("t1 t2 t1' t2'", 3))
        assert nf.exponents == {((1, 2), (2,)): 1}

    def test_empty(self):
        assert normal_form(rf("e", 4)).exponents == {}

    def test_top_generator(self):
        nf = normal_form(rf("[t1,t3,t2]", 4))
        assert nf.exponents == {((1, 2, 3), (3, 2)): 1}

    def test_mixed(self):
        nf = normal_form(rf("t2^3 [t1,t3]' t1", 4))
        assert nf[((1,), ())] == 1 and nf[((2,), ())] == 3
        assert nf[((1, 3), (2,))] == -1
        # moving t1 to the front past t2^3 costs [t1, t2]^-3
        assert nf[((1, 2), (2,))] == -3
        assert rf_equal(nf.recompose(), rf("t2^3 [t1,t3]' t1", 4))

    def test_json_round_trip(self):
        nf = normal_form(rf("t1^2 [t1,t2,t3]^-4 t3", 4))
        assert NormalForm.from_json(nf.to_json()) == nf
        assert nf.to_json()["terms"][0] == {"I": [1], "sigma": [], "e": "2"}

    @given(rf_words(max_length=30))
    def test_round_trip(self, w):
        assert rf_equal(normal_form(w).recompose(), w)

    @given(rf_words(max_length=20))
    def test_idempotent(self, w):
        nf = normal_form(w)
        assert normal_form(nf.recompose()) == nf

    @given(rf_words(n_min=3, max_length=10), rf_words(n_min=3, max_length=10))
    def test_equality_matches_normal_form(self, a, b):
        assume(a.components == b.components)
        assert rf_equal(a, b) == (normal_form(a) == normal_form(b))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_basis_elements_are_indicators(self, n):
        for k in range(1, n):
            for I, s in basis_pairs(n, k):
                assert normal_form(RFWord(tau_I_sigma(I, s, n), n)).exponents == {(I, s): 1}


class TestDeletion:
    def test_first_strand_kills_commutator(self):
        assert delete_strand(rf("[t1,t2]", 3), 1).word.is_identity()

    def test_relabel(self):
        d = delete_strand(rf("t1 t2", 4), 3)
        assert d.components == 3 and d.word == parse_word("t1 t2", 2)

    def test_multiplicative(self):
        rng = random.Random(31)
        for _ in range(100):
            n = rng.randint(2, 5)
            a = RFWord(random_word(n - 1, rng.randint(0, 12), rng), n)
            b = RFWord(random_word(n - 1, rng.randint(0, 12), rng), n)
            j = rng.randint(1, n - 1)
            assert delete_strand(a * b, j) == delete_strand(a, j) * delete_strand(b, j)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            delete_strand(rf("t1", 3), 3)

    def test_brunnian_examples(self):
        assert is_brunnian(rf("[t1,t2]", 3))
        assert not is_brunnian(rf("t1", 3))
        assert brunnian_witness(rf("t1", 3)) == 2
        assert not is_brunnian(rf("[t1,t2]", 4))
        assert brunnian_witness(rf("[t1,t2]", 4)) == 3


class TestBrunnianCharacterisation:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_random_brunnian_have_top_degree_only(self, n):
        rng = random.Random(n)
        for _ in range(20):
            z = random_brunnian(n, rng)
            assert is_brunnian(z)
            assert normal_form(z).degrees() <= {n - 1}

    @given(rf_words(n_min=3, max_length=16))
    def test_equivalence(self, w):
        assert is_brunnian(w) == (normal_form(w).degrees() <= {w.components - 1})


class TestRank:
    @pytest.mark.parametrize("n,k,expected", [(4, 3, 2), (4, 1, 3), (6, 4, 30)])
    def test_examples(self, n, k, expected):
        assert quotient_rank(n, k) == expected

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_formula(self, n):
        for k in range(1, n):
            assert quotient_rank(n, k) == quotient_rank_formula(n, k) == len(basis_pairs(n, k))

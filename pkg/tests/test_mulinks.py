import random

import pytest
from hypothesis import given, strategies as st

from conftest import random_brunnian, words
from linkhomotopy.mulinks import (
    NotBrunnianError,
    brunnian_product,
    check_product_formula,
    closure_mu,
    conjugation_invariance,
    distinct_indices,
    mu_table,
    mu_vector,
    permutations,
    product_formula_rhs,
    tau_n_sigma,
)
from linkhomotopy.rfree import RFWord
from linkhomotopy.suites import kronecker_suite
from linkhomotopy.words import Word, parse_word, random_word


def rf(text, n):
    return RFWord(parse_word(text, n - 1), n)


class TestGenerators:
    def test_examples(self):
        assert tau_n_sigma(3, (2,)) == rf("[t1,t2]", 3)
        assert tau_n_sigma(4, (2, 3)) == rf("[t1,t2,t3]", 4)
        assert tau_n_sigma(4, (3, 2)) == rf("[t1,t3,t2]", 4)

    def test_bad_permutation(self):
        with pytest.raises(ValueError):
            tau_n_sigma(4, (2, 2))

    def test_permutation_order(self):
        assert permutations(5) == [(2, 3, 4), (2, 4, 3), (3, 2, 4), (3, 4, 2), (4, 2, 3), (4, 3, 2)]


class TestClosureMu:
    def test_kronecker_examples(self):
        assert closure_mu(tau_n_sigma(3, (2,)), (1, 2)) == 1
        L = tau_n_sigma(4, (3, 2))
        assert closure_mu(L, (1, 3, 2)) == 1
        assert closure_mu(L, (1, 2, 3)) == 0

    def test_trivial(self):
        L = rf("e", 5)
        assert all(v == 0 for v in mu_table(L).values())

    @pytest.mark.parametrize("sigma", [(2, 3), (3, 2)])
    def test_short_invariants_vanish(self, sigma):
        L = tau_n_sigma(4, sigma)
        assert all(closure_mu(L, I) == 0 for I in distinct_indices(3, 2))

    def test_repeated_index_rejected(self):
        with pytest.raises(ValueError):
            closure_mu(rf("t1", 3), (1, 1))

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_kronecker_suite(self, n):
        assert kronecker_suite(n)["ok"]


class TestMuVector:
    def test_indicator(self):
        for n in (3, 4, 5):
            for s in permutations(n):
                assert mu_vector(tau_n_sigma(n, s)).entries == {x: int(x == s) for x in permutations(n)}

    def test_product(self):
        e = {(2, 3, 4): 3, (3, 4, 2): -2, (4, 3, 2): 5}
        assert mu_vector(brunnian_product(5, e)).entries == {s: e.get(s, 0) for s in permutations(5)}

    def test_trivial(self):
        assert mu_vector(rf("e", 4)).values() == (0, 0)

    def test_non_brunnian(self):
        with pytest.raises(NotBrunnianError):
            mu_vector(rf("t1", 4))

    def test_json(self):
        doc = mu_vector(tau_n_sigma(4, (3, 2))).to_json()
        assert doc == {"n": 4, "mu": [{"sigma": [2, 3], "value": "0"}, {"sigma": [3, 2], "value": "1"}]}

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_linear_on_brunnian(self, n):
        rng = random.Random(100 + n)
        for _ in range(10):
            z1, z2 = random_brunnian(n, rng), random_brunnian(n, rng)
            a, b, c = mu_vector(z1).values(), mu_vector(z2).values(), mu_vector(z1 * z2).values()
            assert c == tuple(x + y for x, y in zip(a, b))


class TestProductFormula:
    def test_linking_number(self):
        z = rf("t1", 3)
        assert product_formula_rhs(z, z, (1,)) == 2 == closure_mu(z * z, (1,))
        assert check_product_formula(z, z, (1,))

    def test_with_trivial(self):
        z, e = tau_n_sigma(3, (2,)), rf("e", 3)
        assert all(check_product_formula(z, e, I) for I in distinct_indices(2))

    @given(st.integers(3, 5), st.data())
    def test_random_pairs(self, n, data):
        z1 = RFWord(data.draw(words(n - 1, 12)), n)
        z2 = RFWord(data.draw(words(n - 1, 12)), n)
        for I in distinct_indices(n - 1):
            assert check_product_formula(z1, z2, I)


class TestConjugation:
    def test_examples(self):
        z = tau_n_sigma(3, (2,))
        assert conjugation_invariance(z, rf("t1", 3), (1, 2))
        assert conjugation_invariance(z, rf("e", 3), (1, 2))

    def test_random_conjugators(self):
        rng = random.Random(4)
        for s in permutations(4):
            z = tau_n_sigma(4, s)
            for _ in range(10):
                lam = RFWord(random_word(3, rng.randint(0, 10), rng), 4)
                assert all(conjugation_invariance(z, lam, I) for I in distinct_indices(3))

    def test_needs_brunnian(self):
        with pytest.raises(NotBrunnianError):
            conjugation_invariance(rf("t1", 3), rf("t2", 3), (1,))

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from linkhomotopy.conflie import (
    DKElt,
    DrinfeldKohno,
    TorusElt,
    btf_basis,
    btf_kernel_rank,
    btf_kernel_report,
    brunnian_kernel,
    canonical_label,
    check_4T,
    corrupted_action,
    dk_algebra,
    dk_bracket,
    fox_bracket,
    fox_sign,
    parse_label,
    parse_torus_label,
    psi_delete,
    psi_dk,
    relation_instances,
    t_n_sigma,
    torus_generator,
)
from linkhomotopy.freelie import LieElt, lie_bracket


def B(n, k, i):
    return DKElt.generator(n, k, i)


def labels(n):
    return [(k, i) for k in range(2, n + 1) for i in range(1, k)]


def random_dk(n, rng, max_len=3):
    alg = dk_algebra(n)
    acc = DKElt.zero(n)
    for _ in range(rng.randint(1, 2)):
        gens = [B(n, *rng.choice(labels(n))) for _ in range(rng.randint(1, max_len))]
        acc = acc + alg.left_normed(gens).scale(rng.randint(-2, 2))
    return acc


class TestLabels:
    def test_symmetric(self):
        assert canonical_label(1, 3) == (3, 1)
        assert B(4, 1, 3) == B(4, 3, 1)

    def test_parse(self):
        assert parse_label("B3,1") == (3, 1)
        assert parse_torus_label("t 2,4 (3)") == (4, 2, 3)
        with pytest.raises(ValueError):
            parse_label("B3,3")
        with pytest.raises(ValueError):
            parse_label("C3,1")


class TestBracket:
    def test_disjoint_commute(self):
        assert dk_bracket(B(4, 2, 1), B(4, 4, 3)).is_zero()

    def test_triangle(self):
        assert dk_bracket(B(3, 2, 1), B(3, 3, 1) + B(3, 3, 2)).is_zero()

    def test_same_factor_is_free(self):
        n = 5
        got = dk_bracket(B(n, n, 1), B(n, n, 2))
        g = n - 1
        assert got == DKElt.in_factor(n, n, lie_bracket(LieElt.generator(1, g), LieElt.generator(2, g)))

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_4T(self, n):
        failures = []
        assert check_4T(n, failures=failures)
        assert failures == []

    def test_instance_counts(self):
        assert sum(1 for _ in relation_instances(3)) == 6
        assert sum(1 for _ in relation_instances(4)) == 24 + 24

    def test_corrupted_table_detected(self):
        for n in (3, 4):
            failures = []
            assert not check_4T(n, DrinfeldKohno(n, corrupted_action()), failures)
            assert failures

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_jacobi_across_factors(self, n):
        rng = random.Random(n)
        alg = dk_algebra(n)
        for _ in range(60):
            a, b, c = random_dk(n, rng), random_dk(n, rng), random_dk(n, rng)
            jac = alg.bracket(a, alg.bracket(b, c)) + alg.bracket(b, alg.bracket(c, a)) + alg.bracket(c, alg.bracket(a, b))
            assert jac.is_zero()
            assert (alg.bracket(a, b) + alg.bracket(b, a)).is_zero()

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_psi_is_lie_homomorphism(self, n):
        rng = random.Random(10 + n)
        alg, small = dk_algebra(n), dk_algebra(n - 1)
        for _ in range(40):
            a, b = random_dk(n, rng), random_dk(n, rng)
            for i in range(1, n + 1):
                assert psi_dk(alg.bracket(a, b), i) == small.bracket(psi_dk(a, i), psi_dk(b, i))


class TestTorus:
    def test_overlap_vanishes(self):
        n = 4
        assert fox_bracket(torus_generator(n, 4, 1, 1), torus_generator(n, 4, 2, 1)).is_zero()

    def test_sign_minus(self):
        n = 4
        got = fox_bracket(torus_generator(n, 4, 1, 2), torus_generator(n, 4, 2, 1))
        assert fox_sign((2,), (1,)) == -1
        assert got.piece((1, 2)) == -dk_bracket(B(n, 4, 1), B(n, 4, 2))

    def test_sign_plus(self):
        n = 4
        got = fox_bracket(torus_generator(n, 4, 1, 1), torus_generator(n, 4, 2, 2))
        assert got.support() == [(1, 2)]
        assert got.piece((1, 2)) == dk_bracket(B(n, 4, 1), B(n, 4, 2))

    @given(st.lists(st.integers(1, 9), min_size=0, max_size=4, unique=True), st.data())
    def test_sign_by_transpositions(self, I, data):
        rest = [j for j in range(1, 10) if j not in I]
        J = data.draw(st.lists(st.sampled_from(rest), max_size=4, unique=True)) if rest else []
        I, J = tuple(sorted(I)), tuple(sorted(J))
        # bubble-sort the concatenation and count swaps
        seq, swaps = list(I + J), 0
        for a in range(len(seq)):
            for b in range(len(seq) - 1 - a):
                if seq[b] > seq[b + 1]:
                    seq[b], seq[b + 1] = seq[b + 1], seq[b]
                    swaps += 1
        assert fox_sign(I, J) == (-1) ** swaps

    def test_rejects_inhomogeneous(self):
        with pytest.raises(ValueError):
            TorusElt(3, {(1, 2): B(3, 2, 1)})

    @pytest.mark.parametrize("n", [3, 4])
    def test_repeated_coordinate_commutators_vanish_exhaustive(self, n):
        gens = [(k, i, l) for k, i in labels(n) for l in range(1, n)]
        for triple in itertools.product(gens, repeat=3):
            if len({g[2] for g in triple}) == 3:
                continue
            acc = torus_generator(n, *triple[0])
            for g in triple[1:]:
                acc = fox_bracket(acc, torus_generator(n, *g))
            assert acc.is_zero()

    def test_repeated_coordinate_commutators_vanish_n5(self):
        n = 5
        gens = [(k, i, l) for k, i in labels(n) for l in range(1, n)]
        for pair in itertools.product(gens, repeat=2):
            if pair[0][2] == pair[1][2]:
                assert fox_bracket(torus_generator(n, *pair[0]), torus_generator(n, *pair[1])).is_zero()
        rng = random.Random(5)
        for _ in range(400):
            seq = [rng.choice(gens) for _ in range(rng.randint(3, 4))]
            if len({g[2] for g in seq}) == len(seq):
                continue
            acc = torus_generator(n, *seq[0])
            for g in seq[1:]:
                acc = fox_bracket(acc, torus_generator(n, *g))
            assert acc.is_zero()


class TestDeletion:
    def test_kills_top_generator(self):
        n = 4
        assert psi_delete(torus_generator(n, n, 1, 1), n).is_zero()

    def test_relabels(self):
        got = psi_delete(torus_generator(3, 3, 1, 1), 2)
        assert got.n == 2 and got.support() == [(1,)]
        assert got.piece((1,)) == B(2, 2, 1)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_brunnian_elements_annihilated(self, n):
        for t in btf_basis(n):
            assert all(psi_delete(t, r).is_zero() for r in range(1, n + 1))

    @pytest.mark.parametrize("n", [4, 5])
    def test_shorter_brackets_detected(self, n):
        # every nonzero square-free bracket of fewer than n - 1 generators survives some deletion
        for length in range(1, n - 1):
            for idx in itertools.permutations(range(1, n), length):
                acc = torus_generator(n, n, idx[0], idx[0])
                for i in idx[1:]:
                    acc = fox_bracket(acc, torus_generator(n, n, i, i))
                if acc:
                    assert any(psi_delete(acc, r) for r in range(1, n + 1))


class TestBasisAndKernel:
    def test_n3(self):
        (t,) = btf_basis(3)
        assert t == fox_bracket(torus_generator(3, 3, 1, 1), torus_generator(3, 3, 2, 2))
        assert t == t_n_sigma(3, (2,))

    def test_n4_count(self):
        assert len(btf_basis(4)) == 2

    @pytest.mark.parametrize("n,rank", [(3, 1), (4, 2), (5, 6), (6, 24)])
    def test_kernel_rank(self, n, rank):
        rep = btf_kernel_report(n)
        assert rep.kernel_dim == rank
        assert rep.spans_equal and rep.ok and rep.pbw_det == 1
        assert btf_kernel_rank(n) == rank

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_no_lower_kernel(self, n):
        for d in range(1, n - 1):
            assert brunnian_kernel(n, d) == []

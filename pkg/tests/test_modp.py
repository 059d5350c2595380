import random

import pytest

from bolza import modp
from bolza import order as bo
from bolza.quadratic import PrimeIdeal, UnsupportedIdealError, ZSqrt2
from bolza.words import REGISTRY, Word, eval_word


def test_split_rep_at_seven():
    spec = modp.split_rep("1+2*r2")
    assert spec.m_alpha == (4, 1, 1, 4)
    assert spec.m_beta == (0, 1, 6, 1)


def test_split_rep_relations():
    for gen in ["1+2*r2", "1-2*r2", "1-3*r2", "5+r2", "11-5*r2"]:
        spec = modp.split_rep(gen)
        p = spec.p
        ma, mb = spec.m_alpha, spec.m_beta
        assert modp.is_pm_identity(modp.mat_mul(ma, modp.mat_mul(ma, ma, p), p), p) == -1
        assert modp.is_pm_identity(modp.mat_mul(mb, modp.mat_mul(mb, mb, p), p), p) == -1
        ab = modp.mat_mul(ma, mb, p)
        assert modp.projective_order(ab, p) == 4


def test_matrix_of_is_multiplicative():
    rng = random.Random(11)
    spec = modp.split_rep("1-3*r2")
    for _ in range(50):
        x, y = bo.random_belem(rng), bo.random_belem(rng)
        assert modp.matrix_of(spec, x * y) == modp.mat_mul(modp.matrix_of(spec, x), modp.matrix_of(spec, y), 17)


def test_words_reduce_to_minus_identity():
    assert modp.reduce_word_mod("1+2*r2", REGISTRY["p7_1"].word).is_minus_identity()
    assert modp.reduce_word_mod("1-2*r2", REGISTRY["p7_2"].word).is_minus_identity()


def test_congruence_member():
    assert modp.congruence_member("1+2*r2", Word("aBaBaBaB")) == -1
    assert modp.congruence_member("1+2*r2", Word("a")) is None
    assert modp.congruence_member("11+5*r2", REGISTRY["p71_3"].word) == 1


def test_unsupported_ideals():
    with pytest.raises(UnsupportedIdealError):
        modp.split_rep("3")
    with pytest.raises(UnsupportedIdealError):
        modp.reduction_reps(5)


def test_mat2_arithmetic():
    m = modp.Mat2.of([[1, 2], [3, 5]], 7)
    assert (m * m.inverse()).is_identity()
    assert m.det() == (5 - 6) % 7
    assert (-modp.Mat2.identity(7)).is_minus_identity()


def test_random_sl2_is_in_sl2():
    rng = random.Random(0)
    for _ in range(200):
        a, b, c, d = modp.random_sl2(rng, 11)
        assert (a * d - b * c) % 11 == 1


def test_random_sl2_is_uniform_on_small_field():
    rng = random.Random(1)
    counts: dict = {}
    for _ in range(24 * 400):
        m = modp.random_sl2(rng, 3)
        counts[m] = counts.get(m, 0) + 1
    assert len(counts) == 24
    assert min(counts.values()) > 300 and max(counts.values()) < 500


def test_no_pairs_at_three_and_five():
    assert modp.random_334_pair(3, 1) is None
    assert modp.random_334_pair(5, 1) is None


def test_random_pair_is_reproducible():
    a = modp.random_334_pair(7, 1)
    b = modp.random_334_pair(7, 1)
    assert a == b and modp.is_334_pair(a.m_alpha, a.m_beta, 7)


def test_generation_check():
    spec = modp.split_rep("1+2*r2")
    assert modp.generates_psl2(spec.m_alpha, spec.m_beta, 7)
    # a pair inside the Borel subgroup does not generate
    assert not modp.generates_psl2((1, 1, 0, 1), (2, 0, 0, 4), 7)


def test_reductions_have_different_kernels():
    r1, r2 = modp.reduction_reps(7)
    assert not modp.same_kernel(r1, r2)
    assert modp.same_kernel(r1, r1.conjugated((1, 2, 0, 1)))
    assert modp.classify_kernel(r2) == r2.ideal


def test_image_is_a_homomorphism():
    spec = modp.split_rep("1+2*r2")
    w1, w2 = Word("abAb"), Word("BaaB")
    lhs = spec.image(w1 * w2)
    rhs = modp.mat_mul(spec.image(w1), spec.image(w2), 7)
    assert modp.canon_projective(lhs, 7) == modp.canon_projective(rhs, 7)
    assert modp.canon_projective(modp.matrix_of(spec, eval_word(w1)), 7) == modp.canon_projective(spec.image(w1), 7)

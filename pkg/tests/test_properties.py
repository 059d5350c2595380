"""Property-based checks of the algebraic structure."""

from hypothesis import given, settings
from hypothesis import strategies as st

from bolza import cosets, modp
from bolza import order as bo
from bolza import quotients as qt
from bolza.quadratic import PrimeIdeal, ZSqrt2, residue_map
from bolza.quaternion import quat_mul
from bolza.words import Word, eval_word, free_reduce

small = st.integers(-30, 30)
zs = st.builds(ZSqrt2, small, small)
belems = st.builds(bo.BElem, zs, zs, zs, zs)
words = st.text(alphabet="aAbB", max_size=14).map(Word)
ideals = st.sampled_from(["1+2*r2", "1-2*r2", "1+3*r2", "5-r2", "9+5*r2"])


@given(zs, zs)
def test_zsqrt2_norm_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


@given(belems, belems)
def test_belem_norm_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


@given(belems, belems)
def test_involution_is_anti_automorphism(x, y):
    assert (x * y).star() == y.star() * x.star()
    assert (x + y).star() == x.star() + y.star()
    assert x.star().star() == x


@given(belems, belems, belems)
def test_associativity(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(belems, belems)
def test_basis_change_is_a_ring_map(x, y):
    assert bo.basis_change(x * y) == quat_mul(bo.basis_change(x), bo.basis_change(y))


@given(belems, belems)
def test_mod2_reduction_is_a_ring_map(x, y):
    assert qt.reduce_mod2(x * y) == qt.barq_mul(qt.reduce_mod2(x), qt.reduce_mod2(y))
    assert qt.reduce_mod2(x + y) == qt.reduce_mod2(x) ^ qt.reduce_mod2(y)


@given(belems, belems)
def test_mod_sqrt2_reduction_is_multiplicative(x, y):
    assert qt.reduce_mod_sqrt2(x * y) == qt.tilde_mul(qt.reduce_mod_sqrt2(x), qt.reduce_mod_sqrt2(y))


@given(ideals, zs, zs)
def test_residue_map_is_a_ring_map(gen, x, y):
    I = PrimeIdeal.parse(gen)
    p = I.residue_char
    assert residue_map(I, x * y) == residue_map(I, x) * residue_map(I, y) % p
    assert residue_map(I, x + y) == (residue_map(I, x) + residue_map(I, y)) % p


@given(ideals, belems, belems)
def test_reduction_representation_is_multiplicative(gen, x, y):
    spec = modp.split_rep(gen)
    p = spec.p
    assert modp.matrix_of(spec, x * y) == modp.mat_mul(modp.matrix_of(spec, x), modp.matrix_of(spec, y), p)


@given(words, words)
def test_word_evaluation_is_a_homomorphism(u, v):
    assert eval_word(u * v) == eval_word(u) * eval_word(v)
    assert eval_word(u) * eval_word(u.inverse()) == bo.ONE


@given(words)
def test_free_reduction_idempotent(w):
    assert free_reduce(w.letters) == w.letters


@settings(max_examples=25, deadline=None)
@given(st.lists(st.text(alphabet="aAbB", min_size=1, max_size=8), min_size=1, max_size=2))
def test_todd_coxeter_strategy_independent(extra):
    pres = cosets.TRIANGLE_334.with_relators(*[Word(w) for w in extra])
    results = []
    for strategy in ("hlt", "felsch"):
        try:
            results.append(cosets.todd_coxeter(pres, strategy=strategy, cap=5000).index)
        except cosets.InconclusiveEnumeration:
            results.append(None)
    if None not in results:
        assert results[0] == results[1]

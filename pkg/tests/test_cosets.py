import pytest

from bolza import cosets, modp
from bolza.bounds import trace_bound
from bolza.quadratic import ZSqrt2
from bolza.words import DELTA_WORD, REGISTRY, XY, Word, embed_334, eval_word

STRATEGIES = ("hlt", "felsch")


@pytest.mark.parametrize("strategy", STRATEGIES)
@pytest.mark.parametrize(
    "pres, order",
    [
        (cosets.TRIANGLE_334.with_relators(Word("aBaBaBaB")), 168),
        (cosets.TRIANGLE_334.with_relators(REGISTRY["p7_2"].word), 168),
        (cosets.TRIANGLE_334.with_relators(DELTA_WORD), 24),
        (cosets.TRIANGLE_238.with_relators(embed_334(DELTA_WORD)), 48),
        (cosets.Presentation.parse("aa, bbb, ababab"), 12),
        (cosets.Presentation.parse("aa, bb, ababab"), 6),
        (cosets.Presentation.parse("a, b"), 1),
    ],
)
def test_group_orders(pres, order, strategy):
    assert cosets.group_order(pres, strategy=strategy) == order


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_index_of_ker_h(strategy):
    t = cosets.todd_coxeter(cosets.TRIANGLE_238, [Word("y", XY), Word("xyx", XY)], strategy=strategy)
    assert t.index == 2
    gens = {w.letters for w in cosets.schreier_generators(t)}
    assert gens == {"y", "xyx"}


def test_table_is_consistent():
    pres = cosets.TRIANGLE_334.with_relators(DELTA_WORD)
    t = cosets.todd_coxeter(pres)
    assert t.check(pres.relators)
    assert t.is_complete()


def test_cap_is_inconclusive_not_infinite():
    with pytest.raises(cosets.InconclusiveEnumeration):
        cosets.todd_coxeter(cosets.TRIANGLE_334, cap=500)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("BOLZA_COSET_CAP", "50")
    assert cosets.coset_cap() == 50
    with pytest.raises(cosets.InconclusiveEnumeration):
        cosets.todd_coxeter(cosets.TRIANGLE_334.with_relators(Word("aBaBaBaB")))


def test_unknown_strategy():
    with pytest.raises(ValueError):
        cosets.todd_coxeter(cosets.TRIANGLE_334, strategy="random")


def test_coset_action_sizes():
    assert cosets.coset_action_from_quotient(modp.split_rep("1+2*r2")).index == 168
    assert cosets.coset_action_from_quotient(cosets.trivial_image()).index == 1
    assert cosets.coset_action_from_quotient(cosets.tilde_image()).index == 12
    assert cosets.coset_action_from_quotient(cosets.barq_image()).index == 24


def test_torsion_free_check():
    assert cosets.torsion_free_check(modp.split_rep("1+2*r2"))
    assert not cosets.torsion_free_check(cosets.tilde_image())
    assert not cosets.torsion_free_check(cosets.trivial_image())


@pytest.mark.parametrize("n, g", [(24, 2), (168, 8), (2448, 103), (6072, 254)])
def test_genus(n, g):
    assert cosets.genus(n) == g


def test_genus_errors():
    with pytest.raises(cosets.InvalidCoverError):
        cosets.genus(12)
    with pytest.raises(cosets.InvalidCoverError):
        cosets.genus(24, torsion_free=False)


def test_schreier_generators_of_trivial_index():
    t = cosets.todd_coxeter(cosets.Presentation.parse("aaa, bbb, abababab"), [Word("a"), Word("b")])
    assert [w.letters for w in cosets.schreier_generators(t)] == ["a", "b"]


def test_schreier_generators_lie_in_kernel():
    spec = modp.split_rep("1-2*r2")
    t = cosets.coset_action_from_quotient(spec)
    for w in cosets.schreier_generators(t):
        assert t.act(0, w) == 0
        assert modp.is_pm_identity(spec.image(w), 7)


def test_bolza_systolic_trace():
    rep = cosets.cover_report(cosets.barq_image())
    assert rep.index == 24 and rep.genus == 2
    assert abs(rep.min_trace) == ZSqrt2(2, 2)


@pytest.mark.parametrize("ideal, trace", [("1+2*r2", ZSqrt2(7, 4)), ("1-2*r2", ZSqrt2(9, 6))])
def test_min_trace_scan(ideal, trace):
    res = cosets.min_trace_scan(modp.split_rep(ideal), max_len=12)
    assert res["abs_trace"] == trace
    assert "candidate" in res["status"]
    assert abs(eval_word(res["word"]).trace()) == trace


@pytest.mark.parametrize("p", [7, 17])
def test_schreier_traces_exceed_the_bound(p):
    for spec in modp.reduction_reps(p):
        rep = cosets.cover_report(spec)
        assert rep.torsion_free
        bound = float(trace_bound(p, 2))
        assert all(abs(float(t)) > bound for _, _, t in rep.generators)


def test_alternating_words_count():
    assert sum(1 for _ in cosets.alternating_words(3)) == 4 + 8 + 16


@pytest.mark.skipif(not __import__("os").environ.get("BOLZA_SLOW"), reason="about a minute; set BOLZA_SLOW=1")
def test_two_words_normally_generate_the_p71_kernel():
    words = [REGISTRY["p71_4"].word, REGISTRY["p71_5"].word]
    assert cosets.normal_closure_index(words, strategy="felsch", cap=500_000) == modp.psl2_order(71)

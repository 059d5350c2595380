import zlib

import pytest

from bolza import cosets
from bolza.quadratic import ZSqrt2
from bolza.words import (
    AB,
    C_WORDS,
    DELTA_WORD,
    REGISTRY,
    XY,
    NotInKernelError,
    RegistryError,
    Word,
    WordSyntaxError,
    _load_registry,
    c_relation,
    cyclic_reduce,
    embed_334,
    eval_word,
    free_reduce,
    rewrite_ker_h,
)


def test_free_and_cyclic_reduction():
    assert free_reduce("abBA") == ""
    assert free_reduce("aAbab") == "bab"
    assert cyclic_reduce("Babb") == "ab"


def test_parse_detects_alphabet():
    assert Word.parse("xyX").alphabet == XY
    assert Word.parse("abA").alphabet == AB
    assert Word.parse("1").letters == ""


@pytest.mark.parametrize("bad", ["abc", "ax", "a b"])
def test_malformed_words(bad):
    with pytest.raises(WordSyntaxError):
        Word.parse(bad)


def test_word_algebra():
    w = Word("ab")
    assert (w * w.inverse()).letters == ""
    assert (w**3).letters == "ababab"
    assert (w**-1).letters == "BA"
    assert w.conjugate(Word("a")).letters == "ba"
    assert Word("aAb").count("a") == 0


def test_eval_uses_inverse_letters():
    assert eval_word("aA") == eval_word("")
    assert eval_word("aaa") == -eval_word("")


def test_delta_embedding():
    assert embed_334(DELTA_WORD).letters == "yxyxyxyxYxYxYxYx"


@pytest.mark.parametrize("w, expected", [("xyx", "b"), ("y", "a"), ("xyyxy", "bba"), ("yy", "aa"), ("", "")])
def test_rewrite_ker_h(w, expected):
    assert rewrite_ker_h(Word(w, XY)).letters == expected


def test_rewrite_ker_h_rejects_odd_words():
    with pytest.raises(NotInKernelError):
        rewrite_ker_h(Word("xy", XY))


def test_rewrite_agrees_in_the_triangle_group():
    # check equality of w and embed(rewrite(w)) via the regular action of a finite quotient
    t = cosets.todd_coxeter(cosets.TRIANGLE_238.with_relators(embed_334(DELTA_WORD)))
    for w in ["xyxy", "yxYxyy", "xyyxYxyx", "YxyxYYxyxy"]:
        w = Word(w, XY)
        back = embed_334(rewrite_ker_h(w))
        assert t.act(0, w) == t.act(0, back)


def test_c_words_and_relation():
    for w in C_WORDS:
        assert eval_word(w).trace() == ZSqrt2(-2, -2)
    assert eval_word(c_relation()) in (eval_word(""), -eval_word(""))


def test_registry_checksums_are_enforced():
    good = "k\tab\t-\t-\t-\n#crc32\tk\t%08x\n" % zlib.crc32(b"ab")
    assert _load_registry(good)["k"].word.letters == "ab"
    with pytest.raises(RegistryError):
        _load_registry("k\tab\t-\t-\t-\n#crc32\tk\t00000000\n")


def test_registry_traces():
    for e in REGISTRY.values():
        if e.trace is not None:
            assert eval_word(e.word).trace() == e.trace, e.key


def test_registry_unconfirmed_entry_is_marked():
    assert not REGISTRY["p23_2"].trace_confirmed
    assert REGISTRY["p71_3"].sign is None

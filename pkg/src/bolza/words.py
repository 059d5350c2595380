"""Free-group words in alpha, beta (or x, y) and their evaluation in the Bolza order.

Words are ASCII strings: ``a``/``A`` for alpha and its inverse, ``b``/``B`` for
beta, ``x``/``X`` and ``y``/``Y`` for the generators of the (2,3,8) triangle
group. A word never mixes the two alphabets.
"""

from __future__ import annotations

import re
import zlib
from dataclasses import dataclass
from functools import reduce
from importlib import resources

from .order import ALPHA, BETA, ONE, BElem
from .quadratic import ZSqrt2

AB = "ab"
XY = "xy"
_ALPHABETS = {AB: "aAbB", XY: "xXyY"}


class WordSyntaxError(ValueError):
    pass


class NotInKernelError(ValueError):
    """The word has an odd number of x letters, so it is not in ker h."""


def _inv_letter(c: str) -> str:
    return c.swapcase()


def free_reduce(s: str) -> str:
    out: list = []
    for c in s:
        if out and out[-1] == _inv_letter(c):
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def cyclic_reduce(s: str) -> str:
    s = free_reduce(s)
    while len(s) > 1 and s[0] == _inv_letter(s[-1]):
        s = s[1:-1]
    return s


@dataclass(frozen=True)
class Word:
    """A freely reduced word. ``alphabet`` is ``"ab"`` or ``"xy"``."""

    letters: str = ""
    alphabet: str = AB

    def __post_init__(self):
        if self.alphabet not in _ALPHABETS:
            raise WordSyntaxError(f"unknown alphabet {self.alphabet!r}")
        bad = set(self.letters) - set(_ALPHABETS[self.alphabet])
        if bad:
            raise WordSyntaxError(f"letters {sorted(bad)} not in alphabet {self.alphabet}")
        object.__setattr__(self, "letters", free_reduce(self.letters))

    @classmethod
    def parse(cls, text: str, alphabet: str | None = None) -> "Word":
        text = text.strip()
        if text in ("", "1", "e"):
            return cls("", alphabet or AB)
        if not re.fullmatch(r"[aAbBxXyY]+", text):
            raise WordSyntaxError(f"malformed word {text!r}")
        if alphabet is None:
            alphabet = XY if set(text) <= set(_ALPHABETS[XY]) else AB
        return cls(text, alphabet)

    def __str__(self):
        return self.letters or "1"

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if self.alphabet != other.alphabet and self.letters and other.letters:
            raise WordSyntaxError("cannot multiply words over different alphabets")
        alphabet = self.alphabet if self.letters else other.alphabet
        return Word(self.letters + other.letters, alphabet)

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(base.letters * abs(n), self.alphabet)

    def inverse(self) -> "Word":
        return Word("".join(_inv_letter(c) for c in reversed(self.letters)), self.alphabet)

    def conjugate(self, by: "Word") -> "Word":
        """by^-1 * self * by"""
        return by.inverse() * self * by

    def count(self, gen: str) -> int:
        """Number of occurrences of ``gen`` counting both exponents."""
        return sum(1 for c in self.letters if c.lower() == gen)


def parse(text: str, alphabet: str | None = None) -> Word:
    return Word.parse(text, alphabet)


def serialize(w: Word) -> str:
    return w.letters


# ---------------------------------------------------------------------------
# evaluation

_LETTER_VALUES = {
    "a": ALPHA,
    "A": ALPHA.star(),
    "b": BETA,
    "B": BETA.star(),
}


def eval_word(w) -> BElem:
    """Product of the letters in the Bolza order (alpha^-1 = alpha^* and so on)."""
    if isinstance(w, str):
        w = Word.parse(w, AB)
    if w.alphabet != AB:
        raise WordSyntaxError("eval_word needs a word in alpha, beta")
    return reduce(lambda acc, c: acc * _LETTER_VALUES[c], w.letters, ONE)


# ---------------------------------------------------------------------------
# Delta(3,3,4) inside Delta(2,3,8): alpha = y, beta = xyx

_EMBED = {"a": "y", "A": "Y", "b": "xyx", "B": "XYX"}


def normalize_x(s: str) -> str:
    """Use x^2 = 1: replace X by x and cancel adjacent pairs."""
    s = s.replace("X", "x")
    while "xx" in s:
        s = free_reduce(s.replace("xx", ""))
    return s


def embed_334(w: Word, normalize: bool = True) -> Word:
    if w.alphabet != AB:
        raise WordSyntaxError("embed_334 needs a word in alpha, beta")
    s = "".join(_EMBED[c] for c in w.letters)
    return Word(normalize_x(s) if normalize else s, XY)


def _syllables(s: str) -> list:
    """Split into x letters and y-exponents reduced into {1, 2}, using x^2 = y^3 = 1."""
    s = normalize_x(s.replace("Y", "yy"))
    out: list = []
    for c in s:
        if c == "x":
            if out and out[-1] == "x":
                out.pop()
            else:
                out.append("x")
        else:
            if out and out[-1] != "x":
                n = (out.pop() + 1) % 3
                if n:
                    out.append(n)
            else:
                out.append(1)
    return out


def rewrite_ker_h(w: Word) -> Word:
    """Rewrite an element of ker(h) in terms of alpha = y and beta = xyx.

    Each step strips a prefix: ``x y^n x`` becomes ``beta^n`` and a bare ``y^n``
    becomes ``alpha^n``. This is the induction on the four word types.
    """
    if w.alphabet != XY:
        raise WordSyntaxError("rewrite_ker_h needs a word in x, y")
    if w.count("x") % 2:
        raise NotInKernelError(f"{w} has an odd number of x letters")
    syl = _syllables(w.letters)
    out = []
    k = 0
    while k < len(syl):
        if syl[k] == "x":
            # types (1), (3): syllables alternate, so syl[k + 2] is the closing x
            out.append("b" * syl[k + 1])
            k += 3
        else:
            # types (2), (4)
            out.append("a" * syl[k])
            k += 1
    return Word("".join(out), AB)


# ---------------------------------------------------------------------------
# registry of named words


@dataclass(frozen=True)
class RegistryEntry:
    key: str
    word: Word
    ideal: ZSqrt2 | None
    sign: int | None
    trace: ZSqrt2 | None
    trace_confirmed: bool
    checksum: str

    @property
    def attributed(self) -> bool:
        return self.ideal is not None


class RegistryError(ValueError):
    pass


def _load_registry(text: str) -> dict:
    entries: dict = {}
    sums: dict = {}
    for line in text.splitlines():
        if line.startswith("#crc32\t"):
            _, key, crc = line.split("\t")
            sums[key] = crc
            continue
        if not line.strip() or line.startswith("#"):
            continue
        key, word, ideal, sign, trace = line.split("\t")
        confirmed = not trace.startswith("~")
        trace = trace.lstrip("~")
        entries[key] = (word, ideal, sign, trace, confirmed)
    out = {}
    for key, (word, ideal, sign, trace, confirmed) in entries.items():
        crc = f"{zlib.crc32(word.encode()):08x}"
        if sums.get(key) != crc:
            raise RegistryError(f"checksum mismatch for {key}: file says {sums.get(key)}, word gives {crc}")
        out[key] = RegistryEntry(
            key=key,
            word=Word(word, AB),
            ideal=None if ideal == "-" else ZSqrt2.parse(ideal),
            sign=None if sign in "-?" else int(sign),
            trace=None if trace == "-" else ZSqrt2.parse(trace),
            trace_confirmed=confirmed,
            checksum=crc,
        )
    return out


REGISTRY = _load_registry(resources.files("bolza").joinpath("data/words.tsv").read_text("utf-8"))

DELTA_WORD = REGISTRY["delta"].word
DELTA_ALT_WORD = REGISTRY["delta_alt"].word
C_WORDS = tuple(REGISTRY[k].word for k in ("c1", "c2", "c3", "c4"))


def c_relation() -> Word:
    """c4^-1 c3^-1 c2 c4 c1 c2^-1 c1^-1 c3 written out in alpha, beta."""
    c1, c2, c3, c4 = C_WORDS
    return c4.inverse() * c3.inverse() * c2 * c4 * c1 * c2.inverse() * c1.inverse() * c3


def registry_by_ideal(ideal: ZSqrt2) -> list:
    from .quadratic import are_associate

    return [e for e in REGISTRY.values() if e.ideal is not None and are_associate(e.ideal, ideal)]

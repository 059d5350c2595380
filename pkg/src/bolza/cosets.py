"""Coset enumeration and coset actions for two-generator groups.

Tables have four columns, one per generator and inverse: ``a A b B`` for the
(3,3,4) alphabet and ``x X y Y`` for the (2,3,8) alphabet. Entry ``-1`` means
undefined while an enumeration is running.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .words import AB, XY, Word, eval_word, normalize_x

DEFAULT_CAP = 100_000
_COLUMNS = {AB: "aAbB", XY: "xXyY"}
_INV_COL = (1, 0, 3, 2)


class InconclusiveEnumeration(RuntimeError):
    """The coset cap was reached. This says nothing about finiteness."""


def coset_cap() -> int:
    return int(os.environ.get("BOLZA_COSET_CAP", DEFAULT_CAP))


@dataclass(frozen=True)
class Presentation:
    relators: tuple
    alphabet: str = AB

    def __post_init__(self):
        rels = []
        for r in self.relators:
            w = r if isinstance(r, Word) else Word.parse(r, self.alphabet)
            if w.alphabet != self.alphabet:
                raise ValueError(f"relator {w} is not over {self.alphabet}")
            rels.append(Word(_cyclic(w.letters), self.alphabet))
        object.__setattr__(self, "relators", tuple(r for r in rels if r.letters))

    @classmethod
    def parse(cls, text: str, alphabet: str | None = None) -> "Presentation":
        words = [t for t in text.replace(";", ",").split(",") if t.strip()]
        alphabet = alphabet or (XY if all(set(t.strip()) <= set("xXyY") for t in words) else AB)
        return cls(tuple(Word.parse(t, alphabet) for t in words), alphabet)

    def with_relators(self, *extra) -> "Presentation":
        return Presentation(self.relators + tuple(extra), self.alphabet)


def _cyclic(s: str) -> str:
    from .words import cyclic_reduce

    return cyclic_reduce(s)


TRIANGLE_334 = Presentation((Word("aaa"), Word("bbb"), Word("abababab")), AB)
TRIANGLE_238 = Presentation((Word("xx", XY), Word("yyy", XY), Word("xy" * 8, XY)), XY)


@dataclass
class CosetTable:
    table: np.ndarray
    alphabet: str = AB
    meta: dict = field(default_factory=dict)

    @property
    def index(self) -> int:
        return int(self.table.shape[0])

    def column(self, letter: str) -> int:
        return _COLUMNS[self.alphabet].index(letter)

    def act(self, coset: int, w) -> int:
        if isinstance(w, str):
            w = Word.parse(w, self.alphabet)
        for c in w.letters:
            coset = int(self.table[coset, self.column(c)])
        return coset

    def is_complete(self) -> bool:
        return bool((self.table >= 0).all())

    def check(self, relators=(), subgroup=()) -> bool:
        """Complete, columns are mutually inverse permutations, relators trivial everywhere,
        subgroup generators fix coset 0."""
        t = self.table
        n = self.index
        if not self.is_complete():
            return False
        for k in range(4):
            if not np.array_equal(t[t[:, k], _INV_COL[k]], np.arange(n)):
                return False
        for r in relators:
            cols = [self.column(c) for c in r.letters]
            cur = np.arange(n)
            for k in cols:
                cur = t[cur, k]
            if not np.array_equal(cur, np.arange(n)):
                return False
        return all(self.act(0, w) == 0 for w in subgroup)

    def permutation(self, letter: str) -> np.ndarray:
        return self.table[:, self.column(letter)]

    def to_json(self) -> dict:
        return {"alphabet": self.alphabet, "index": self.index, "table": self.table.tolist()}


# ---------------------------------------------------------------------------
# Todd-Coxeter


class _Enumerator:
    def __init__(self, pres: Presentation, subgroup, cap: int):
        self.cols = _COLUMNS[pres.alphabet]
        self.rels = [[self.cols.index(c) for c in r.letters] for r in pres.relators]
        self.subgroup = [[self.cols.index(c) for c in w.letters] for w in subgroup]
        self.cap = cap
        self.table = [[-1, -1, -1, -1]]
        self.parent = [0]
        self.queue: list = []
        self.deductions: list = []
        self.live = 1
        self.total = 1

    # -- bookkeeping --

    def alive(self, c: int) -> bool:
        return self.parent[c] == c

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def define(self, c: int, x: int) -> int:
        if self.live >= self.cap:
            raise InconclusiveEnumeration(f"coset cap {self.cap} reached")
        n = len(self.table)
        self.table.append([-1, -1, -1, -1])
        self.parent.append(n)
        self.table[c][x] = n
        self.table[n][_INV_COL[x]] = c
        self.live += 1
        self.total += 1
        self.deductions.append((c, x))
        return n

    def merge(self, k: int, l: int) -> None:
        a, b = self.rep(k), self.rep(l)
        if a != b:
            lo, hi = min(a, b), max(a, b)
            self.parent[hi] = lo
            self.queue.append(hi)
            self.live -= 1

    def coincidence(self, a: int, b: int) -> None:
        self.queue = []
        self.merge(a, b)
        i = 0
        tab = self.table
        while i < len(self.queue):
            e = self.queue[i]
            i += 1
            for x in range(4):
                f = tab[e][x]
                if f < 0:
                    continue
                xi = _INV_COL[x]
                tab[f][xi] = -1
                mu, nu = self.rep(e), self.rep(f)
                if tab[mu][x] >= 0:
                    self.merge(nu, tab[mu][x])
                elif tab[nu][xi] >= 0:
                    self.merge(mu, tab[nu][xi])
                else:
                    tab[mu][x] = nu
                    tab[nu][xi] = mu
                    self.deductions.append((mu, x))

    def scan(self, c: int, w: list, fill: bool) -> None:
        tab = self.table
        f, i = c, 0
        b, j = c, len(w) - 1
        while True:
            while i <= j and tab[f][w[i]] >= 0:
                f = tab[f][w[i]]
                i += 1
            if i > j:
                if f != c:
                    self.coincidence(f, c)
                return
            while j >= i and tab[b][_INV_COL[w[j]]] >= 0:
                b = tab[b][_INV_COL[w[j]]]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                tab[f][w[i]] = b
                tab[b][_INV_COL[w[i]]] = f
                self.deductions.append((f, w[i]))
                return
            if not fill:
                return
            self.define(f, w[i])

    # -- strategies --

    def hlt(self) -> None:
        for w in self.subgroup:
            self.scan(0, w, fill=True)
        c = 0
        while c < len(self.table):
            if self.alive(c):
                for r in self.rels:
                    self.scan(c, r, fill=True)
                    if not self.alive(c):
                        break
                if self.alive(c):
                    for x in range(4):
                        if self.table[c][x] < 0:
                            self.define(c, x)
            c += 1

    def _process_deductions(self, conj: dict) -> None:
        while self.deductions:
            c, x = self.deductions.pop()
            if not self.alive(c):
                continue
            for w in conj[x]:
                self.scan(c, w, fill=False)
                if not self.alive(c):
                    break
            d = self.table[c][x]
            if d >= 0 and self.alive(d):
                for w in conj[_INV_COL[x]]:
                    self.scan(d, w, fill=False)
                    if not self.alive(d):
                        break

    def felsch(self) -> None:
        # relator conjugates grouped by first letter
        conj: dict = {x: [] for x in range(4)}
        for r in self.rels:
            for rr in (r, [_INV_COL[x] for x in reversed(r)]):
                for k in range(len(rr)):
                    w = rr[k:] + rr[:k]
                    if w not in conj[w[0]]:
                        conj[w[0]].append(w)
        for w in self.subgroup:
            self.scan(0, w, fill=True)
        self._process_deductions(conj)
        while True:
            c = 0
            while True:
                while c < len(self.table) and not self.alive(c):
                    c += 1
                if c >= len(self.table):
                    break
                holes = [x for x in range(4) if self.table[c][x] < 0]
                if not holes:
                    c += 1
                    continue
                self.define(c, holes[0])
                self._process_deductions(conj)
                for w in self.subgroup:
                    self.scan(0, w, fill=False)
                self._process_deductions(conj)
            # final look-ahead over all cosets; deductions found here restart the loop
            before = self.live
            for k in range(len(self.table)):
                if self.alive(k):
                    for r in self.rels:
                        self.scan(k, r, fill=False)
                        if not self.alive(k):
                            break
            for w in self.subgroup:
                self.scan(0, w, fill=False)
            if not self.deductions and before == self.live and self._complete():
                return
            self._process_deductions(conj)

    def _complete(self) -> bool:
        return all(min(self.table[c]) >= 0 for c in range(len(self.table)) if self.alive(c))

    def compact(self) -> np.ndarray:
        live = [c for c in range(len(self.table)) if self.alive(c)]
        pos = {c: k for k, c in enumerate(live)}
        out = np.array([[pos[self.rep(v)] for v in self.table[c]] for c in live], dtype=np.int64)
        return standardize(out)


def standardize(table: np.ndarray) -> np.ndarray:
    """Renumber cosets in BFS order from coset 0 (columns in order)."""
    n = table.shape[0]
    order = [0]
    pos = {0: 0}
    k = 0
    while k < len(order):
        for v in table[order[k]]:
            v = int(v)
            if v not in pos:
                pos[v] = len(order)
                order.append(v)
        k += 1
    if len(order) != n:
        raise ValueError("coset table is not transitive")
    perm = np.array([pos[c] for c in range(n)])
    out = np.empty_like(table)
    out[perm] = perm[table]
    return out


def todd_coxeter(pres: Presentation, subgroup=(), strategy: str = "hlt", cap: int | None = None) -> CosetTable:
    """Coset table of the subgroup generated by ``subgroup`` (default: trivial subgroup)."""
    subgroup = [w if isinstance(w, Word) else Word.parse(w, pres.alphabet) for w in subgroup]
    enum = _Enumerator(pres, subgroup, cap or coset_cap())
    if strategy == "hlt":
        enum.hlt()
    elif strategy == "felsch":
        enum.felsch()
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    table = CosetTable(enum.compact(), pres.alphabet, {"strategy": strategy, "cosets_defined": enum.total})
    if not table.check(pres.relators, subgroup):
        raise AssertionError("enumeration produced an inconsistent table")
    return table


def group_order(pres: Presentation, **kw) -> int:
    return todd_coxeter(pres, (), **kw).index


# ---------------------------------------------------------------------------
# coset actions from finite quotients


@dataclass(frozen=True)
class FiniteImage:
    """A homomorphism onto a finite group given by generator images.

    ``mul`` multiplies images and ``canon`` maps an image to a hashable normal
    form (for example, a matrix up to sign).
    """

    images: dict
    mul: object
    canon: object
    identity: object
    alphabet: str = AB

    def image(self, w) -> object:
        if isinstance(w, str):
            w = Word.parse(w, self.alphabet)
        x = self.identity
        for c in w.letters:
            x = self.mul(x, self.images[c])
        return self.canon(x)

    def is_trivial(self, w) -> bool:
        return self.image(w) == self.canon(self.identity)

    def element_order(self, w, limit: int = 10_000) -> int:
        x = self.image(w)
        y = x
        one = self.canon(self.identity)
        for k in range(1, limit):
            if y == one:
                return k
            y = self.canon(self.mul(y, x))
        raise ValueError("order exceeds limit")


def psl2_image(spec) -> FiniteImage:
    from .modp import canon_projective, mat_mul

    p = spec.p
    return FiniteImage(
        images=spec.letter_images(),
        mul=lambda x, y: mat_mul(x, y, p),
        canon=lambda x: canon_projective(x, p),
        identity=(1, 0, 0, 1),
    )


def barq_image(level: str = "eps*beta'") -> FiniteImage:
    """alpha, beta into Q-bar^1 / Q-bar^1(level); elements are coset labels."""
    from . import order as bo
    from . import quotients as qt

    ideal = qt._level_ideals()[level]
    sub = set(int(b) for b in qt.congruence_units(ideal, norm_one_only=True))
    mt = qt.mul_table()

    def canon(x):
        # smallest byte in the coset x * N
        return min(int(mt[x, n]) for n in sub)

    imgs = {}
    for letter, elem in (("a", bo.ALPHA), ("A", bo.ALPHA.star()), ("b", bo.BETA), ("B", bo.BETA.star())):
        imgs[letter] = qt.reduce_mod2(elem)
    return FiniteImage(images=imgs, mul=lambda x, y: int(mt[x, y]), canon=canon, identity=1)


def tilde_image() -> FiniteImage:
    """alpha, beta into the units of Q_B / sqrt2 Q_B."""
    from . import order as bo
    from . import quotients as qt

    imgs = {
        letter: qt.reduce_mod_sqrt2(elem)
        for letter, elem in (("a", bo.ALPHA), ("A", bo.ALPHA.star()), ("b", bo.BETA), ("B", bo.BETA.star()))
    }
    return FiniteImage(images=imgs, mul=qt.tilde_mul, canon=lambda x: x, identity=1)


def trivial_image(alphabet: str = AB) -> FiniteImage:
    return FiniteImage(
        images={c: 0 for c in _COLUMNS[alphabet]}, mul=lambda x, y: 0, canon=lambda x: x, identity=0, alphabet=alphabet
    )


def _as_image(phi) -> FiniteImage:
    if isinstance(phi, FiniteImage):
        return phi
    return psl2_image(phi)


def coset_action_from_quotient(phi) -> CosetTable:
    """Right-regular action on the image group: the coset table of ker phi."""
    phi = _as_image(phi)
    cols = _COLUMNS[phi.alphabet]
    one = phi.canon(phi.identity)
    index = {one: 0}
    elems = [one]
    rows: list = []
    k = 0
    while k < len(elems):
        x = elems[k]
        row = []
        for c in cols:
            y = phi.canon(phi.mul(x, phi.images[c]))
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
            row.append(index[y])
        rows.append(row)
        k += 1
    table = CosetTable(np.array(rows, dtype=np.int64), phi.alphabet, {"source": "quotient"})
    return table


def torsion_free_check(phi) -> bool:
    """The torsion of the triangle group injects: images of the elliptic generators keep their orders."""
    phi = _as_image(phi)
    if phi.alphabet == AB:
        expected = (("a", 3), ("b", 3), ("ab", 4))
    else:
        expected = (("x", 2), ("y", 3), ("xy", 8))
    return all(phi.element_order(w) == n for w, n in expected)


class InvalidCoverError(ValueError):
    pass


def genus(n: int, torsion_free: bool = True, triangle: tuple = (3, 3, 4)) -> int:
    """Riemann-Hurwitz for a torsion-free normal subgroup of index n."""
    if not torsion_free:
        raise InvalidCoverError("genus formula needs a torsion-free subgroup")
    chi = Fraction(2) - sum(1 - Fraction(1, m) for m in triangle)
    if chi >= 0:
        raise InvalidCoverError("triangle group is not hyperbolic")
    g = 1 - n * chi / 2
    if g.denominator != 1:
        raise InvalidCoverError(f"index {n} does not give an integral genus")
    return int(g)


# ---------------------------------------------------------------------------
# Schreier generators


def schreier_transversal(table: CosetTable) -> list:
    """Words t_c with 0 . t_c = c, from a BFS tree over all four columns."""
    cols = _COLUMNS[table.alphabet]
    words: list = [None] * table.index
    words[0] = ""
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for k, letter in enumerate(cols):
            d = int(table.table[c, k])
            if words[d] is None:
                words[d] = words[c] + letter
                queue.append(d)
    return words


def schreier_generators(table: CosetTable, normalize_involution: bool | None = None) -> list:
    """Nontrivial t_c s t_{cs}^-1 for each coset c and positive generator s.

    For the (2,3,8) alphabet the words are also reduced with x^2 = 1, so the
    generators of ker h come out as y and xyx.
    """
    if normalize_involution is None:
        normalize_involution = table.alphabet == XY
    cols = _COLUMNS[table.alphabet]
    trans = schreier_transversal(table)
    out: list = []
    seen: set = set()
    for c in range(table.index):
        for k in (0, 2):
            d = int(table.table[c, k])
            w = Word(trans[c] + cols[k], table.alphabet) * Word(trans[d], table.alphabet).inverse()
            s = normalize_x(w.letters) if normalize_involution else w.letters
            if s and s not in seen:
                seen.add(s)
                out.append(Word(s, table.alphabet))
    return out


# ---------------------------------------------------------------------------
# cover reports and trace scans


def _abs_float(z) -> float:
    return abs(float(z))


@dataclass
class CoverReport:
    index: int
    torsion_free: bool
    genus: int | None
    generators: list
    min_trace: object
    min_trace_word: Word | None

    def to_json(self) -> dict:
        from .quadratic import decimal_value

        return {
            "index": self.index,
            "torsion_free": self.torsion_free,
            "genus": self.genus,
            "schreier_generators": [
                {"word": str(w), "element": e.to_json(), "trace": str(t)} for w, e, t in self.generators
            ],
            "min_trace": None if self.min_trace is None else str(self.min_trace),
            "min_trace_decimal": None if self.min_trace is None else str(decimal_value(abs(self.min_trace))),
            "min_trace_word": None if self.min_trace_word is None else str(self.min_trace_word),
        }


def cover_report(phi, with_generators: bool = True) -> CoverReport:
    phi = _as_image(phi)
    table = coset_action_from_quotient(phi)
    tf = torsion_free_check(phi)
    g = genus(table.index) if tf and table.index % 24 == 0 else None
    gens = []
    best, best_word = None, None
    if with_generators:
        for w in schreier_generators(table):
            e = eval_word(w)
            if e == 1 or e == -1:
                continue
            t = e.trace()
            gens.append((w, e, t))
            if best is None or _abs_float(t) < _abs_float(best):
                best, best_word = t, w
    return CoverReport(table.index, tf, g, gens, best, best_word)


def alternating_words(max_len: int):
    """All words alternating between alpha^+-1 and beta^+-1, up to ``max_len`` letters.

    Since alpha^2 = -alpha^-1 and beta^2 = -beta^-1, every element of the (3,3,4)
    group is represented up to sign by such a word.
    """
    stack = [(c,) for c in "aAbB"]
    while stack:
        w = stack.pop()
        yield "".join(w)
        if len(w) < max_len:
            nxt = "bB" if w[-1] in "aA" else "aA"
            for c in nxt:
                stack.append(w + (c,))


def min_trace_scan(phi, max_len: int = 12, extra_words=()) -> dict:
    """Least |Tr| over nontrivial kernel elements among bounded words.

    This is a candidate bound for the systole, not a certified one.
    """
    from .quadratic import decimal_value

    phi = _as_image(phi)
    one = phi.canon(phi.identity)
    best, best_word, checked = None, None, 0
    candidates = list(extra_words)
    # incremental images along a DFS
    stack = [("", phi.identity)]
    while stack:
        w, x = stack.pop()
        if w:
            checked += 1
            if phi.canon(x) == one:
                candidates.append(Word(w, AB))
        if len(w) < max_len:
            nxt = "aAbB" if not w else ("bB" if w[-1] in "aA" else "aA")
            for c in nxt:
                stack.append((w + c, phi.mul(x, phi.images[c])))
    members = 0
    for w in candidates:
        e = eval_word(w)
        if e == 1 or e == -1:
            continue
        members += 1
        t = e.trace()
        if best is None or _abs_float(t) < _abs_float(best):
            best, best_word = t, w
    return {
        "min_trace": best,
        "abs_trace": None if best is None else abs(best),
        "decimal": None if best is None else str(decimal_value(abs(best))),
        "word": None if best_word is None else str(best_word),
        "words_checked": checked,
        "kernel_elements": members,
        "max_len": max_len,
        "status": "candidate (bounded search, not a certified systole)",
    }


def normal_closure_index(words, base: Presentation = TRIANGLE_334, strategy: str = "hlt", cap: int | None = None) -> int:
    """Order of the triangle group modulo the normal closure of ``words``."""
    return group_order(base.with_relators(*words), strategy=strategy, cap=cap)

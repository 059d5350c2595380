"""Finite groups given by Cayley tables, and identification against a small catalog.

Elements are the integers ``0..n-1``; ``table[i, j]`` is the index of ``g_i g_j``.
Identification first compares cheap invariants (order statistics, centre,
derived subgroup) and then confirms with an explicit isomorphism built from
generator images.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np


class NotAGroupError(ValueError):
    pass


class FiniteGroup:
    def __init__(self, table, check: bool = True):
        table = np.asarray(table, dtype=np.int64)
        n = table.shape[0]
        if table.shape != (n, n):
            raise NotAGroupError("Cayley table must be square")
        self.table = table
        self.order = n
        ident = [i for i in range(n) if np.array_equal(table[i], np.arange(n))]
        if not ident or not np.array_equal(table[:, ident[0]], np.arange(n)):
            raise NotAGroupError("no two-sided identity")
        self.identity = ident[0]
        inv = np.full(n, -1)
        rows, cols = np.nonzero(table == self.identity)
        inv[rows] = cols
        if (inv < 0).any() or len(rows) != n or not np.array_equal(table[inv, np.arange(n)], np.full(n, self.identity)):
            raise NotAGroupError("some element has no two-sided inverse")
        self.inverse = inv
        if check:
            for row in table:
                if len(set(row.tolist())) != n:
                    raise NotAGroupError("a row of the table is not a permutation")
            self._check_associative()

    def _check_associative(self) -> None:
        # Light's test: enough to check (x s) y = x (s y) for s in a generating set
        t = self.table
        for s in self.generators():
            if not np.array_equal(t[t[:, s], :], t[:, t[s, :]]):
                raise NotAGroupError("multiplication is not associative")

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def power(self, i: int, k: int) -> int:
        out = self.identity
        for _ in range(k % int(self.element_orders()[i])):
            out = self.table[out, i]
        return int(out)

    @lru_cache(maxsize=None)
    def element_orders(self) -> np.ndarray:
        n = self.order
        idx = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        pw = idx.copy()
        k = 1
        while (orders == 0).any():
            hit = (pw == self.identity) & (orders == 0)
            orders[hit] = k
            pw = self.table[pw, idx]
            k += 1
            if k > n + 1:
                raise NotAGroupError("element of infinite order in a finite table")
        return orders

    def order_statistics(self) -> tuple:
        return tuple(sorted(Counter(self.element_orders().tolist()).items()))

    # -- subgroups -----------------------------------------------------------

    def closure(self, gens) -> np.ndarray:
        """Subgroup generated by ``gens`` as a sorted index array."""
        seen = np.zeros(self.order, dtype=bool)
        seen[self.identity] = True
        frontier = [self.identity]
        gens = [int(g) for g in gens]
        while frontier:
            nxt = np.unique(self.table[np.asarray(frontier)][:, gens].ravel()) if gens else np.array([], int)
            nxt = nxt[~seen[nxt]]
            seen[nxt] = True
            frontier = nxt.tolist()
        return np.nonzero(seen)[0]

    def conjugate(self, x: int, g: int) -> int:
        """g^-1 x g"""
        return int(self.table[self.table[self.inverse[g], x], g])

    def normal_closure(self, gens) -> np.ndarray:
        gens = list(int(g) for g in gens)
        sub = self.closure(gens)
        while True:
            conj = {self.conjugate(int(h), int(g)) for h in sub for g in self.generators()}
            bigger = self.closure(sorted(set(sub.tolist()) | conj))
            if len(bigger) == len(sub):
                return sub
            sub = bigger

    def is_subgroup(self, elems) -> bool:
        s = np.asarray(sorted(set(int(e) for e in elems)))
        if self.identity not in s:
            return False
        prod = np.unique(self.table[np.ix_(s, s)])
        return len(prod) == len(s) and np.array_equal(prod, s)

    def is_normal(self, elems) -> bool:
        s = set(int(e) for e in elems)
        return all(self.conjugate(h, g) in s for h in s for g in self.generators())

    def center(self) -> np.ndarray:
        t = self.table
        return np.nonzero((t == t.T).all(axis=1))[0]

    def commutator(self, x: int, y: int) -> int:
        t, inv = self.table, self.inverse
        return int(t[t[inv[x], inv[y]], t[x, y]])

    @lru_cache(maxsize=None)
    def derived_subgroup(self) -> np.ndarray:
        gens = self.generators()
        comms = {self.commutator(a, b) for a in gens for b in gens}
        return self.normal_closure(sorted(comms))

    @lru_cache(maxsize=None)
    def generators(self) -> tuple:
        """A small generating set, chosen greedily from elements of large order."""
        orders = self.element_orders()
        candidates = sorted(range(self.order), key=lambda i: (-orders[i], i))
        gens: list = []
        size = 1
        for c in candidates:
            if size == self.order:
                break
            sub = self.closure(gens + [c])
            if len(sub) > size:
                gens.append(c)
                size = len(sub)
        return tuple(gens)

    # -- quotients -----------------------------------------------------------

    def cosets(self, normal) -> np.ndarray:
        """``label[g]`` = index of the coset gN."""
        normal = np.asarray(normal)
        label = np.full(self.order, -1)
        k = 0
        for g in range(self.order):
            if label[g] < 0:
                label[self.table[g, normal]] = k
                k += 1
        return label

    def quotient(self, normal) -> "FiniteGroup":
        if not self.is_normal(normal):
            raise ValueError("quotient by a subgroup that is not normal")
        label = self.cosets(normal)
        m = int(label.max()) + 1
        reps = np.array([np.nonzero(label == k)[0][0] for k in range(m)])
        table = label[self.table[np.ix_(reps, reps)]]
        return FiniteGroup(table, check=False)

    def subgroup(self, elems) -> "FiniteGroup":
        elems = np.asarray(sorted(set(int(e) for e in elems)))
        pos = {int(e): k for k, e in enumerate(elems)}
        table = np.vectorize(pos.__getitem__)(self.table[np.ix_(elems, elems)])
        return FiniteGroup(table, check=False)

    def conjugacy_class_reps(self) -> list:
        seen = np.zeros(self.order, dtype=bool)
        reps = []
        for x in range(self.order):
            if seen[x]:
                continue
            reps.append(x)
            cls = self.table[self.table[self.inverse, x], np.arange(self.order)]
            seen[cls] = True
        return reps

    def fingerprint(self) -> tuple:
        return (
            self.order,
            self.order_statistics(),
            len(self.center()),
            len(self.derived_subgroup()),
        )


def group_from_generators(gens, mul, limit: int = 200_000):
    """Close ``gens`` under ``mul``; returns (FiniteGroup, elements). Elements must be hashable."""
    first = gens[0]
    elems = []
    index: dict = {}
    # find the identity as a power of the first generator
    x = first
    for _ in range(limit):
        y = mul(x, first)
        if y == first:
            ident = x
            break
        x = y
    else:
        raise ValueError("generator of unbounded order")
    queue = deque([ident])
    index[ident] = 0
    elems.append(ident)
    while queue:
        g = queue.popleft()
        for s in gens:
            h = mul(g, s)
            if h not in index:
                index[h] = len(elems)
                elems.append(h)
                queue.append(h)
                if len(elems) > limit:
                    raise ValueError("closure exceeds the size limit")
    n = len(elems)
    table = np.empty((n, n), dtype=np.int64)
    for i, g in enumerate(elems):
        for j, h in enumerate(elems):
            table[i, j] = index[mul(g, h)]
    return FiniteGroup(table, check=False), elems


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    n, m = g.order, h.order
    a = g.table[:, None, :, None] * m + h.table[None, :, None, :]
    return FiniteGroup(a.reshape(n * m, n * m), check=False)


# ---------------------------------------------------------------------------
# isomorphism by generator images


def find_isomorphism(g: FiniteGroup, h: FiniteGroup):
    """An isomorphism g -> h as an index array, or None."""
    if g.fingerprint() != h.fingerprint():
        return None
    gens = list(g.generators())
    if not gens:
        return np.array([h.identity])
    og, oh = g.element_orders(), h.element_orders()
    # the first image can be taken up to conjugacy in h
    first = [r for r in h.conjugacy_class_reps() if oh[r] == og[gens[0]]]
    rest = [np.nonzero(oh == og[s])[0].tolist() for s in gens[1:]]
    words = _spanning_words(g, gens)
    for images in itertools.product(first, *rest):
        phi = _extend(g, h, gens, images, words)
        if phi is not None:
            return phi
    return None


def _spanning_words(g: FiniteGroup, gens) -> list:
    """BFS tree: list of (element, parent, generator position), parents first."""
    order = [(g.identity, -1, -1)]
    seen = {g.identity}
    k = 0
    while k < len(order):
        x = order[k][0]
        for pos, s in enumerate(gens):
            y = int(g.table[x, s])
            if y not in seen:
                seen.add(y)
                order.append((y, x, pos))
        k += 1
    return order


def _extend(g, h, gens, images, words):
    phi = np.full(g.order, -1)
    phi[g.identity] = h.identity
    for y, parent, pos in words[1:]:
        phi[y] = h.table[phi[parent], images[pos]]
    if len(set(phi.tolist())) != g.order:
        return None
    # homomorphism check on generators suffices once phi is defined on all of g
    for pos, s in enumerate(gens):
        if not np.array_equal(phi[g.table[:, s]], h.table[phi, images[pos]]):
            return None
    return phi


def are_isomorphic(g: FiniteGroup, h: FiniteGroup) -> bool:
    return find_isomorphism(g, h) is not None


# ---------------------------------------------------------------------------
# catalog


def _perm_mul(p, q):
    """apply p then q"""
    return tuple(q[i] for i in p)


def _mat_mul_mod(p):
    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)

    return mul


def _cyclic(n: int) -> FiniteGroup:
    i = np.arange(n)
    return FiniteGroup((i[:, None] + i[None, :]) % n, check=False)


def _sl2(p: int) -> FiniteGroup:
    g, _ = group_from_generators([(1, 1, 0, 1), (1, 0, 1, 1)], _mat_mul_mod(p))
    return g


def _gl2(p: int) -> FiniteGroup:
    nonsquare = next(a for a in range(2, p) if pow(a, (p - 1) // 2, p) == p - 1)
    gens = [(1, 1, 0, 1), (1, 0, 1, 1), (1, 0, 0, nonsquare)]
    g, _ = group_from_generators(gens, _mat_mul_mod(p))
    return g


def _psl2(p: int) -> FiniteGroup:
    g = _sl2(p)
    return g.quotient(g.center())


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    build: object


def _catalog() -> list:
    perm_a4 = [(1, 2, 0, 3), (0, 2, 3, 1)]
    perm_s4 = [(1, 0, 2, 3), (1, 2, 3, 0)]
    cat = [
        CatalogEntry("C1", lambda: _cyclic(1)),
        CatalogEntry("C2", lambda: _cyclic(2)),
        CatalogEntry("C3", lambda: _cyclic(3)),
        CatalogEntry("C4", lambda: _cyclic(4)),
        CatalogEntry("V4", lambda: direct_product(_cyclic(2), _cyclic(2))),
        CatalogEntry(
            "C2^4",
            lambda: direct_product(
                direct_product(_cyclic(2), _cyclic(2)), direct_product(_cyclic(2), _cyclic(2))
            ),
        ),
        CatalogEntry("A4", lambda: group_from_generators(perm_a4, _perm_mul)[0]),
        CatalogEntry("S4", lambda: group_from_generators(perm_s4, _perm_mul)[0]),
        CatalogEntry("SL2(F3)", lambda: _sl2(3)),
        CatalogEntry("GL2(F3)", lambda: _gl2(3)),
        CatalogEntry("A4xC2", lambda: direct_product(group_from_generators(perm_a4, _perm_mul)[0], _cyclic(2))),
        CatalogEntry("SL2(F3)xC2", lambda: direct_product(_sl2(3), _cyclic(2))),
    ]
    return cat


CATALOG_LABELS = tuple(e.label for e in _catalog()) + ("PSL2(F_p)", "SL2(F_p)")
MAX_IDENTIFY_ORDER = 10_000


@lru_cache(maxsize=None)
def catalog_group(label: str) -> FiniteGroup:
    for e in _catalog():
        if e.label == label:
            return e.build()
    if label.startswith("PSL2(F") and label.endswith(")"):
        return _psl2(int(label[6:-1]))
    if label.startswith("SL2(F") and label.endswith(")"):
        return _sl2(int(label[5:-1]))
    raise KeyError(label)


def _psl_candidates(n: int) -> list:
    from sympy import isprime

    out = []
    for p in range(5, 60):
        if not isprime(p):
            continue
        if p * (p * p - 1) // 2 == n:
            out.append(f"PSL2(F{p})")
        if p * (p * p - 1) == n:
            out.append(f"SL2(F{p})")
    return out


def identify_group(g) -> str:
    """Catalog label of the group with Cayley table ``g``, or ``"unidentified"``."""
    if not isinstance(g, FiniteGroup):
        g = FiniteGroup(g)
    if g.order > MAX_IDENTIFY_ORDER:
        raise ValueError(f"group of order {g.order} is beyond the brute-force limit")
    labels = [e.label for e in _catalog()] + _psl_candidates(g.order)
    for label in labels:
        h = catalog_group(label)
        if h.order == g.order and are_isomorphic(g, h):
            return label
    return "unidentified"

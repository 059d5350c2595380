"""Reduction of the Bolza order modulo odd split primes, and (3,3,4)-surjections onto PSL2(F_p).

Matrices are tuples ``(a, b, c, d)`` of residues mod p, read row by row.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from sympy import isprime

from . import order as bo
from .quadratic import PrimeIdeal, UnsupportedIdealError, ZSqrt2, divides, residue_map
from .words import AB, Word, eval_word


class InternalConsistencyError(AssertionError):
    """Two independent computations of the same quantity disagree."""


# ---------------------------------------------------------------------------
# 2x2 matrices over F_p


@dataclass(frozen=True)
class Mat2:
    a: int
    b: int
    c: int
    d: int
    p: int

    @classmethod
    def of(cls, rows, p: int) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a % p, b % p, c % p, d % p, p)

    @classmethod
    def identity(cls, p: int) -> "Mat2":
        return cls(1, 0, 0, 1, p)

    @property
    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def rows(self) -> list:
        return [[self.a, self.b], [self.c, self.d]]

    def __mul__(self, o: "Mat2") -> "Mat2":
        return Mat2(*mat_mul(self.entries, o.entries, self.p), self.p)

    def __add__(self, o: "Mat2") -> "Mat2":
        p = self.p
        return Mat2(*((x + y) % p for x, y in zip(self.entries, o.entries)), p)

    def __neg__(self) -> "Mat2":
        return Mat2(*((-x) % self.p for x in self.entries), self.p)

    def scale(self, k: int) -> "Mat2":
        return Mat2(*((k * x) % self.p for x in self.entries), self.p)

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.p

    def trace(self) -> int:
        return (self.a + self.d) % self.p

    def inverse(self) -> "Mat2":
        return Mat2(*mat_inv(self.entries, self.p), self.p)

    def is_identity(self) -> bool:
        return self.entries == (1, 0, 0, 1)

    def is_minus_identity(self) -> bool:
        return self.entries == (1, 0, 0, 1) if self.p == 2 else self.entries == (self.p - 1, 0, 0, self.p - 1)

    def projective_order(self) -> int:
        return projective_order(self.entries, self.p)

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def mat_mul(x, y, p):
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)


def mat_inv(x, p):
    a, b, c, d = x
    det = (a * d - b * c) % p
    if det == 0:
        raise ZeroDivisionError("singular matrix")
    k = pow(det, -1, p)
    return ((d * k) % p, (-b * k) % p, (-c * k) % p, (a * k) % p)


def is_pm_identity(x, p) -> int:
    """+1, -1 or 0."""
    if x == (1, 0, 0, 1):
        return 1
    if x == ((-1) % p, 0, 0, (-1) % p):
        return -1
    return 0


def canon_projective(x, p) -> tuple:
    """Representative of {x, -x}: the one whose first nonzero entry is at most (p-1)/2."""
    for v in x:
        if v:
            return x if v <= (p - 1) // 2 else tuple((-e) % p for e in x)
    return x


def projective_order(x, p, limit: int | None = None) -> int:
    y = x
    limit = limit or p + 2
    for k in range(1, limit + 1):
        if is_pm_identity(y, p):
            return k
        y = mat_mul(y, x, p)
    raise ValueError("element of PSL2 with order above p + 1")


# ---------------------------------------------------------------------------
# split representations


@dataclass(frozen=True)
class SurjectionSpec:
    p: int
    m_alpha: tuple
    m_beta: tuple
    provenance: str
    ideal: PrimeIdeal | None = None

    def letter_images(self) -> dict:
        p = self.p
        return {
            "a": self.m_alpha,
            "A": mat_inv(self.m_alpha, p),
            "b": self.m_beta,
            "B": mat_inv(self.m_beta, p),
        }

    def image(self, w) -> tuple:
        if isinstance(w, str):
            w = Word.parse(w, AB)
        imgs = self.letter_images()
        x = (1, 0, 0, 1)
        for c in w.letters:
            x = mat_mul(x, imgs[c], self.p)
        return x

    def conjugated(self, g) -> "SurjectionSpec":
        """phi followed by conjugation x -> g^-1 x g."""
        p = self.p
        gi = mat_inv(g, p)

        def conj(m):
            return mat_mul(mat_mul(gi, m, p), g, p)

        return SurjectionSpec(p, conj(self.m_alpha), conj(self.m_beta), self.provenance + "+conjugated", self.ideal)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "alpha": [list(self.m_alpha[:2]), list(self.m_alpha[2:])],
            "beta": [list(self.m_beta[:2]), list(self.m_beta[2:])],
            "provenance": self.provenance,
            "ideal": str(self.ideal.generator) if self.ideal else None,
        }


def as_ideal(ideal) -> PrimeIdeal:
    if isinstance(ideal, PrimeIdeal):
        return ideal
    if isinstance(ideal, str):
        return PrimeIdeal.parse(ideal)
    return PrimeIdeal.from_generator(ZSqrt2.coerce(ideal))


def split_rep(ideal) -> SurjectionSpec:
    """Explicit Q_B / I Q_B -> M_2(F_p) for a split prime I with p coprime to 6.

    alpha = alpha' + 1/2, beta = beta' + ((1 + 2 sqrt2)/3) alpha' + 1/2 where alpha', beta'
    anticommute with alpha'^2 = -3/4 and beta'^2 = sqrt2/3. alpha' is taken in companion
    form; among all anticommuting beta' the lexicographically least image of beta wins.
    """
    I = as_ideal(ideal)
    if I.kind != "split":
        raise UnsupportedIdealError(f"{I} is {I.kind}, not split")
    p = I.residue_char
    if p in (2, 3):
        raise UnsupportedIdealError("residue characteristic must be prime to 6")
    s = I.sqrt2_image
    half = pow(2, -1, p)
    third = pow(3, -1, p)
    c = (-3 * pow(4, -1, p)) % p
    alpha_p = (0, 1, c, 0)
    target = (s * third) % p
    k = ((1 + 2 * s) * third) % p
    best = None
    for u in range(p):
        for v in range(p):
            if (u * u - c * v * v - target) % p:
                continue
            beta_p = (u, v, (-c * v) % p, (-u) % p)
            mb = tuple((bp + k * ap + (half if i in (0, 3) else 0)) % p for i, (bp, ap) in enumerate(zip(beta_p, alpha_p)))
            if best is None or mb < best:
                best = mb
    if best is None:
        raise InternalConsistencyError("no anticommuting square root found")
    ma = (half, 1, c, half)
    spec = SurjectionSpec(p, ma, best, f"reduction({I.generator})", I)
    _check_rep(spec, s)
    return spec


def _check_rep(spec: SurjectionSpec, s: int) -> None:
    p = spec.p
    ma, mb = spec.m_alpha, spec.m_beta
    one = (1, 0, 0, 1)

    def minus_one_plus(m):
        return tuple((x - y) % p for x, y in zip(m, one))

    ok = (
        mat_mul(ma, ma, p) == minus_one_plus(ma)
        and mat_mul(mb, mb, p) == minus_one_plus(mb)
        and (lambda t: (t[0] + t[3]) % p)(mat_mul(ma, mb, p)) == (-s) % p
        and Mat2(*ma, p).det() == 1
        and Mat2(*mb, p).det() == 1
    )
    if not ok:
        raise InternalConsistencyError("split representation fails its defining relations")


def _residue(I: PrimeIdeal, z: ZSqrt2) -> int:
    return residue_map(I, z)


def matrix_of(spec: SurjectionSpec, x: bo.BElem) -> tuple:
    """Image of a BElem under the linear extension of a reduction representation."""
    if spec.ideal is None:
        raise UnsupportedIdealError("only reduction representations extend linearly")
    p = spec.p
    ma, mb = spec.m_alpha, spec.m_beta
    basis = ((1, 0, 0, 1), ma, mb, mat_mul(ma, mb, p))
    out = [0, 0, 0, 0]
    for coef, m in zip(x.coords, basis):
        r = _residue(spec.ideal, coef)
        for i in range(4):
            out[i] = (out[i] + r * m[i]) % p
    return tuple(out)


def reduce_word_mod(ideal, w) -> Mat2:
    spec = ideal if isinstance(ideal, SurjectionSpec) else split_rep(ideal)
    return Mat2(*spec.image(w), spec.p)


def congruence_member(ideal, w) -> int | None:
    """+1 if w = 1 mod I, -1 if w = -1 mod I, None otherwise.

    Decided twice: by the matrix image and by exact divisibility of the
    coordinates of eval(w) -/+ 1 by the generator of I.
    """
    spec = ideal if isinstance(ideal, SurjectionSpec) else split_rep(ideal)
    if isinstance(w, str):
        w = Word.parse(w, AB)
    by_matrix = is_pm_identity(spec.image(w), spec.p) or None
    x = eval_word(w)
    gen = spec.ideal.generator
    by_division = None
    for sign in (1, -1):
        if all(divides(gen, c) for c in (x - sign).coords):
            by_division = sign
    if by_matrix != by_division:
        raise InternalConsistencyError(
            f"matrix path says {by_matrix}, divisibility path says {by_division} for {w} mod {gen}"
        )
    return by_matrix


# ---------------------------------------------------------------------------
# random (3,3,4) pairs


def random_sl2(rng: random.Random, p: int) -> tuple:
    """Uniform element of SL2(F_p)."""
    while True:
        a, c = rng.randrange(p), rng.randrange(p)
        if a or c:
            break
    if a:
        b = rng.randrange(p)
        d = ((1 + b * c) * pow(a, -1, p)) % p
    else:
        d = rng.randrange(p)
        b = ((a * d - 1) * pow(c, -1, p)) % p
    return (a, b, c, d)


def psl2_order(p: int) -> int:
    return p * (p * p - 1) // 2


def generates_psl2(ma, mb, p: int) -> bool:
    """BFS closure in PSL2(F_p) of the images of ma, mb.

    Stops as soon as the closure exceeds every proper subgroup order. For p >= 5
    the maximal subgroups have order at most max(p(p-1)/2, 60), and SL2(F_p) is
    perfect, so generating PSL2 is the same as generating SL2.
    """
    n = psl2_order(p)
    bound = max(p * (p - 1) // 2, 60) if p >= 5 else n - 1
    gens = [ma, mb, mat_inv(ma, p), mat_inv(mb, p)]
    start = canon_projective((1, 0, 0, 1), p)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = canon_projective(mat_mul(x, g, p), p)
            if y not in seen:
                seen.add(y)
                if len(seen) > bound:
                    return True
                queue.append(y)
    return len(seen) == n


def is_334_pair(ma, mb, p: int) -> bool:
    return (
        projective_order(ma, p) == 3
        and projective_order(mb, p) == 3
        and projective_order(mat_mul(ma, mb, p), p) == 4
    )


def random_334_pairs(p: int, seed: int, budget: int = 100_000):
    """Yield (trial number, SurjectionSpec) for each accepted pair among ``budget`` trials."""
    if not isprime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    rng = random.Random(seed)
    for trial in range(budget):
        ma, mb = random_sl2(rng, p), random_sl2(rng, p)
        if is_334_pair(ma, mb, p) and generates_psl2(ma, mb, p):
            yield trial, SurjectionSpec(p, ma, mb, f"random(seed={seed},trial={trial})")


def random_334_pair(p: int, seed: int, budget: int = 100_000) -> SurjectionSpec | None:
    if p in (3, 5):
        # PSL2(F3) = A4 and PSL2(F5) = A5 have no elements of order 4
        return None
    for _, spec in random_334_pairs(p, seed, budget):
        return spec
    return None


def acceptance_rate(p: int, seed: int, trials: int) -> float:
    return sum(1 for _ in random_334_pairs(p, seed, trials)) / trials


# ---------------------------------------------------------------------------
# kernels


def same_kernel(phi1: SurjectionSpec, phi2: SurjectionSpec) -> bool:
    """ker phi1 == ker phi2, decided on Schreier generators of ker phi1.

    Both maps are onto PSL2(F_p), so the kernels have equal index and one
    inclusion suffices.
    """
    from .cosets import coset_action_from_quotient, schreier_generators

    if phi1.p != phi2.p:
        return False
    table = coset_action_from_quotient(phi1)
    return all(is_pm_identity(phi2.image(w), phi2.p) for w in schreier_generators(table))


def reduction_reps(p: int) -> tuple:
    """The two reduction representations at the primes above p."""
    from .quadratic import factor_prime

    rep = factor_prime(p)
    if rep.kind != "split":
        raise UnsupportedIdealError(f"{p} does not split")
    return tuple(split_rep(I) for I in rep.ideals)


def classify_kernel(phi: SurjectionSpec) -> PrimeIdeal | None:
    """The prime above p whose congruence kernel equals ker phi."""
    for rep in reduction_reps(phi.p):
        if same_kernel(phi, rep):
            return rep.ideal
    return None

r"""The maximal order $O_K[\alpha, \beta]$ in the basis ``1, alpha, beta, alpha*beta``.

The multiplication table is not typed in by hand: :func:`derive_structure_constants`
rewrites every product of two basis monomials with the three defining
relations

    alpha^2 = -1 + alpha
    beta^2  = -1 + beta
    beta*alpha = (-1 - sqrt2) + alpha + beta - alpha*beta

and the result is cross-checked against quaternion multiplication through
:func:`to_quat`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .quadratic import QSqrt2, ZSqrt2, R2
from .quaternion import OrderBasis, Quat, coords_in_lattice, quat_mul

MONOMIALS = ("", "a", "b", "ab")

# word -> replacement as {monomial word: coefficient}
_RULES = {
    "aa": {"": ZSqrt2(-1), "a": ZSqrt2(1)},
    "bb": {"": ZSqrt2(-1), "b": ZSqrt2(1)},
    "ba": {"": ZSqrt2(-1, -1), "a": ZSqrt2(1), "b": ZSqrt2(1), "ab": ZSqrt2(-1)},
}


def _rewrite(poly: dict) -> dict:
    """Reduce a noncommutative polynomial in a, b to the normal monomials."""
    out: dict = {}
    todo = list(poly.items())
    while todo:
        word, coef = todo.pop()
        if not coef:
            continue
        for pos in range(len(word) - 1):
            rule = _RULES.get(word[pos : pos + 2])
            if rule is not None:
                pre, post = word[:pos], word[pos + 2 :]
                todo.extend((pre + m + post, coef * c) for m, c in rule.items())
                break
        else:
            out[word] = out.get(word, ZSqrt2(0)) + coef
    return {w: c for w, c in out.items() if c}


@lru_cache(maxsize=1)
def derive_structure_constants() -> tuple:
    """``table[i][j]`` = coordinates of ``m_i * m_j`` for the basis monomials."""
    table = []
    for u in MONOMIALS:
        row = []
        for v in MONOMIALS:
            red = _rewrite({u + v: ZSqrt2(1)})
            unknown = set(red) - set(MONOMIALS)
            if unknown:
                raise AssertionError(f"rewriting left non-normal words {unknown}")
            row.append(tuple(red.get(m, ZSqrt2(0)) for m in MONOMIALS))
        table.append(tuple(row))
    return tuple(table)


_TABLE = derive_structure_constants()


@dataclass(frozen=True)
class BElem:
    """x0 + x1*alpha + x2*beta + x3*alpha*beta with Z[sqrt2] coordinates."""

    x0: ZSqrt2 = ZSqrt2(0)
    x1: ZSqrt2 = ZSqrt2(0)
    x2: ZSqrt2 = ZSqrt2(0)
    x3: ZSqrt2 = ZSqrt2(0)

    def __post_init__(self):
        for name in ("x0", "x1", "x2", "x3"):
            v = getattr(self, name)
            if not isinstance(v, ZSqrt2):
                object.__setattr__(self, name, ZSqrt2.coerce(v))

    @classmethod
    def scalar(cls, c) -> "BElem":
        return cls(ZSqrt2.coerce(c))

    @property
    def coords(self) -> tuple:
        return (self.x0, self.x1, self.x2, self.x3)

    def __add__(self, other):
        other = _belem(other)
        if other is None:
            return NotImplemented
        return BElem(*(x + y for x, y in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return BElem(*(-x for x in self.coords))

    def __sub__(self, other):
        other = _belem(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, ZSqrt2)):
            return BElem(*(x * other for x in self.coords))
        if isinstance(other, BElem):
            return belem_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, ZSqrt2)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.star() ** (-n) if self.norm() == 1 else _raise_not_unit()
        out, base = BElem.scalar(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, ZSqrt2)):
            other = BElem.scalar(other)
        if not isinstance(other, BElem):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def is_scalar(self) -> bool:
        return not (self.x1 or self.x2 or self.x3)

    def star(self) -> "BElem":
        return belem_star(self)

    def trace(self) -> ZSqrt2:
        return 2 * self.x0 + self.x1 + self.x2 - R2 * self.x3

    def norm(self) -> ZSqrt2:
        n = belem_mul(self, belem_star(self))
        if not n.is_scalar():
            raise AssertionError("x * x^* is not central")
        return n.x0

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def to_json(self) -> dict:
        return {f"x{k}": c.to_json() for k, c in enumerate(self.coords)}

    @classmethod
    def from_json(cls, obj: dict) -> "BElem":
        return cls(*(ZSqrt2.from_json(obj[f"x{k}"]) for k in range(4)))


def _raise_not_unit():
    raise ValueError("negative powers need a norm-one element")


def _belem(x):
    if isinstance(x, BElem):
        return x
    if isinstance(x, (int, ZSqrt2)):
        return BElem.scalar(x)
    return None


def belem_mul(x: BElem, y: BElem) -> BElem:
    out = [ZSqrt2(0)] * 4
    for i, xi in enumerate(x.coords):
        if not xi:
            continue
        row = _TABLE[i]
        for j, yj in enumerate(y.coords):
            if not yj:
                continue
            c = xi * yj
            for k, t in enumerate(row[j]):
                if t:
                    out[k] = out[k] + c * t
    return BElem(*out)


# images of the basis under the involution: 1, 1 - alpha, 1 - beta, -sqrt2 - alpha*beta
_STAR = (
    BElem(1),
    BElem(1, -1),
    BElem(1, 0, -1),
    BElem(ZSqrt2(0, -1), 0, 0, -1),
)


def belem_star(x: BElem) -> BElem:
    out = BElem()
    for c, img in zip(x.coords, _STAR):
        if c:
            out = out + img * c
    return out


def belem_trace_norm(x: BElem) -> tuple:
    return x.trace(), x.norm()


def inverse(x: BElem) -> BElem:
    """Inverse of a norm-one element (x^{-1} = x^*)."""
    if x.norm() != 1:
        raise ValueError("only norm-one elements are inverted here")
    return x.star()


ONE = BElem(1)
ALPHA = BElem(0, 1)
BETA = BElem(0, 0, 1)
ALPHA_BETA = BElem(0, 0, 0, 1)

# ---------------------------------------------------------------------------
# passage to the quaternion basis 1, i, j, ij

Q_ALPHA = Quat(QSqrt2.of("1/2"), QSqrt2.of("1/2"), 0, 0)
Q_BETA = Quat(QSqrt2.of("1/2"), QSqrt2.of("1/6", "1/3"), 0, QSqrt2.of("-1/3"))
Q_ALPHA_BETA = quat_mul(Q_ALPHA, Q_BETA)
# The commonly quoted closed form -(1/6)(3 sqrt2 - (2 + sqrt2) i + 3j - ij) has the
# j and ij signs flipped relative to the actual product alpha*beta.
Q_ALPHA_BETA_PRINTED = Quat(
    QSqrt2.of(0, "-1/2"), QSqrt2.of("1/3", "1/6"), QSqrt2.of("-1/2"), QSqrt2.of("1/6")
)
_IMAGES = (Quat.scalar(1), Q_ALPHA, Q_BETA, Q_ALPHA_BETA)

BOLZA_BASIS = OrderBasis(_IMAGES, name="bolza")


class NotAMemberError(ValueError):
    """A quaternion outside the Bolza order was converted to a BElem."""


def to_quat(x: BElem) -> Quat:
    out = Quat()
    for c, img in zip(x.coords, _IMAGES):
        if c:
            out = out + img * c
    return out


def from_quat(q: Quat) -> BElem:
    coords = coords_in_lattice(q, BOLZA_BASIS)
    if coords is None:
        raise NotAMemberError(f"{q} is not in the Bolza order")
    return BElem(*coords)


def basis_change(x):
    """BElem -> Quat, or Quat -> BElem (raising NotAMemberError outside the order)."""
    if isinstance(x, BElem):
        return to_quat(x)
    return from_quat(x)


# ---------------------------------------------------------------------------
# other named elements and orders

Q_I = Quat(0, 1, 0, 0)
Q_J = Quat(0, 0, 1, 0)
Q_IJ = Quat(0, 0, 0, 1)

# gamma = (1/6)(3 + i)(1 - (1 + sqrt2) j)
Q_GAMMA = quat_mul(Quat(QSqrt2.of("1/2"), QSqrt2.of("1/6")), Quat(1, 0, QSqrt2.of(-1, -1)))
Q_GAMMA_PRIME = quat_mul(quat_mul(Q_I, Q_GAMMA), Q_I.inverse())

STANDARD_ORDER = OrderBasis((Quat.scalar(1), Q_I, Q_J, Q_IJ), name="standard")
ORDER_O1 = OrderBasis((Quat.scalar(1), Q_ALPHA, Q_J, quat_mul(Q_ALPHA, Q_J)), name="O1")
ORDER_Q = OrderBasis((Quat.scalar(1), Q_ALPHA, Q_GAMMA, quat_mul(Q_ALPHA, Q_GAMMA)), name="Q")
ORDER_Q_PRIME = OrderBasis(
    (Quat.scalar(1), Q_ALPHA, Q_GAMMA_PRIME, quat_mul(Q_ALPHA, Q_GAMMA_PRIME)), name="Qprime"
)

ORDERS = {
    "standard": STANDARD_ORDER,
    "O1": ORDER_O1,
    "Q": ORDER_Q,
    "Qprime": ORDER_Q_PRIME,
    "bolza": BOLZA_BASIS,
}

VARPI = BElem(1, 0, 0, R2)
# (alpha beta)^2 (beta alpha)^-2 = (alpha beta)^2 (alpha^2 beta^2)^2; the lift
# (alpha beta)^2 (beta alpha)^2 is its negative since (beta alpha)^4 = -1
DELTA = BElem(ZSqrt2(1, 1), ZSqrt2(2, 1), ZSqrt2(-2, -1), 0)


def _named_elements() -> dict:
    from . import words

    out = {
        "alpha": ALPHA,
        "beta": BETA,
        "alphabeta": ALPHA_BETA,
        "gamma": from_quat(Q_GAMMA),
        "gammaPrime": Q_GAMMA_PRIME,
        "varpi": VARPI,
        "delta": DELTA,
    }
    for key in ("c1", "c2", "c3", "c4"):
        out[key] = words.eval_word(words.REGISTRY[key].word)
    return out


def named(name: str):
    """Named element: a BElem (or a Quat for gammaPrime, which is not in the order),
    or a registered Word for any key of the word registry."""
    from . import words

    elems = _named_elements()
    if name in elems:
        return elems[name]
    if name in words.REGISTRY:
        return words.REGISTRY[name].word
    raise KeyError(f"unknown named element {name!r}")


def random_belem(rng, size: int = 5) -> BElem:
    return BElem(*(ZSqrt2(rng.randint(-size, size), rng.randint(-size, size)) for _ in range(4)))


def structure_constants_consistent() -> bool:
    """Every product of basis monomials agrees with quaternion multiplication."""
    for i, j in itertools.product(range(4), repeat=2):
        lhs = to_quat(BElem(*_TABLE[i][j]))
        if lhs != quat_mul(_IMAGES[i], _IMAGES[j]):
            return False
    return True

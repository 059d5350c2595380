r"""The quaternion algebra $(-3, \sqrt{2})$ over $\mathbb{Q}(\sqrt{2})$.

Elements are written in the basis ``1, i, j, ij`` with ``i^2 = -3``,
``j^2 = sqrt2`` and ``ji = -ij``.  Orders are handled as free
``Z[sqrt2]``-lattices given by four basis vectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .quadratic import (
    QSqrt2,
    ZSqrt2,
    PrimeIdeal,
    R2,
    canonical_associate,
    factor,
)

# structure constants of the algebra
A_PARAM = QSqrt2.coerce(-3)
B_PARAM = QSqrt2.coerce(R2)


class NotAnOrderError(ValueError):
    """The lattice is not closed under multiplication (or misses 1)."""


@dataclass(frozen=True)
class Quat:
    c0: QSqrt2 = QSqrt2.coerce(0)
    c1: QSqrt2 = QSqrt2.coerce(0)
    c2: QSqrt2 = QSqrt2.coerce(0)
    c3: QSqrt2 = QSqrt2.coerce(0)

    def __post_init__(self):
        for name in ("c0", "c1", "c2", "c3"):
            object.__setattr__(self, name, QSqrt2.coerce(getattr(self, name)))

    @classmethod
    def scalar(cls, x) -> "Quat":
        return cls(x, 0, 0, 0)

    @property
    def coords(self) -> tuple:
        return (self.c0, self.c1, self.c2, self.c3)

    def __add__(self, other):
        other = _quat(other)
        return Quat(*(x + y for x, y in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return Quat(*(-x for x in self.coords))

    def __sub__(self, other):
        return self + (-_quat(other))

    def __rsub__(self, other):
        return _quat(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, ZSqrt2, QSqrt2)):
            s = QSqrt2.coerce(other)
            return Quat(*(x * s for x in self.coords))
        if not isinstance(other, Quat):
            return NotImplemented
        return quat_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, ZSqrt2, QSqrt2)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, ZSqrt2, QSqrt2)):
            other = Quat.scalar(other)
        if not isinstance(other, Quat):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def star(self) -> "Quat":
        return Quat(self.c0, -self.c1, -self.c2, -self.c3)

    def trace(self) -> QSqrt2:
        return self.c0 * 2

    def norm(self) -> QSqrt2:
        return (
            self.c0 * self.c0
            - A_PARAM * self.c1 * self.c1
            - B_PARAM * self.c2 * self.c2
            + A_PARAM * B_PARAM * self.c3 * self.c3
        )

    def is_scalar(self) -> bool:
        return not (self.c1 or self.c2 or self.c3)

    def inverse(self) -> "Quat":
        return self.star() * self.norm().inverse()

    def __str__(self):
        return f"[{self.c0}, {self.c1}, {self.c2}, {self.c3}]"

    def to_json(self) -> dict:
        return {f"c{k}": c.to_json() for k, c in enumerate(self.coords)}

    @classmethod
    def from_json(cls, obj: dict) -> "Quat":
        return cls(*(QSqrt2.from_json(obj[f"c{k}"]) for k in range(4)))


def _quat(x) -> Quat:
    return x if isinstance(x, Quat) else Quat.scalar(x)


def quat_mul(x: Quat, y: Quat) -> Quat:
    a, b = A_PARAM, B_PARAM
    x0, x1, x2, x3 = x.coords
    y0, y1, y2, y3 = y.coords
    return Quat(
        x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3,
        x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
        x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
        x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
    )


def quat_star_trace_norm(x: Quat) -> tuple:
    return x.star(), x.trace(), x.norm()


I = Quat(0, 1, 0, 0)
J = Quat(0, 0, 1, 0)
IJ = Quat(0, 0, 0, 1)
ONE = Quat(1, 0, 0, 0)


# ---------------------------------------------------------------------------
# exact linear algebra over Q(sqrt2)


def _solve(rows: Sequence[Sequence[QSqrt2]], rhs: Sequence[QSqrt2]) -> Optional[list]:
    """Solve the square system ``rows @ x = rhs`` by Gaussian elimination.

    Returns None when the matrix is singular.
    """
    n = len(rows)
    m = [list(r) + [v] for r, v in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col].inverse()
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def _det(rows: Sequence[Sequence[QSqrt2]]) -> QSqrt2:
    m = [list(r) for r in rows]
    n = len(m)
    det = QSqrt2.coerce(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return QSqrt2.coerce(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = det * m[col][col]
        inv = m[col][col].inverse()
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return det


@dataclass(frozen=True)
class OrderBasis:
    """Four quaternions spanning a Z[sqrt2]-lattice."""

    basis: tuple
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.basis) != 4:
            raise ValueError("an order basis needs exactly four elements")
        object.__setattr__(self, "basis", tuple(_quat(b) for b in self.basis))

    def __iter__(self):
        return iter(self.basis)

    def __getitem__(self, k):
        return self.basis[k]

    def coords(self, x: Quat) -> Optional[tuple]:
        """Coordinates of x in this basis when x is in the Z[sqrt2]-span."""
        return coords_in_lattice(x, self)

    def contains(self, x: Quat) -> bool:
        return coords_in_lattice(x, self) is not None

    def gram(self) -> list:
        return [[quat_mul(x, y).trace() for y in self.basis] for x in self.basis]

    def is_order(self) -> bool:
        try:
            check_order(self)
        except NotAnOrderError:
            return False
        return True


def rational_coords(x: Quat, basis: OrderBasis) -> list:
    # columns of the system are the basis vectors
    rows = [[b.coords[k] for b in basis.basis] for k in range(4)]
    sol = _solve(rows, list(_quat(x).coords))
    if sol is None:
        raise ValueError("basis is linearly dependent over Q(sqrt2)")
    return sol


def coords_in_lattice(x: Quat, basis: OrderBasis) -> Optional[tuple]:
    """Exact Z[sqrt2] coordinates of x in ``basis``, or None if x is outside the lattice."""
    sol = rational_coords(x, basis)
    if not all(c.is_integral() for c in sol):
        return None
    return tuple(c.num for c in sol)


def check_order(basis: OrderBasis) -> None:
    """Raise NotAnOrderError unless the lattice contains 1 and is multiplicatively closed."""
    if not basis.contains(ONE):
        raise NotAnOrderError("1 is not in the lattice")
    for x, y in itertools.product(basis.basis, repeat=2):
        if not basis.contains(quat_mul(x, y)):
            raise NotAnOrderError(f"product {quat_mul(x, y)} leaves the lattice")


def order_discriminant(basis: OrderBasis) -> ZSqrt2:
    """Generator d of the discriminant with d^2 = |det Tr(b_i b_j)| up to a unit.

    The generator is canonicalised as a power of sqrt2 times canonical odd
    prime generators (see :func:`canonical_associate`).
    """
    check_order(basis)
    det = _det(basis.gram())
    if not det.is_integral():
        raise NotAnOrderError("reduced traces are not integral")
    det = det.num
    if not det:
        raise ValueError("degenerate basis")
    _, parts = factor(det)
    d = ZSqrt2(1)
    for g, e in parts:
        if e % 2:
            raise AssertionError(f"determinant {det} is not a square up to units")
        d = d * g ** (e // 2)
    return canonical_associate(d) if d != 1 else d


# ---------------------------------------------------------------------------
# local behaviour


@dataclass(frozen=True)
class PlaceReport:
    place: str
    verdict: str  # "split" or "ramified"
    witness: object = None

    @property
    def ramified(self) -> bool:
        return self.verdict == "ramified"


def _mod_4r2(a: int, b: int) -> tuple:
    # 4*sqrt2*Z[sqrt2] is spanned by 8 and 4*sqrt2 in (a, b) coordinates
    return (a % 8, b % 4)


def sqrt2_ramification_certificate() -> dict:
    """Show that x^2 + 3y^2 = sqrt2 z^2 has no primitive solution modulo 4*sqrt2.

    Residues modulo 4*sqrt2 are a + b*sqrt2 with a mod 8 and b mod 4 (32
    classes).  A residue is divisible by sqrt2 iff a is even.  Instead of
    running over all triples, the left and right sides are tabulated
    separately and intersected.
    """
    residues = [ZSqrt2(a, b) for a in range(8) for b in range(4)]
    squares = {r: _mod_4r2((r * r).a, (r * r).b) for r in residues}

    def unit_at_2(r):
        return r.a % 2 == 1

    lhs_primitive, lhs_imprimitive = set(), set()
    for x, y in itertools.product(residues, repeat=2):
        sx, sy = squares[x], squares[y]
        v = _mod_4r2(sx[0] + 3 * sy[0], sx[1] + 3 * sy[1])
        (lhs_primitive if (unit_at_2(x) or unit_at_2(y)) else lhs_imprimitive).add(v)
    rhs_any, rhs_primitive = set(), set()
    for z in residues:
        s = ZSqrt2(*squares[z]) * R2
        v = _mod_4r2(s.a, s.b)
        rhs_any.add(v)
        if unit_at_2(z):
            rhs_primitive.add(v)
    clash = (lhs_primitive & rhs_any) | (lhs_imprimitive & rhs_primitive)
    # solution modulo 4 exists: x = y = 1, z = 0
    mod4 = (1 + 3) % 4 == 0
    return {
        "modulus": "4*r2",
        "residue_count": len(residues),
        "lhs_values": len(lhs_primitive | lhs_imprimitive),
        "rhs_values": len(rhs_any),
        "solutions": sorted(clash),
        "solvable_mod_4": mod4,
    }


def _split_witness_mod3() -> ZSqrt2:
    # x^2 = sqrt2 in Z[sqrt2]/3 = F_9, lexicographic in (a, b)
    for a, b in itertools.product(range(3), repeat=2):
        s = ZSqrt2(a, b) ** 2 - R2
        if s.a % 3 == 0 and s.b % 3 == 0:
            # balanced representative
            return ZSqrt2(a if a < 2 else a - 3, b if b < 2 else b - 3)
    raise AssertionError("sqrt2 is not a square mod 3")


def local_symbol(place) -> PlaceReport:
    """Split/ramified verdict for a place of Q(sqrt2).

    ``place`` is ``"sigma0"`` (the embedding sqrt2 > 0), ``"sigma"`` (the
    other real embedding), or a :class:`PrimeIdeal` among (3), (sqrt2) and
    split odd primes coprime to 3.
    """
    if place == "sigma0":
        return PlaceReport("sigma0", "split", "sqrt2 > 0 so (-3, sqrt2) is indefinite")
    if place == "sigma":
        return PlaceReport("sigma", "ramified", "-sqrt2 < 0 and -3 < 0: definite")
    if isinstance(place, (str, ZSqrt2)):
        place = PrimeIdeal.from_generator(ZSqrt2.coerce(place))
    if not isinstance(place, PrimeIdeal):
        raise ValueError(f"unsupported place {place!r}")
    label = str(place)
    if place.residue_char == 2:
        cert = sqrt2_ramification_certificate()
        verdict = "ramified" if not cert["solutions"] else "split"
        return PlaceReport(label, verdict, cert)
    if place.residue_char == 3 and place.kind == "inert":
        w = _split_witness_mod3()
        return PlaceReport(label, "split", {"x": w, "y": ZSqrt2(0)})
    if place.kind == "split" and place.residue_char % 3:
        p, s = place.residue_char, place.sqrt2_image
        for x, y in itertools.product(range(p), repeat=2):
            if (x * x + 3 * y * y - s) % p == 0:
                return PlaceReport(label, "split", {"x": x, "y": y, "p": p})
        raise AssertionError("norm form is not surjective on F_p")
    raise ValueError(f"unsupported place {label}")

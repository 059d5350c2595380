r"""Exact arithmetic in $\mathbb{Z}[\sqrt{2}]$ and $\mathbb{Q}(\sqrt{2})$.

Everything here is immutable and works with Python integers, so there is no
precision loss anywhere. Floating-point values are only produced on request
through :meth:`ZSqrt2.__float__` or :func:`decimal_value`.
"""

from __future__ import annotations

import decimal
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Optional

from sympy import factorint, isprime

__all__ = [
    "ZSqrt2",
    "QSqrt2",
    "PrimeIdeal",
    "SplitReport",
    "R2",
    "field_norm",
    "ideal_norm",
    "conj",
    "factor_prime",
    "factor",
    "canonical_associate",
    "residue_map",
    "divides",
    "exact_quotient",
    "are_associate",
    "decimal_value",
    "UnsupportedIdealError",
]


class UnsupportedIdealError(ValueError):
    """Raised when an operation needs a split odd prime ideal and gets something else."""


@total_ordering
@dataclass(frozen=True)
class ZSqrt2:
    r"""An element $a + b\sqrt{2}$ of $\mathbb{Z}[\sqrt{2}]$.

    Ordering compares the real values under the embedding $\sqrt{2} > 0$,
    decided exactly.
    """

    a: int = 0
    b: int = 0

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            object.__setattr__(self, "a", _as_int(self.a))
            object.__setattr__(self, "b", _as_int(self.b))

    @classmethod
    def coerce(cls, x) -> "ZSqrt2":
        if isinstance(x, ZSqrt2):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        if isinstance(x, str):
            return cls.parse(x)
        raise TypeError(f"cannot interpret {x!r} as an element of Z[sqrt2]")

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            return ZSqrt2(self.a + other, self.b)
        if isinstance(other, ZSqrt2):
            return ZSqrt2(self.a + other.a, self.b + other.b)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return ZSqrt2(self.a - other, self.b)
        if isinstance(other, ZSqrt2):
            return ZSqrt2(self.a - other.a, self.b - other.b)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return ZSqrt2(other - self.a, -self.b)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return ZSqrt2(self.a * other, self.b * other)
        if isinstance(other, ZSqrt2):
            return ZSqrt2(
                self.a * other.a + 2 * self.b * other.b,
                self.a * other.b + self.b * other.a,
            )
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return ZSqrt2(-self.a, -self.b)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in Z[sqrt2]")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.a or self.b)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.a == other and self.b == 0
        if isinstance(other, ZSqrt2):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    def __lt__(self, other):
        other = ZSqrt2.coerce(other)
        return (other - self).sign() > 0

    def sign(self) -> int:
        """Sign of the real number a + b*sqrt(2), computed exactly."""
        a, b = self.a, self.b
        if a >= 0 and b >= 0:
            return 1 if (a or b) else 0
        if a <= 0 and b <= 0:
            return -1
        # opposite signs: compare a^2 with 2 b^2
        if a > 0:
            return 1 if a * a > 2 * b * b else -1
        return 1 if 2 * b * b > a * a else -1

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def conj(self) -> "ZSqrt2":
        return ZSqrt2(self.a, -self.b)

    def norm(self) -> int:
        return self.a * self.a - 2 * self.b * self.b

    def is_unit(self) -> bool:
        return abs(self.norm()) == 1

    def __float__(self):
        return self.a + self.b * math.sqrt(2)

    # -- text forms --------------------------------------------------------
    def __str__(self):
        return f"{self.a}{'+' if self.b >= 0 else '-'}{abs(self.b)}*r2"

    def __repr__(self):
        return f"ZSqrt2({self.a}, {self.b})"

    _TEXT = re.compile(r"([+-]?\d+)?(?:([+-]?)(\d*)\*?(r2))?")

    @classmethod
    def parse(cls, text: str) -> "ZSqrt2":
        """Parse ``a+b*r2``; also accepts ``r2``, ``-r2``, ``3*r2``, ``3-r2`` and plain integers."""
        s = text.replace(" ", "")
        m = cls._TEXT.fullmatch(s)
        if not s or m is None:
            raise ValueError(f"malformed Z[sqrt2] literal: {text!r}")
        head, sign, digits, r2 = m.groups()
        if r2 is None:
            return cls(int(head), 0)
        if head is not None and sign == "":
            # "3*r2": the leading integer is the coefficient of r2
            if digits:
                raise ValueError(f"malformed Z[sqrt2] literal: {text!r}")
            return cls(0, int(head))
        b = int(digits) if digits else 1
        return cls(int(head) if head else 0, -b if sign == "-" else b)

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b)}

    @classmethod
    def from_json(cls, obj: dict) -> "ZSqrt2":
        return cls(int(obj["a"]), int(obj["b"]))


def _as_int(x) -> int:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    if isinstance(x, int):
        return x
    raise TypeError(f"expected an integer, got {x!r}")


ZERO = ZSqrt2(0, 0)
ONE = ZSqrt2(1, 0)
R2 = ZSqrt2(0, 1)
FUNDAMENTAL_UNIT = ZSqrt2(1, 1)


def field_norm(x: ZSqrt2) -> int:
    """Signed field norm a^2 - 2 b^2."""
    return ZSqrt2.coerce(x).norm()


def ideal_norm(x: ZSqrt2) -> int:
    return abs(field_norm(x))


def conj(x: ZSqrt2) -> ZSqrt2:
    return ZSqrt2.coerce(x).conj()


def exact_quotient(x: ZSqrt2, d: ZSqrt2) -> Optional[ZSqrt2]:
    """Return x / d when it lies in Z[sqrt2], otherwise None."""
    x, d = ZSqrt2.coerce(x), ZSqrt2.coerce(d)
    if not d:
        raise ZeroDivisionError("division by zero in Z[sqrt2]")
    n = d.norm()
    t = x * d.conj()
    if t.a % n or t.b % n:
        return None
    return ZSqrt2(t.a // n, t.b // n)


def divides(d: ZSqrt2, x: ZSqrt2) -> bool:
    return exact_quotient(x, d) is not None


def are_associate(x: ZSqrt2, y: ZSqrt2) -> bool:
    x, y = ZSqrt2.coerce(x), ZSqrt2.coerce(y)
    if not x or not y:
        return not x and not y
    q = exact_quotient(x, y)
    return q is not None and q.is_unit()


@dataclass(frozen=True)
class QSqrt2:
    r"""An element of $\mathbb{Q}(\sqrt{2})$ stored as ``num / den`` in lowest terms."""

    num: ZSqrt2
    den: int = 1

    def __post_init__(self):
        num = ZSqrt2.coerce(self.num)
        den = self.den
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(math.gcd(num.a, num.b), den)
        if g > 1:
            num, den = ZSqrt2(num.a // g, num.b // g), den // g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def coerce(cls, x) -> "QSqrt2":
        if isinstance(x, QSqrt2):
            return x
        if isinstance(x, Fraction):
            return cls(ZSqrt2(x.numerator), x.denominator)
        return cls(ZSqrt2.coerce(x), 1)

    @classmethod
    def of(cls, a, b=0) -> "QSqrt2":
        """Build a + b*sqrt2 from rationals (ints or Fractions)."""
        a, b = Fraction(a), Fraction(b)
        den = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
        return cls(ZSqrt2(int(a * den), int(b * den)), den)

    @property
    def a(self) -> Fraction:
        return Fraction(self.num.a, self.den)

    @property
    def b(self) -> Fraction:
        return Fraction(self.num.b, self.den)

    def is_integral(self) -> bool:
        return self.den == 1

    def to_zsqrt2(self) -> ZSqrt2:
        if self.den != 1:
            raise ValueError(f"{self} is not in Z[sqrt2]")
        return self.num

    def __add__(self, other):
        other = _q(other)
        if other is None:
            return NotImplemented
        return QSqrt2(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt2(-self.num, self.den)

    def __sub__(self, other):
        other = _q(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _q(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _q(other)
        if other is None:
            return NotImplemented
        return QSqrt2(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "QSqrt2":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        n = self.num.norm()
        return QSqrt2(self.num.conj() * self.den, n)

    def __truediv__(self, other):
        other = _q(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _q(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = _q(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def conj(self) -> "QSqrt2":
        return QSqrt2(self.num.conj(), self.den)

    def norm(self) -> Fraction:
        return Fraction(self.num.norm(), self.den * self.den)

    def __float__(self):
        return float(self.num) / self.den

    def __str__(self):
        return str(self.num) if self.den == 1 else f"({self.num})/{self.den}"

    def __repr__(self):
        return f"QSqrt2({self.num!r}, {self.den})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": str(self.den)}

    @classmethod
    def from_json(cls, obj: dict) -> "QSqrt2":
        return cls(ZSqrt2.from_json(obj["num"]), int(obj["den"]))


def _q(x) -> Optional[QSqrt2]:
    if isinstance(x, QSqrt2):
        return x
    if isinstance(x, (int, ZSqrt2, Fraction)):
        return QSqrt2.coerce(x)
    return None


# ---------------------------------------------------------------------------
# prime ideals


@dataclass(frozen=True)
class PrimeIdeal:
    """A prime ideal of Z[sqrt2] given by a generator.

    ``sqrt2_image`` is the residue of sqrt2 in F_p for split odd primes and
    ``None`` for the ramified ideal (sqrt2) and for inert ideals.
    """

    generator: ZSqrt2
    residue_char: int
    sqrt2_image: Optional[int] = None

    @property
    def kind(self) -> str:
        if self.residue_char == 2:
            return "ramified"
        return "split" if self.sqrt2_image is not None else "inert"

    @property
    def norm(self) -> int:
        return ideal_norm(self.generator)

    @classmethod
    def from_generator(cls, g) -> "PrimeIdeal":
        g = ZSqrt2.coerce(g)
        n = ideal_norm(g)
        if n == 2:
            return cls(g, 2, None)
        if isprime(n):
            p = n
            for s in range(p):
                if (s * s - 2) % p == 0 and (g.a + g.b * s) % p == 0:
                    return cls(g, p, s)
            raise AssertionError("no root of x^2 - 2 annihilates the generator")
        r = math.isqrt(n)
        if r * r == n and isprime(r) and r % 8 in (3, 5) and exact_quotient(g, ZSqrt2(r)) is not None:
            return cls(g, r, None)
        raise ValueError(f"{g} does not generate a prime ideal")

    @classmethod
    def parse(cls, text: str) -> "PrimeIdeal":
        return cls.from_generator(ZSqrt2.parse(text.strip().strip("()")))

    def contains(self, x: ZSqrt2) -> bool:
        return divides(self.generator, x)

    def __eq__(self, other):
        if not isinstance(other, PrimeIdeal):
            return NotImplemented
        return self.residue_char == other.residue_char and are_associate(self.generator, other.generator)

    def __hash__(self):
        return hash((self.residue_char, self.sqrt2_image))

    def conjugate(self) -> "PrimeIdeal":
        return PrimeIdeal.from_generator(self.generator.conj())

    def __str__(self):
        return f"({self.generator})"


@dataclass(frozen=True)
class SplitReport:
    p: int
    kind: str  # "split", "inert" or "ramified"
    primes: tuple  # generators: (pi, conj(pi)), (p,), or (sqrt2,)

    @property
    def ideals(self) -> tuple:
        return tuple(PrimeIdeal.from_generator(g) for g in self.primes)


def factor_prime(p: int) -> SplitReport:
    """Decompose the rational prime p in Z[sqrt2].

    Split primes get the generator with the smallest |b| (and then a > 0,
    b > 0); the conjugate generator comes second.
    """
    if not isinstance(p, int) or p < 2 or not isprime(p):
        raise ValueError(f"{p!r} is not a rational prime")
    if p == 2:
        return SplitReport(2, "ramified", (R2,))
    if p % 8 not in (1, 7):
        return SplitReport(p, "inert", (ZSqrt2(p),))
    for b in range(1, p + 1):
        for target in (p + 2 * b * b, 2 * b * b - p):
            if target > 0:
                a = math.isqrt(target)
                if a * a == target:
                    pi = ZSqrt2(a, b)
                    return SplitReport(p, "split", (pi, pi.conj()))
    raise AssertionError(f"no generator found for split prime {p}")


def residue_map(ideal: PrimeIdeal, x: ZSqrt2) -> int:
    """Image of x in O_K / ideal = F_p, for a split odd prime ideal."""
    if ideal.sqrt2_image is None or ideal.residue_char == 2:
        raise UnsupportedIdealError(f"{ideal} is not a split odd prime ideal")
    x = ZSqrt2.coerce(x)
    return (x.a + x.b * ideal.sqrt2_image) % ideal.residue_char


def factor(x: ZSqrt2) -> tuple:
    """Factor a nonzero x as unit * prod(prime ** e).

    Primes are the canonical generators from :func:`factor_prime` (sqrt2 for
    the ramified prime).  Returns ``(unit, [(prime, exponent), ...])``.
    """
    x = ZSqrt2.coerce(x)
    if not x:
        raise ValueError("cannot factor zero")
    rest = x
    out = []
    for p in sorted(factorint(abs(x.norm()))):
        for g in factor_prime(p).primes:
            e = 0
            while True:
                q = exact_quotient(rest, g)
                if q is None:
                    break
                rest, e = q, e + 1
            if e:
                out.append((g, e))
    if not rest.is_unit():
        raise AssertionError("factorization left a non-unit cofactor")
    return rest, out


def canonical_associate(x: ZSqrt2) -> ZSqrt2:
    """Deterministic generator of the principal ideal xZ[sqrt2].

    The product of the canonical prime generators with multiplicity, i.e. a
    power of sqrt2 times the canonical odd-prime generators.  Units map to 1.
    """
    _, parts = factor(x)
    out = ONE
    for g, e in parts:
        out = out * g**e
    return out


_DEC_CTX = decimal.Context(prec=60, rounding=decimal.ROUND_HALF_UP)
_SQRT2_DEC = _DEC_CTX.sqrt(decimal.Decimal(2))


def decimal_value(x: ZSqrt2, places: int = 3) -> decimal.Decimal:
    """Real value of x rounded half-up to the given number of decimal places."""
    x = ZSqrt2.coerce(x)
    v = _DEC_CTX.add(decimal.Decimal(x.a), _DEC_CTX.multiply(decimal.Decimal(x.b), _SQRT2_DEC))
    return v.quantize(decimal.Decimal(1).scaleb(-places), rounding=decimal.ROUND_HALF_UP)

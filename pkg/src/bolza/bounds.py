"""Trace and systole bounds, the triangle-group invariant, and the twin table."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction

from .quadratic import ZSqrt2, are_associate, decimal_value, factor_prime

# ---------------------------------------------------------------------------
# the constant Lambda


@dataclass(frozen=True)
class Place:
    """A finite place of the centre: its norm, ramification index over Q, and whether it lies over 2."""

    name: str
    norm: int
    above_2: bool = False
    e: int = 1


SQRT2_PLACE = Place("(sqrt2)", 2, above_2=True, e=2)


def lambda_constant(t1=(), t2=()) -> Fraction:
    """Product of (1 + 1/N(p)) over T1 minus T2, 2 over T2, and N(p)^e(p) over T2 above 2.

    T1 holds the ramified finite places of the algebra, T2 the places where
    the order is not maximal.
    """
    t2_names = {p.name for p in t2}
    out = Fraction(1)
    for p in t1:
        if p.name not in t2_names:
            out *= 1 + Fraction(1, p.norm)
    for p in t2:
        out *= 2
        if p.above_2:
            out *= Fraction(p.norm) ** p.e
    return out


BOLZA_LAMBDA_PLACES = ((SQRT2_PLACE,), ())


def trace_bound(n: int, d: int = 2) -> Fraction:
    """Lower bound N^2 / 2^(2(d-1)) - 2 for |Tr| on a principal congruence subgroup of level norm N."""
    if n < 1 or d < 1:
        raise ValueError("need N >= 1 and d >= 1")
    return Fraction(n * n, 2 ** (2 * (d - 1))) - 2


class NotHyperbolicError(ValueError):
    """|trace| < 2: the element is elliptic (or the identity)."""


def sys_from_trace(t) -> float:
    """Translation length 2 arccosh(|t|/2) of a hyperbolic element with trace t."""
    if isinstance(t, ZSqrt2):
        if abs(t) < ZSqrt2(2):
            raise NotHyperbolicError(f"|{t}| < 2")
        v = abs(float(t))
    else:
        v = abs(float(t))
        if v < 2:
            raise NotHyperbolicError(f"|{t}| < 2")
    return 2.0 * math.acosh(v / 2.0)


# ---------------------------------------------------------------------------
# genus bounds


@dataclass(frozen=True)
class BoundParams:
    d: int
    lam: Fraction
    area_over_pi: Fraction  # area of the base orbifold divided by pi
    norm: int | None = None

    def __post_init__(self):
        if self.lam < 1 or self.area_over_pi <= 0 or self.d < 1:
            raise ValueError("need Lambda >= 1, area > 0, d >= 1")


BOLZA_PARAMS = BoundParams(d=2, lam=Fraction(3, 2), area_over_pi=Fraction(1, 6))


@dataclass
class Check43Report:
    lhs: Fraction
    rhs: Fraction
    holds: bool
    c: Fraction
    threshold_constant: float | None
    threshold_genus: int | None
    genus: int | None = None
    norm_lower_bound: float | None = None
    sys_lower_bound: float | None = None
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "condition": f"{self.lhs} < {self.rhs}",
            "holds": self.holds,
            "c": str(self.c),
            "threshold_constant": self.threshold_constant,
            "threshold_genus": self.threshold_genus,
            "genus": self.genus,
            "norm_lower_bound": self.norm_lower_bound,
            "sys_lower_bound": self.sys_lower_bound,
            "notes": self.notes,
        }


def check_43(params: BoundParams = BOLZA_PARAMS, g: int | None = None) -> Check43Report:
    """Test 2^(3(d-1)) Lambda < 4 pi / area and, if it holds, bound sys from below at genus g.

    Writing c for the ratio of the two sides, the bound sys > (4/3 - o(1)) log g
    is effective once g >= max(13, (6/(c-1))^(3/2)).
    """
    if g is not None and g < 2:
        raise ValueError("genus must be at least 2")
    lhs = Fraction(2 ** (3 * (params.d - 1))) * params.lam
    rhs = Fraction(4) / params.area_over_pi
    c = rhs / lhs
    if c <= 1:
        return Check43Report(lhs, rhs, False, c, None, None, g, notes=["hypothesis fails: c <= 1"])
    const = (6 / float(c - 1)) ** 1.5
    threshold = max(13, math.ceil(const))
    report = Check43Report(lhs, rhs, True, c, const, threshold, g)
    if g is not None:
        n_min = (4 * (g - 1) / float(params.lam * params.area_over_pi)) ** (1 / 3)
        report.norm_lower_bound = n_min
        inner = n_min**2 / 2 ** (2 * (params.d - 1)) - 3
        report.sys_lower_bound = 2 * math.log(inner) if inner > 1 else None
        if g < threshold:
            report.notes.append(f"g = {g} is below the threshold {threshold}")
    return report


# ---------------------------------------------------------------------------
# triangle groups


class SignatureError(ValueError):
    pass


@dataclass(frozen=True)
class TriangleLambda:
    signature: tuple
    value: float
    exact: tuple | None  # (a, b) with value = a + b sqrt2, rational a, b
    conjugate: float | None
    arithmetic: bool | None

    def to_json(self) -> dict:
        return {
            "signature": list(self.signature),
            "lambda": self.value,
            "exact": None if self.exact is None else [str(self.exact[0]), str(self.exact[1])],
            "conjugate": self.conjugate,
            "arithmetic": self.arithmetic,
        }


def _recognize(v: float, tol: float = 1e-9, max_den: int = 64):
    """Write v as a + b sqrt2 with rationals of bounded denominator, if possible."""
    import sympy

    expr = sympy.nsimplify(v, [sympy.sqrt(2)], tolerance=tol)
    a, b = sympy.S(0), sympy.S(0)
    for term in sympy.Add.make_args(sympy.expand(expr)):
        coeff, rest = term.as_coeff_Mul()
        if rest == 1:
            a += coeff
        elif rest == sympy.sqrt(2):
            b += coeff
        else:
            return None
    if not (a.is_Rational and b.is_Rational) or a.q > max_den or b.q > max_den:
        return None
    a, b = Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q))
    if abs(float(a) + float(b) * math.sqrt(2) - v) > tol:
        return None
    return a, b


def triangle_lambda(l: int, m: int, n: int) -> TriangleLambda:
    """4cos^2(pi/l) + 4cos^2(pi/m) + 4cos^2(pi/n) + 8cos(pi/l)cos(pi/m)cos(pi/n) - 4.

    When the value lies in Q(sqrt2) with nonzero sqrt2 part, the group is
    arithmetic exactly when the Galois conjugate is negative. Other fields get no verdict.
    """
    if Fraction(1, l) + Fraction(1, m) + Fraction(1, n) >= 1:
        raise SignatureError(f"({l},{m},{n}) is not hyperbolic")
    cl, cm, cn = (math.cos(math.pi / k) for k in (l, m, n))
    v = 4 * cl * cl + 4 * cm * cm + 4 * cn * cn + 8 * cl * cm * cn - 4
    exact = _recognize(v)
    if exact is None or exact[1] == 0:
        return TriangleLambda((l, m, n), v, exact, None, None)
    sigma = float(exact[0]) - float(exact[1]) * math.sqrt(2)
    return TriangleLambda((l, m, n), v, exact, sigma, sigma < 0)


# ---------------------------------------------------------------------------
# twin table

# (ideal generator, N(I), lowest trace, decimal, bound) as published
PUBLISHED_TABLE = (
    ("1+2*r2", 7, "7+4*r2", "12.657", "10.25"),
    ("1-2*r2", 7, "9+6*r2", "17.485", "10.25"),
    ("1-3*r2", 17, "75+53*r2", "149.953", "70.25"),
    ("1+3*r2", 17, "79+56*r2", "158.196", "70.25"),
    ("5-1*r2", 23, "91+65*r2", "182.924", "130.25"),
    ("5+1*r2", 23, "119+84*r2", "237.794", "130.25"),
    ("9+5*r2", 31, "129+90*r2", "256.279", "238.25"),
    ("9-5*r2", 31, "153+109*r2", "307.149", "238.25"),
    ("7+2*r2", 41, "281+198*r2", "561.014", "418.25"),
    ("7-2*r2", 41, "295+208*r2", "589.156", "418.25"),
    ("7+1*r2", 47, "499+353*r2", "998.217", "550.25"),
    ("7-1*r2", 47, "529+374*r2", "1057.916", "550.25"),
    ("11-5*r2", 71, "633+449*r2", "1267.982", "1258.25"),
    ("11+5*r2", 71, "951+672*r2", "1901.352", "1258.25"),
)

# genus as printed beside each prime heading, where it was printed
PUBLISHED_GENUS_FORMULA = {71: (7456, 47)}


def twin_genus(p: int) -> int:
    """Genus p(p^2 - 1)/48 + 1 of the cover with group PSL2(F_p)."""
    return p * (p * p - 1) // 48 + 1


@dataclass
class TwinRow:
    ideal: ZSqrt2
    norm: int
    word: str | None
    congruence: int | None
    trace: ZSqrt2 | None
    decimal: Decimal | None
    bound: Fraction
    published: tuple
    trace_confirmed: bool = True
    scan_smaller: str | None = None

    @property
    def matches(self) -> dict:
        _, n, t, dec, bnd = self.published
        return {
            "norm": self.norm == n,
            "trace": self.trace is not None and abs(self.trace) == ZSqrt2.parse(t),
            "decimal": self.decimal is not None and str(self.decimal) == dec,
            "bound": Decimal(self.bound.numerator) / Decimal(self.bound.denominator) == Decimal(bnd),
            "congruence": self.congruence is not None,
        }

    def to_json(self) -> dict:
        return {
            "ideal": str(self.ideal),
            "norm": self.norm,
            "word": self.word,
            "congruence": self.congruence,
            "trace": None if self.trace is None else str(self.trace),
            "decimal": None if self.decimal is None else str(self.decimal),
            "bound": str(Decimal(self.bound.numerator) / Decimal(self.bound.denominator)),
            "trace_confirmed": self.trace_confirmed,
            "matches": self.matches,
            "scan_smaller": self.scan_smaller,
        }

    def markdown(self) -> str:
        mark = "" if self.trace_confirmed else " (unconfirmed)"
        bound = Decimal(self.bound.numerator) / Decimal(self.bound.denominator)
        return f"| ({self.ideal}) | {self.norm} | {abs(self.trace) if self.trace else '-'}{mark} | {self.decimal} | {bound} |"


def _best_entry(ideal: ZSqrt2):
    from .words import registry_by_ideal

    entries = registry_by_ideal(ideal)
    if not entries:
        return None
    return min(entries, key=lambda e: (float(abs(e.trace)), e.key))


def twin_row(ideal, scan_len: int = 0) -> TwinRow:
    from .modp import congruence_member, split_rep
    from .words import eval_word

    ideal = ZSqrt2.coerce(ideal) if not isinstance(ideal, str) else ZSqrt2.parse(ideal)
    published = next((r for r in PUBLISHED_TABLE if are_associate(ZSqrt2.parse(r[0]), ideal)), None)
    n = abs(ideal.norm())
    entry = _best_entry(ideal)
    row = TwinRow(ideal, n, None, None, None, None, trace_bound(n, 2), published or (str(ideal), n, "", "", ""))
    if entry is not None:
        t = eval_word(entry.word).trace()
        row.word = str(entry.word)
        row.congruence = congruence_member(ideal, entry.word)
        row.trace = t
        row.decimal = decimal_value(abs(t))
        row.trace_confirmed = entry.trace_confirmed
    if scan_len:
        from .cosets import min_trace_scan

        res = min_trace_scan(split_rep(ideal), max_len=scan_len)
        if res["abs_trace"] is not None and (row.trace is None or res["abs_trace"] < abs(row.trace)):
            row.scan_smaller = f"{res['word']} with trace {res['min_trace']}"
    return row


@dataclass
class TwinTable:
    rows: list
    notes: list

    def to_json(self) -> dict:
        return {"rows": [r.to_json() for r in self.rows], "notes": self.notes}

    def markdown(self) -> str:
        head = ["| I | N(I) | lowest trace | decimal | N(I)^2/4 - 2 |", "|---|---|---|---|---|"]
        return "\n".join(head + [r.markdown() for r in self.rows] + [""] + [f"- {n}" for n in self.notes])


def twin_table(primes=(7, 17, 23, 31, 41, 47, 71), scan_len: int = 0) -> TwinTable:
    rows, notes = [], []
    for p in primes:
        rep = factor_prime(p)
        if rep.kind != "split":
            raise ValueError(f"{p} does not split in Z[sqrt2]")
        published = [r for r in PUBLISHED_TABLE if r[1] == p]
        ideals = [ZSqrt2.parse(r[0]) for r in published] or list(rep.primes)
        rows.extend(twin_row(I, scan_len) for I in ideals)
        if p in PUBLISHED_GENUS_FORMULA:
            g, printed_p = PUBLISHED_GENUS_FORMULA[p]
            if twin_genus(printed_p) != g and twin_genus(p) == g:
                notes.append(
                    f"p = {p}: genus {g} = {p}({p}^2 - 1)/48 + 1; the printed formula uses {printed_p}, "
                    f"which would give {twin_genus(printed_p)}"
                )
    for r in rows:
        if not r.trace_confirmed:
            notes.append(f"({r.ideal}): trace {r.trace} of word {r.word} recomputed but its attribution is unconfirmed")
        if r.scan_smaller:
            notes.append(f"({r.ideal}): bounded scan found {r.scan_smaller}")
    return TwinTable(rows, notes)

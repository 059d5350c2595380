r"""The rings Q_B / 2 Q_B (256 elements) and Q_B / sqrt2 Q_B (16 elements).

An element ``y00 + y01*alpha + y10*beta' + y11*alpha*beta'`` of Q_B/2Q_B, with
``beta' = beta + alpha + 1 + eps``, is packed into one byte: coordinate ``k``
occupies bits ``2k`` (constant part) and ``2k+1`` (``eps`` part). Addition is
XOR. The multiplication table is obtained by lifting to the Bolza order, so
reduction is a ring map by construction; the printed relations are then
checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import order as bo
from .groups import FiniteGroup, identify_group
from .quadratic import ZSqrt2

# F2[eps] as 2-bit integers c0 + 2*c1
F2EPS_MUL = np.array([[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 0, 2], [0, 3, 2, 1]], dtype=np.uint8)
F2EPS_UNITS = (1, 3)


@dataclass(frozen=True)
class F2Eps:
    c0: int = 0
    c1: int = 0

    @classmethod
    def from_code(cls, v: int) -> "F2Eps":
        return cls(v & 1, (v >> 1) & 1)

    @property
    def code(self) -> int:
        return self.c0 | (self.c1 << 1)

    def __add__(self, other):
        return F2Eps.from_code(self.code ^ other.code)

    def __mul__(self, other):
        return F2Eps.from_code(int(F2EPS_MUL[self.code, other.code]))

    def is_unit(self) -> bool:
        return self.c0 == 1

    def __str__(self):
        return {0: "0", 1: "1", 2: "eps", 3: "1+eps"}[self.code]


EPS = F2Eps(0, 1)


def _coords(x: int) -> tuple:
    return tuple((x >> (2 * k)) & 3 for k in range(4))


def _pack(c) -> int:
    return sum((int(v) & 3) << (2 * k) for k, v in enumerate(c))


def _reduce_zsqrt2(z: ZSqrt2) -> int:
    return (z.a & 1) | ((z.b & 1) << 1)


def _lift_f2eps(v: int) -> ZSqrt2:
    return ZSqrt2(v & 1, (v >> 1) & 1)


def reduce_mod2(x: bo.BElem) -> int:
    """BElem -> byte in the alpha, beta' basis."""
    x0, x1, x2, x3 = (_reduce_zsqrt2(c) for c in x.coords)
    mul = F2EPS_MUL
    # beta = beta' + alpha + 1 + eps, alpha*beta = alpha*beta' + 1 + eps*alpha
    y00 = x0 ^ mul[x2, 3] ^ x3
    y01 = x1 ^ x2 ^ mul[x3, 2]
    return _pack((y00, y01, x2, x3))


# lifts of the basis 1, alpha, beta', alpha*beta' to the Bolza order
_BASIS_LIFTS = (
    bo.ONE,
    bo.ALPHA,
    bo.BETA + bo.ALPHA + 1 + ZSqrt2(0, 1),
    bo.ALPHA * (bo.BETA + bo.ALPHA + 1 + ZSqrt2(0, 1)),
)


def lift(x: int) -> bo.BElem:
    """A preimage of the byte ``x`` in the Bolza order."""
    out = bo.BElem()
    for v, b in zip(_coords(x), _BASIS_LIFTS):
        if v:
            out = out + b * _lift_f2eps(v)
    return out


@lru_cache(maxsize=1)
def basis_products() -> np.ndarray:
    """``P[i, j]`` = byte of ``e_i * e_j`` for the basis 1, alpha, beta', alpha*beta'."""
    return np.array([[reduce_mod2(a * b) for b in _BASIS_LIFTS] for a in _BASIS_LIFTS], dtype=np.uint8)


def _scale(v: np.ndarray, byte: int) -> np.ndarray:
    """F2[eps]-scalar multiples ``v * byte`` for an array of scalars ``v``."""
    out = np.zeros_like(v)
    for k, c in enumerate(_coords(byte)):
        out |= F2EPS_MUL[v, c] << (2 * k)
    return out


@lru_cache(maxsize=1)
def mul_table() -> np.ndarray:
    elems = np.arange(256, dtype=np.uint8)
    coords = [(elems >> (2 * k)) & 3 for k in range(4)]
    prods = basis_products()
    table = np.zeros((256, 256), dtype=np.uint8)
    for i in range(4):
        for j in range(4):
            coef = F2EPS_MUL[coords[i][:, None], coords[j][None, :]]
            table ^= _scale(coef, int(prods[i, j]))
    table.setflags(write=False)
    return table


@lru_cache(maxsize=1)
def star_table() -> np.ndarray:
    t = np.array([reduce_mod2(lift(x).star()) for x in range(256)], dtype=np.uint8)
    t.setflags(write=False)
    return t


def barq_mul(x: int, y: int) -> int:
    return int(mul_table()[x, y])


def barq_add(x: int, y: int) -> int:
    return x ^ y


def barq_star(x: int) -> int:
    return int(star_table()[x])


class NotCentralError(AssertionError):
    pass


def barq_norm(x: int) -> F2Eps:
    n = barq_mul(x, barq_star(x))
    if n > 3:
        raise NotCentralError(f"x * x^* = {format_barq(n)} is not a scalar")
    return F2Eps.from_code(n)


@lru_cache(maxsize=1)
def norm_table() -> np.ndarray:
    t = mul_table()[np.arange(256), star_table()]
    if (t > 3).any():
        raise NotCentralError("some norm is not a scalar")
    return t


def printed_norm_formula(x: int, variant: str = "componentwise") -> F2Eps:
    """Closed-form norms. ``componentwise``: N(y0) + N(y1) eps with y0 = x00 + x01 alpha,
    y1 = x10 + x11 alpha. ``combined``: the one-line formula as usually displayed,
    (x00^2 + x00 x01 + x11^2) + (x10^2 + x10 x11 + x11^2) eps."""
    x00, x01, x10, x11 = (F2Eps.from_code(v) for v in _coords(x))

    def gal(a, b):
        return a * a + a * b + b * b

    if variant == "componentwise":
        return gal(x00, x01) + gal(x10, x11) * EPS
    if variant == "combined":
        return (x00 * x00 + x00 * x01 + x11 * x11) + (x10 * x10 + x10 * x11 + x11 * x11) * EPS
    raise ValueError(variant)


# ---------------------------------------------------------------------------
# named elements and formatting

ONE = 1
ALPHA = _pack((0, 1, 0, 0))
BETA_P = _pack((0, 0, 1, 0))
ALPHA_BETA_P = _pack((0, 0, 0, 1))
EPS_BYTE = 2


def eps_times(x: int) -> int:
    return barq_mul(EPS_BYTE, x)


def element(y00=0, y01=0, y10=0, y11=0) -> int:
    """Build a byte from F2[eps] coordinates given as codes 0..3 or F2Eps values."""
    return _pack(tuple(v.code if isinstance(v, F2Eps) else v for v in (y00, y01, y10, y11)))


def parse_barq(text: str) -> int:
    """Sum of terms such as ``1``, ``eps``, ``alpha``, ``eps*beta'``, ``eps*alpha*beta'``."""
    basis = {"1": ONE, "alpha": ALPHA, "beta'": BETA_P, "alpha*beta'": ALPHA_BETA_P}
    out = 0
    for term in text.replace(" ", "").split("+"):
        if term == "0":
            continue
        if term not in basis and not term.startswith("eps"):
            raise ValueError(f"unknown term {term!r} in {text!r}")
        scale = 1
        if term.startswith("eps"):
            scale = EPS_BYTE
            term = term[3:].lstrip("*") or "1"
        out ^= barq_mul(scale, basis[term])
    return out


def format_barq(x: int) -> str:
    names = ("1", "alpha", "beta'", "alpha*beta'")
    terms = []
    for v, name in zip(_coords(x), names):
        if v & 1:
            terms.append(name)
        if v & 2:
            terms.append("eps" if name == "1" else f"eps*{name}")
    return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# ideals and unit groups

ALL = np.arange(256)


def principal_right_ideal(x: int) -> np.ndarray:
    return np.unique(mul_table()[x, :])


def principal_left_ideal(x: int) -> np.ndarray:
    return np.unique(mul_table()[:, x])


def ideal_product(i: np.ndarray, j: np.ndarray) -> np.ndarray:
    """Additive span of all products."""
    span = {0}
    for p in np.unique(mul_table()[np.ix_(i, j)]).tolist():
        span |= {s ^ p for s in span}
    return np.array(sorted(span))


def units() -> np.ndarray:
    return np.nonzero(np.isin(norm_table(), F2EPS_UNITS))[0]


def norm_one() -> np.ndarray:
    return np.nonzero(norm_table() == 1)[0]


def congruence_units(ideal: np.ndarray, norm_one_only: bool = False) -> np.ndarray:
    """Units in 1 + I (or norm-one units in 1 + I)."""
    base = norm_one() if norm_one_only else units()
    return np.intersect1d(base, np.asarray(ideal) ^ 1)


@lru_cache(maxsize=1)
def unit_group() -> tuple:
    """(FiniteGroup of Q-bar^x, sorted byte list); group indices follow the list."""
    u = units()
    pos = np.full(256, -1)
    pos[u] = np.arange(len(u))
    table = pos[mul_table()[np.ix_(u, u)]]
    return FiniteGroup(table), u


def _as_group_indices(bytes_) -> np.ndarray:
    _, u = unit_group()
    pos = {int(b): k for k, b in enumerate(u)}
    return np.array(sorted(pos[int(b)] for b in bytes_))


def _to_bytes(indices) -> np.ndarray:
    _, u = unit_group()
    return u[np.asarray(indices)]


@dataclass
class FiltrationReport:
    orders: dict
    indices: dict
    norm_one_orders: dict
    norm_one_indices: dict
    layers: tuple
    norm_one_layers: tuple
    identifications: dict
    jacobson: dict
    diagram: str = field(repr=False, default="")

    def to_json(self) -> dict:
        return {
            "orders": self.orders,
            "indices": self.indices,
            "norm_one_orders": self.norm_one_orders,
            "norm_one_indices": self.norm_one_indices,
            "layers": list(self.layers),
            "norm_one_layers": list(self.norm_one_layers),
            "identifications": self.identifications,
            "jacobson": self.jacobson,
        }


def jacobson_chain() -> dict:
    j1 = principal_right_ideal(BETA_P)
    j2 = ideal_product(j1, j1)
    j3 = ideal_product(j2, j1)
    j4 = ideal_product(j3, j1)
    return {"J": j1, "J2": j2, "J3": j3, "J4": j4}


def _check_ideal_equalities(chain: dict) -> dict:
    return {
        "J = beta' Q": bool(np.array_equal(chain["J"], principal_left_ideal(BETA_P))),
        "J2 = eps Q": bool(np.array_equal(chain["J2"], principal_right_ideal(EPS_BYTE))),
        "J3 = eps beta' Q": bool(np.array_equal(chain["J3"], principal_right_ideal(barq_mul(EPS_BYTE, BETA_P)))),
        "J4 = 0": chain["J4"].tolist() == [0],
    }


_LEVELS = ("1", "beta'", "eps", "eps*beta'")


def _level_ideals() -> dict:
    return {
        "1": ALL,
        "beta'": principal_right_ideal(BETA_P),
        "eps": principal_right_ideal(EPS_BYTE),
        "eps*beta'": principal_right_ideal(barq_mul(EPS_BYTE, BETA_P)),
    }


def _diagram(orders: dict, n1: dict) -> str:
    lines = ["digraph filtration {"]
    for a, b in zip(_LEVELS, _LEVELS[1:]):
        lines.append(f'  "Qx({a})" -> "Qx({b})" [label="{orders[a] // orders[b]}"];')
        lines.append(f'  "Q1({a})" -> "Q1({b})" [label="{n1[a] // n1[b]}"];')
    for lvl in _LEVELS:
        lines.append(f'  "Qx({lvl})" -> "Q1({lvl})" [label="{orders[lvl] // n1[lvl]}"];')
    lines.append('  "Qx(eps*beta\')" -> "1" [label="%d"];' % orders["eps*beta'"])
    lines.append("}")
    return "\n".join(lines)


def unit_filtration() -> FiltrationReport:
    g, _ = unit_group()
    ideals = _level_ideals()
    ux = {lvl: congruence_units(ideals[lvl]) for lvl in _LEVELS}
    u1 = {lvl: congruence_units(ideals[lvl], norm_one_only=True) for lvl in _LEVELS}
    orders = {lvl: len(v) for lvl, v in ux.items()}
    n1 = {lvl: len(v) for lvl, v in u1.items()}
    layers = tuple(orders[a] // orders[b] for a, b in zip(_LEVELS, _LEVELS[1:])) + (orders["eps*beta'"],)
    n1_layers = tuple(n1[a] // n1[b] for a, b in zip(_LEVELS, _LEVELS[1:])) + (n1["eps*beta'"],)

    def grp(lvl, one):
        return _as_group_indices((u1 if one else ux)[lvl])

    q1 = g.subgroup(grp("1", True))
    # subgroups of Q1 re-indexed inside q1
    pos1 = {int(v): k for k, v in enumerate(grp("1", True))}

    def in_q1(lvl):
        return [pos1[int(v)] for v in grp(lvl, True)]

    ident = {
        "Q1/Q1(eps*beta')": identify_group(q1.quotient(in_q1("eps*beta'"))),
        "Q1/Q1(eps)": identify_group(q1.quotient(in_q1("eps"))),
        "Q1/Q1(beta')": identify_group(q1.quotient(in_q1("beta'"))),
        "Q1(beta')/Q1(eps)": identify_group(
            g.subgroup(grp("beta'", True)).quotient(_reindex(grp("beta'", True), grp("eps", True)))
        ),
        "Q1(eps*beta')": identify_group(g.subgroup(grp("eps*beta'", True))),
        "Qx(eps)": identify_group(g.subgroup(grp("eps", False))),
        "Qx/Qx(eps*beta')": identify_group(g.quotient(grp("eps*beta'", False))),
        "Qx/Q1(eps)": identify_group(g.quotient(grp("eps", True))),
        "Qx/Qx(beta')": identify_group(g.quotient(grp("beta'", False))),
    }
    for a, b in zip(_LEVELS[1:], _LEVELS[2:]):
        sub = g.subgroup(grp(a, False))
        ident[f"Qx({a})/Qx({b})"] = identify_group(sub.quotient(_reindex(grp(a, False), grp(b, False))))
    chain = jacobson_chain()
    jac = {k: len(v) for k, v in chain.items()}
    jac.update(_check_ideal_equalities(chain))
    return FiltrationReport(
        orders=orders,
        indices={f"{a}:{b}": orders[a] // orders[b] for a, b in zip(_LEVELS, _LEVELS[1:])},
        norm_one_orders=n1,
        norm_one_indices={f"{a}:{b}": n1[a] // n1[b] for a, b in zip(_LEVELS, _LEVELS[1:])},
        layers=layers,
        norm_one_layers=n1_layers,
        identifications=ident,
        jacobson=jac,
        diagram=_diagram(orders, n1),
    )


def _reindex(outer: np.ndarray, inner: np.ndarray) -> list:
    pos = {int(v): k for k, v in enumerate(outer)}
    return [pos[int(v)] for v in inner]


# ---------------------------------------------------------------------------
# the Bolza group inside Q-bar^1


def bolza_position() -> dict:
    from .words import DELTA_WORD, DELTA_ALT_WORD, eval_word

    g, u = unit_group()
    pos = {int(b): k for k, b in enumerate(u)}
    a_bar = reduce_mod2(bo.ALPHA)
    b_bar = reduce_mod2(bo.BETA)
    generated = g.closure([pos[a_bar], pos[b_bar]])
    q1 = _as_group_indices(norm_one())
    delta_bar = reduce_mod2(eval_word(DELTA_WORD))
    delta_alt_bar = reduce_mod2(eval_word(DELTA_ALT_WORD))
    # normal closure inside Q1 (conjugating by Q1 only)
    q1g = g.subgroup(q1)
    pos1 = {int(v): k for k, v in enumerate(q1)}
    nc = q1g.normal_closure([pos1[pos[delta_bar]]])
    nc_bytes = sorted(int(u[q1[k]]) for k in nc)
    lvl = _level_ideals()
    q1_eb = sorted(int(b) for b in congruence_units(lvl["eps*beta'"], norm_one_only=True))
    q1_eps = sorted(int(b) for b in congruence_units(lvl["eps"], norm_one_only=True))
    varpi_bar = reduce_mod2(bo.VARPI)
    ncg = g.subgroup(_as_group_indices(nc_bytes))
    return {
        "closure_alpha_beta": len(generated),
        "closure_equals_Q1": sorted(generated.tolist()) == sorted(q1.tolist()),
        "delta_bar": format_barq(delta_bar),
        "delta_lifts_agree": delta_bar == delta_alt_bar,
        "normal_closure_order": len(nc_bytes),
        "normal_closure_equals_Q1(eps*beta')": nc_bytes == q1_eb,
        "normal_closure_type": identify_group(ncg),
        "index_PQ1_over_B_PQ1(2)": len(q1) // len(nc_bytes),
        "varpi_bar": format_barq(varpi_bar),
        "varpi_in_Q1(eps)": varpi_bar in q1_eps,
        "varpi_in_Q1(eps*beta')": varpi_bar in q1_eb,
        "index_image_Q1(sqrt2)_over_image_Q1(2)": len(q1_eps),
        "order_Q1/Q1(eps)": len(q1) // len(q1_eps),
    }


# ---------------------------------------------------------------------------
# the 16-element quotient by sqrt2

_EPS_MASK = 0b10101010


def reduce_mod_sqrt2(x) -> int:
    """BElem or Q-bar byte -> byte of Q-tilde (all eps bits cleared)."""
    if isinstance(x, bo.BElem):
        x = reduce_mod2(x)
    return x & ~_EPS_MASK & 0xFF


def tilde_elements() -> np.ndarray:
    return np.array(sorted({reduce_mod_sqrt2(x) for x in range(256)}))


def tilde_mul(x: int, y: int) -> int:
    return reduce_mod_sqrt2(barq_mul(x, y))


def tilde_norm(x: int) -> int:
    """Norm in F2 = F2[eps]/(eps)."""
    return reduce_mod_sqrt2(barq_mul(x, barq_star(x))) & 1


def tilde_ring_report() -> dict:
    elems = tilde_elements().tolist()
    one = reduce_mod_sqrt2(ONE)
    is_unit = {x: any(tilde_mul(x, y) == one for y in elems) for x in elems}
    unit_set = [x for x in elems if is_unit[x]]
    ideal = sorted({tilde_mul(BETA_P, y) for y in elems})
    ideal_sq = sorted({tilde_mul(a, b) for a in ideal for b in ideal})
    norm_one = [x for x in elems if tilde_norm(x) == 1]
    pos = {x: k for k, x in enumerate(unit_set)}
    table = [[pos[tilde_mul(a, b)] for b in unit_set] for a in unit_set]
    return {
        "ring_size": len(elems),
        "maximal_ideal_size": len(ideal),
        "maximal_ideal": [format_barq(x) for x in ideal],
        "maximal_ideal_squared_zero": ideal_sq == [0],
        "units": len(unit_set),
        "units_are_complement": sorted(unit_set) == sorted(set(elems) - set(ideal)),
        "norm_one_equals_units": sorted(norm_one) == sorted(unit_set),
        "unit_group": identify_group(FiniteGroup(table)),
    }

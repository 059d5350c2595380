import pytest

from bolza.quadratic import (
    PrimeIdeal,
    QSqrt2,
    UnsupportedIdealError,
    ZSqrt2,
    are_associate,
    canonical_associate,
    decimal_value,
    divides,
    exact_quotient,
    factor,
    factor_prime,
    residue_map,
)


@pytest.mark.parametrize(
    "text, value",
    [
        ("3+2*r2", ZSqrt2(3, 2)),
        ("3-r2", ZSqrt2(3, -1)),
        ("r2", ZSqrt2(0, 1)),
        ("-r2", ZSqrt2(0, -1)),
        ("4*r2", ZSqrt2(0, 4)),
        ("-7", ZSqrt2(-7, 0)),
        (" 11 - 5*r2 ", ZSqrt2(11, -5)),
    ],
)
def test_parse(text, value):
    assert ZSqrt2.parse(text) == value


@pytest.mark.parametrize("bad", ["", "r3", "1+", "2*3*r2", "x"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        ZSqrt2.parse(bad)


def test_text_and_json_round_trip():
    x = ZSqrt2(-951, -672)
    assert ZSqrt2.parse(str(x)) == x
    assert ZSqrt2.from_json(x.to_json()) == x


def test_ordering_is_exact():
    # 99 - 70 sqrt2 is about 0.00505, positive
    assert ZSqrt2(99, -70).sign() == 1
    assert ZSqrt2(-99, 70).sign() == -1
    assert ZSqrt2(3, -2) < ZSqrt2(1)
    assert abs(ZSqrt2(-2, -2)) == ZSqrt2(2, 2)


def test_norm_and_units():
    assert ZSqrt2(1, 1).norm() == -1
    assert ZSqrt2(1, 1).is_unit()
    assert not ZSqrt2(3, 1).is_unit()


def test_division():
    assert exact_quotient(ZSqrt2(7), ZSqrt2(3, 1)) == ZSqrt2(3, -1)
    assert exact_quotient(ZSqrt2(7), ZSqrt2(2)) is None
    assert divides(ZSqrt2(0, 1), ZSqrt2(2))
    assert are_associate(ZSqrt2(1, 2), ZSqrt2(1, 2) * ZSqrt2(1, 1) ** 5)
    assert not are_associate(ZSqrt2(1, 2), ZSqrt2(1, -2))


@pytest.mark.parametrize("p, kind", [(2, "ramified"), (3, "inert"), (5, "inert"), (7, "split"), (17, "split"), (71, "split")])
def test_factor_prime_kinds(p, kind):
    rep = factor_prime(p)
    assert rep.kind == kind
    prod = ZSqrt2(1)
    for g in rep.primes:
        prod = prod * g
    if kind == "split":
        assert abs(prod.norm()) == p * p and are_associate(prod, ZSqrt2(p))


def test_factor_prime_rejects_composites():
    with pytest.raises(ValueError):
        factor_prime(15)


def test_published_generators_match_canonical_ones_up_to_associates():
    for text, p in [("1+2*r2", 7), ("1-2*r2", 7), ("5-r2", 23), ("11+5*r2", 71)]:
        g = ZSqrt2.parse(text)
        assert any(are_associate(g, q) for q in factor_prime(p).primes)


def test_factor_recombines():
    x = ZSqrt2(633, 449) * ZSqrt2(2) * ZSqrt2(3)
    unit, parts = factor(x)
    prod = unit
    for g, e in parts:
        prod = prod * g**e
    assert prod == x
    assert are_associate(canonical_associate(x), x)


def test_residue_map_sends_generator_to_zero():
    I = PrimeIdeal.parse("(1+2*r2)")
    assert I.residue_char == 7 and I.kind == "split"
    assert residue_map(I, I.generator) == 0
    assert residue_map(I, ZSqrt2(0, 1)) ** 2 % 7 == 2


def test_residue_map_needs_split_ideal():
    with pytest.raises(UnsupportedIdealError):
        residue_map(PrimeIdeal.from_generator(ZSqrt2(0, 1)), ZSqrt2(1))
    with pytest.raises(UnsupportedIdealError):
        residue_map(PrimeIdeal.from_generator(ZSqrt2(3)), ZSqrt2(1))


def test_prime_ideal_kinds():
    assert PrimeIdeal.from_generator(ZSqrt2(0, 1)).kind == "ramified"
    assert PrimeIdeal.from_generator(ZSqrt2(3)).kind == "inert"
    with pytest.raises(ValueError):
        PrimeIdeal.from_generator(ZSqrt2(7))


@pytest.mark.parametrize(
    "x, text",
    [(ZSqrt2(7, 4), "12.657"), (ZSqrt2(9, 6), "17.485"), (ZSqrt2(79, 56), "158.196"), (ZSqrt2(633, 449), "1267.982")],
)
def test_decimal_rounding(x, text):
    assert str(decimal_value(x)) == text


def test_qsqrt2_field_operations():
    x = QSqrt2.of("1/2", "1/3")
    assert x * x.inverse() == QSqrt2.coerce(1)
    assert (x + x.conj()) == QSqrt2.coerce(1)
    assert QSqrt2.of(2, 4).to_zsqrt2() == ZSqrt2(2, 4)
    assert not QSqrt2.of("1/2").is_integral()

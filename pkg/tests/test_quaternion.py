import pytest

from bolza import order as bo
from bolza.quadratic import PrimeIdeal, QSqrt2, ZSqrt2, are_associate
from bolza.quaternion import (
    I,
    IJ,
    J,
    NotAnOrderError,
    OrderBasis,
    Quat,
    coords_in_lattice,
    local_symbol,
    order_discriminant,
    quat_mul,
    sqrt2_ramification_certificate,
)


def test_algebra_relations():
    assert quat_mul(I, I) == Quat.scalar(-3)
    assert quat_mul(J, J) == Quat.scalar(ZSqrt2(0, 1))
    assert quat_mul(J, I) == -quat_mul(I, J)
    assert quat_mul(I, J) == IJ


def test_reduced_norm_and_trace():
    x = Quat(1, 2, 3, 4)
    assert quat_mul(x, x.star()) == Quat.scalar(x.norm())
    assert x.trace() == QSqrt2.coerce(2)


def test_standard_lattice_is_an_order():
    assert bo.STANDARD_ORDER.is_order()


def test_lattice_without_one_is_rejected():
    bad = OrderBasis((I, J, IJ, Quat(0, 1, 1, 0)))
    with pytest.raises((NotAnOrderError, ValueError)):
        order_discriminant(bad)


@pytest.mark.parametrize(
    "name, disc",
    [("standard", ZSqrt2(0, 12)), ("O1", ZSqrt2(0, 3)), ("bolza", ZSqrt2(0, 1)), ("Q", ZSqrt2(0, 1))],
)
def test_discriminants(name, disc):
    assert are_associate(order_discriminant(bo.ORDERS[name]), disc)


def test_lattice_coordinates():
    assert coords_in_lattice(bo.Q_ALPHA, bo.BOLZA_BASIS) == (0, 1, 0, 0)
    assert coords_in_lattice(Quat(QSqrt2.of("1/3")), bo.BOLZA_BASIS) is None


def test_sqrt2_ramified_by_exhaustion():
    cert = sqrt2_ramification_certificate()
    assert cert["residue_count"] == 32
    assert cert["solutions"] == []
    assert local_symbol(PrimeIdeal.from_generator(ZSqrt2(0, 1))).ramified


def test_infinite_places():
    assert not local_symbol("sigma0").ramified
    assert local_symbol("sigma").ramified


def test_three_is_split():
    rep = local_symbol(PrimeIdeal.from_generator(ZSqrt2(3)))
    w = rep.witness["x"]
    d = w * w - ZSqrt2(0, 1)
    assert not rep.ramified and d.a % 3 == 0 and d.b % 3 == 0


@pytest.mark.parametrize("gen", ["1+2*r2", "1-3*r2", "5+r2", "11-5*r2"])
def test_split_primes_are_split(gen):
    I = PrimeIdeal.parse(gen)
    rep = local_symbol(I)
    x, y = rep.witness["x"], rep.witness["y"]
    assert not rep.ramified
    assert (x * x + 3 * y * y - I.sqrt2_image) % I.residue_char == 0

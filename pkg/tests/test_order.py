import random

import pytest

from bolza import order as bo
from bolza.quadratic import ZSqrt2
from bolza.quaternion import quat_mul

A, B = bo.ALPHA, bo.BETA
M1 = bo.BElem(-1)


def test_structure_constants():
    assert bo.structure_constants_consistent()
    assert A * A == bo.BElem(-1, 1)
    assert B * B == bo.BElem(-1, 0, 1)
    assert B * A == bo.BElem(ZSqrt2(-1, -1), 1, 1, -1)


def test_involution_on_basis():
    assert A.star() == bo.BElem(1, -1)
    assert B.star() == bo.BElem(1, 0, -1)
    assert bo.ALPHA_BETA.star() == bo.BElem(ZSqrt2(0, -1), 0, 0, -1)


def test_trace_formula():
    x = bo.BElem(1, 2, 3, 4)
    assert x.trace() == ZSqrt2(2 + 2 + 3, -4)


def test_unit_relations():
    assert A**3 == M1 and B**3 == M1 and (A * B) ** 4 == M1
    assert bo.VARPI**2 == M1
    assert bo.VARPI == -((A * B) ** 2)


def test_alpha_beta_product_vs_printed_closed_form():
    # the printed closed form differs from alpha*beta by the signs of j and ij
    p, q = bo.Q_ALPHA_BETA_PRINTED, bo.Q_ALPHA_BETA
    assert p != q
    assert p.coords[0] == q.coords[0] and p.coords[1] == q.coords[1]
    assert p.coords[2] == -q.coords[2] and p.coords[3] == -q.coords[3]


def test_basis_change_round_trip_and_homomorphism():
    rng = random.Random(7)
    for _ in range(100):
        x, y = bo.random_belem(rng), bo.random_belem(rng)
        assert bo.basis_change(bo.basis_change(x)) == x
        assert bo.basis_change(x * y) == quat_mul(bo.basis_change(x), bo.basis_change(y))


def test_gamma_prime_is_outside_the_order():
    with pytest.raises(bo.NotAMemberError):
        bo.from_quat(bo.Q_GAMMA_PRIME)


def test_gamma_coordinates():
    assert bo.named("gamma") == bo.BElem(ZSqrt2(-1, -1), 0, ZSqrt2(1, 1), ZSqrt2(-1, -1))


def test_delta_closed_form():
    closed = bo.ONE + ZSqrt2(0, 1) * (bo.ONE + ZSqrt2(1, 1) * (A - B))
    assert bo.DELTA == closed
    assert (A * B) ** 2 * bo.inverse(B * A) ** 2 == closed
    # the literal product with (beta alpha)^2 is the negative
    assert (A * B) ** 2 * (B * A) ** 2 == -closed


def test_inverse_of_units():
    assert bo.inverse(A) * A == bo.ONE
    with pytest.raises(Exception):
        bo.inverse(bo.BElem(2))


def test_norm_of_generators():
    assert A.norm() == ZSqrt2(1) and B.norm() == ZSqrt2(1)
    assert B.trace() == ZSqrt2(1)


def test_named_lookup():
    assert bo.named("alpha") == A
    assert bo.named("delta").to_json() == bo.DELTA.to_json()
    with pytest.raises(KeyError):
        bo.named("nope")


def test_json_round_trip():
    x = bo.BElem(ZSqrt2(1, -2), 3, ZSqrt2(0, 5), -4)
    assert bo.BElem.from_json(x.to_json()) == x

import numpy as np
import pytest

from bolza import order as bo
from bolza import quotients as qt
from bolza.words import DELTA_WORD, eval_word


def test_mul_table_shape_and_identity():
    t = qt.mul_table()
    assert t.shape == (256, 256)
    assert (t[qt.ONE] == np.arange(256)).all()
    assert not t.flags.writeable


def test_f2eps_arithmetic():
    e = qt.EPS
    assert e * e == qt.F2Eps(0, 0)
    assert (qt.F2Eps(1, 0) + e).is_unit()
    assert not e.is_unit()


def test_basis_products():
    m = qt.barq_mul
    b, a, e = qt.BETA_P, qt.ALPHA, qt.EPS_BYTE
    assert m(b, b) == e
    assert m(b, a) == b ^ qt.ALPHA_BETA_P
    assert m(a, a) == qt.ONE ^ a


def test_reduction_is_a_ring_map():
    import random

    rng = random.Random(3)
    for _ in range(200):
        x, y = bo.random_belem(rng), bo.random_belem(rng)
        assert qt.reduce_mod2(x * y) == qt.barq_mul(qt.reduce_mod2(x), qt.reduce_mod2(y))
        assert qt.reduce_mod2(x + y) == qt.reduce_mod2(x) ^ qt.reduce_mod2(y)
        assert qt.reduce_mod2(x.star()) == qt.barq_star(qt.reduce_mod2(x))


def test_lift_inverts_reduction():
    for x in range(256):
        assert qt.reduce_mod2(qt.lift(x)) == x


def test_norm_formula_variants():
    comp = sum(qt.printed_norm_formula(x, "componentwise") == qt.barq_norm(x) for x in range(256))
    comb = sum(qt.printed_norm_formula(x, "combined") == qt.barq_norm(x) for x in range(256))
    assert comp == 256
    assert comb == 128


def test_parse_and_format_round_trip():
    for x in range(256):
        assert qt.parse_barq(qt.format_barq(x)) == x


def test_unit_counts():
    assert len(qt.units()) == 192
    assert len(qt.norm_one()) == 96


def test_filtration():
    rep = qt.unit_filtration()
    assert rep.orders == {"1": 192, "beta'": 64, "eps": 16, "eps*beta'": 4}
    assert rep.layers == (3, 4, 4, 4)
    assert rep.norm_one_layers == (3, 4, 2, 4)
    ids = rep.identifications
    assert ids["Q1/Q1(eps*beta')"] == "SL2(F3)"
    assert ids["Q1/Q1(eps)"] == "A4"
    assert ids["Qx/Qx(beta')"] == "C3"
    assert ids["Qx(eps)"] == "C2^4"
    assert ids["Qx/Q1(eps)"] == "A4xC2"
    assert ids["Qx/Qx(eps*beta')"] == "SL2(F3)xC2"
    assert all(v for k, v in rep.jacobson.items() if k.startswith("J") and " " in k)
    assert rep.diagram.startswith("digraph")


def test_bolza_position():
    pos = qt.bolza_position()
    assert pos["closure_equals_Q1"] and pos["closure_alpha_beta"] == 96
    assert pos["delta_lifts_agree"]
    assert pos["normal_closure_order"] == 4
    assert pos["normal_closure_type"] == "V4"
    assert pos["index_PQ1_over_B_PQ1(2)"] == 24
    assert pos["varpi_in_Q1(eps)"] and not pos["varpi_in_Q1(eps*beta')"]
    assert pos["order_Q1/Q1(eps)"] == 12


def test_delta_reduction():
    assert qt.reduce_mod2(eval_word(DELTA_WORD)) == qt.ONE ^ qt.barq_mul(qt.EPS_BYTE, qt.BETA_P)


def test_tilde_ring():
    rep = qt.tilde_ring_report()
    assert rep["ring_size"] == 16 and rep["maximal_ideal_size"] == 4
    assert rep["maximal_ideal_squared_zero"]
    assert rep["units"] == 12 and rep["units_are_complement"]
    assert rep["unit_group"] == "A4"


def test_norm_of_non_central_raises():
    # every element has a central norm; the error path is exercised by a corrupted star
    assert all(isinstance(qt.barq_norm(x), qt.F2Eps) for x in range(256))

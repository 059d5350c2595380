import math
from fractions import Fraction

import pytest

from bolza import bounds
from bolza.quadratic import ZSqrt2
from bolza.words import REGISTRY, eval_word


def test_lambda_constant():
    assert bounds.lambda_constant(*bounds.BOLZA_LAMBDA_PLACES) == Fraction(3, 2)
    assert bounds.lambda_constant() == 1
    p = bounds.Place("(3)", 9)
    assert bounds.lambda_constant((p,), (p,)) == 2


@pytest.mark.parametrize("n, value", [(7, Fraction(41, 4)), (71, Fraction(5033, 4)), (1, Fraction(-7, 4))])
def test_trace_bound(n, value):
    assert bounds.trace_bound(n, 2) == value


def test_sys_from_trace():
    assert bounds.sys_from_trace(2) == 0
    s = bounds.sys_from_trace(ZSqrt2(2, 2))
    assert math.isclose(math.cosh(s / 2), 1 + math.sqrt(2))
    assert f"{s:.3f}" == "3.057"
    with pytest.raises(bounds.NotHyperbolicError):
        bounds.sys_from_trace(ZSqrt2(1, 0))


def test_check_43_bolza():
    rep = bounds.check_43()
    assert (rep.lhs, rep.rhs, rep.c) == (12, 24, 2)
    assert rep.holds
    assert rep.threshold_genus == 15
    assert math.isclose(rep.threshold_constant, 6**1.5)


def test_check_43_failure_is_a_report():
    rep = bounds.check_43(bounds.BoundParams(2, Fraction(3), Fraction(1, 6)))
    assert not rep.holds and rep.notes


def test_check_43_monotone_in_genus():
    vals = [bounds.check_43(g=g).sys_lower_bound for g in range(15, 200, 7)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_triangle_lambda():
    t = bounds.triangle_lambda(3, 3, 4)
    assert t.exact == (0, 1) and abs(t.value - math.sqrt(2)) < 1e-12 and t.arithmetic
    t = bounds.triangle_lambda(2, 3, 8)
    assert t.exact == (-1, 1) and t.arithmetic
    t = bounds.triangle_lambda(2, 3, 7)
    assert t.arithmetic is None
    with pytest.raises(bounds.SignatureError):
        bounds.triangle_lambda(2, 3, 6)


def test_twin_genus():
    assert bounds.twin_genus(7) == 8
    assert bounds.twin_genus(71) == 7456


def test_twin_table_rows():
    table = bounds.twin_table()
    assert len(table.rows) == 14
    for row in table.rows:
        assert all(row.matches.values()), row.to_json()
    assert any("47" in n for n in table.notes)
    assert any("unconfirmed" in n for n in table.notes)


def test_registry_traces_exceed_bound():
    for e in REGISTRY.values():
        if e.ideal is not None:
            n = abs(e.ideal.norm())
            assert abs(float(eval_word(e.word).trace())) > bounds.trace_bound(n, 2)


def test_markdown_output():
    md = bounds.twin_table((7,)).markdown()
    assert "| (1+2*r2) | 7 | 7+4*r2 | 12.657 | 10.25 |" in md

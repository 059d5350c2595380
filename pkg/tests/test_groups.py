import numpy as np
import pytest

from bolza.groups import (
    FiniteGroup,
    NotAGroupError,
    are_isomorphic,
    catalog_group,
    direct_product,
    find_isomorphism,
    group_from_generators,
    identify_group,
)


def cyclic(n):
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)])


def test_rejects_non_associative_table():
    # a Latin square with identity 0 that is not associative
    t = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAGroupError):
        FiniteGroup(t)


def test_rejects_non_latin_table():
    with pytest.raises(NotAGroupError):
        FiniteGroup([[0, 1], [1, 1]])


def test_basic_structure():
    g = catalog_group("SL2(F3)")
    assert g.order == 24
    assert len(g.center()) == 2
    assert len(g.derived_subgroup()) == 8
    assert identify_group(g.quotient(g.center())) == "A4"


@pytest.mark.parametrize(
    "label, order",
    [("C2", 2), ("V4", 4), ("A4", 12), ("S4", 24), ("SL2(F3)", 24), ("GL2(F3)", 48), ("C2^4", 16), ("A4xC2", 24), ("SL2(F3)xC2", 48)],
)
def test_catalog_self_identifies(label, order):
    g = catalog_group(label)
    assert g.order == order
    assert identify_group(g) == label


def test_distinguishes_same_order():
    assert not are_isomorphic(catalog_group("S4"), catalog_group("SL2(F3)"))
    assert not are_isomorphic(catalog_group("A4xC2"), catalog_group("S4"))


def test_isomorphism_is_a_homomorphism():
    g = catalog_group("A4")
    perm = np.random.default_rng(0).permutation(12)
    perm[perm == 0] = perm[0]
    perm[0] = 0
    inv = np.argsort(perm)
    t = g.table
    h = FiniteGroup(perm[t[np.ix_(inv, inv)]])
    f = find_isomorphism(g, h)
    assert f is not None
    for x in range(12):
        for y in range(12):
            assert f[g.mul(x, y)] == h.mul(f[x], f[y])


def test_direct_product_and_psl():
    assert identify_group(direct_product(catalog_group("A4"), cyclic(2))) == "A4xC2"
    assert identify_group(catalog_group("PSL2(F7)")) == "PSL2(F7)"


def test_group_from_generators_matrices():
    def mul(x, y):
        (a, b), (c, d) = x
        (e, f), (g, h) = y
        return (((a * e + b * g) % 3, (a * f + b * h) % 3), ((c * e + d * g) % 3, (c * f + d * h) % 3))

    g, elems = group_from_generators([((0, 1), (1, 0)), ((1, 1), (0, 1))], mul)
    assert len(elems) == 48
    assert identify_group(g) == "GL2(F3)"


def test_normal_closure_and_cosets():
    g = catalog_group("S4")
    a4 = g.derived_subgroup()
    assert len(a4) == 12 and g.is_normal(a4)
    labels = g.cosets(a4)
    assert len(set(np.asarray(labels).tolist())) == 2

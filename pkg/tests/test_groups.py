"""Group constructors against independent presentation/Cayley-table oracles."""

import math
from collections import Counter

import pytest

from thetagraph.groups import (
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    from_orders,
    heisenberg,
    order_profile,
)


# ---------------------------------------------------------------------------
# oracles: multiplication tables straight from the defining presentations
# ---------------------------------------------------------------------------


def _orders_by_repeated_mult(elements, mult, identity):
    orders = []
    for e in elements:
        x, o = e, 1
        while x != identity:
            x = mult(x, e)
            o += 1
        orders.append(o)
    return orders


def _dicyclic_cayley_orders(n):
    # elements a^i x^j with 0 <= i < 2n, j in {0, 1}; relations a^{2n}=1,
    # x^2 = a^n, x a^k = a^{-k} x
    elements = [(i, j) for j in (0, 1) for i in range(2 * n)]

    def mult(e1, e2):
        i, j = e1
        k, l = e2
        if j == 0:
            return ((i + k) % (2 * n), l)
        i2 = (i - k) % (2 * n)
        if l == 0:
            return (i2, 1)
        return ((i2 + n) % (2 * n), 0)

    return elements, _orders_by_repeated_mult(elements, mult, (0, 0))


def _heisenberg_cayley_orders(p):
    elements = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]

    def mult(m1, m2):
        a1, b1, c1 = m1
        a2, b2, c2 = m2
        return ((a1 + a2) % p, (b1 + b2 + a1 * c2) % p, (c1 + c2) % p)

    return elements, _orders_by_repeated_mult(elements, mult, (0, 0, 0))


def _cyclic_addition_orders(n):
    def mult(a, b):
        return (a + b) % n

    return _orders_by_repeated_mult(list(range(n)), mult, 0)


# ---------------------------------------------------------------------------
# cyclic
# ---------------------------------------------------------------------------


def test_cyclic_6_orders():
    assert list(cyclic(6).orders) == [1, 6, 3, 2, 3, 6]


def test_cyclic_1_is_trivial():
    g = cyclic(1)
    assert g.size == 1 and g.orders == (1,)


def test_cyclic_8_element_4_has_order_2():
    assert cyclic(8).orders[4] == 2


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclic_matches_repeated_addition(n):
    assert list(cyclic(n).orders) == _cyclic_addition_orders(n)


# ---------------------------------------------------------------------------
# dihedral
# ---------------------------------------------------------------------------


def test_dihedral_3_profile():
    assert order_profile(dihedral(3)) == {1: 1, 2: 3, 3: 2}


def test_dihedral_6_reflections_all_order_2():
    g = dihedral(6)
    assert all(o == 2 for o in g.orders[6:])


def test_dihedral_1_is_c2():
    assert order_profile(dihedral(1)) == {1: 1, 2: 1}


def test_dihedral_rotations_match_cyclic():
    for n in (2, 5, 9, 12):
        assert dihedral(n).orders[:n] == cyclic(n).orders


# ---------------------------------------------------------------------------
# dicyclic
# ---------------------------------------------------------------------------


def test_dicyclic_3_prime_or_identity_elements():
    g = dicyclic(3)
    s_labels = {g.labels[i] for i, o in enumerate(g.orders) if o == 1 or o in (2, 3, 5, 7, 11)}
    assert s_labels == {"1", "a^2", "a^3", "a^4"}


def test_dicyclic_3_xa_has_order_4():
    g = dicyclic(3)
    assert g.orders[g.labels.index("xa")] == 4


def test_dicyclic_2_is_quaternion_profile():
    assert order_profile(dicyclic(2)) == {1: 1, 2: 1, 4: 6}


def test_dicyclic_3_profile():
    assert order_profile(dicyclic(3)) == {1: 1, 2: 1, 3: 2, 4: 6, 6: 2}


def test_dicyclic_rejects_n_below_2():
    with pytest.raises(ValueError):
        dicyclic(1)


@pytest.mark.parametrize("n", range(2, 7))
def test_dicyclic_matches_cayley_table(n):
    elements, oracle = _dicyclic_cayley_orders(n)
    g = dicyclic(n)
    assert list(g.orders) == oracle
    # presentation consequence: every x-coset element has order 4
    assert all(o == 4 for (i, j), o in zip(elements, oracle) if j == 1)


# ---------------------------------------------------------------------------
# elementary abelian, heisenberg
# ---------------------------------------------------------------------------


def test_elementary_abelian_profiles():
    assert order_profile(elementary_abelian(3, 2)) == {1: 1, 3: 8}
    assert order_profile(elementary_abelian(2, 3)) == {1: 1, 2: 7}
    assert order_profile(elementary_abelian(5, 1)) == order_profile(cyclic(5))


def test_elementary_abelian_rejects_composite_p():
    with pytest.raises(ValueError):
        elementary_abelian(6, 2)


def test_heisenberg_profiles():
    assert order_profile(heisenberg(3)) == {1: 1, 3: 26}
    assert order_profile(heisenberg(2)) == {1: 1, 2: 5, 4: 2}
    assert order_profile(heisenberg(5)) == {1: 1, 5: 124}


def test_heisenberg_rejects_composite_p():
    with pytest.raises(ValueError):
        heisenberg(4)


@pytest.mark.parametrize("p", (2, 3, 5, 7))
def test_heisenberg_matches_cayley_table(p):
    _, oracle = _heisenberg_cayley_orders(p)
    assert list(heisenberg(p).orders) == oracle


@pytest.mark.parametrize("p", (3, 5, 7))
def test_heisenberg_odd_p_has_exponent_p(p):
    g = heisenberg(p)
    assert all(o == p for i, o in enumerate(g.orders) if i != g.identity_index)


# ---------------------------------------------------------------------------
# products and custom groups
# ---------------------------------------------------------------------------


def test_product_c3_c3_matches_elementary_abelian():
    assert order_profile(direct_product(cyclic(3), cyclic(3))) == {1: 1, 3: 8}


def test_product_c2_c3_matches_cyclic_6():
    assert order_profile(direct_product(cyclic(2), cyclic(3))) == order_profile(cyclic(6))


def test_product_c4_c2_profile():
    assert order_profile(direct_product(cyclic(4), cyclic(2))) == {1: 1, 2: 3, 4: 4}


def test_product_order_is_lcm_over_all_pairs():
    g, h = cyclic(4), cyclic(6)
    prod = direct_product(g, h)
    expected = Counter(math.lcm(a, b) for a in g.orders for b in h.orders)
    assert order_profile(prod) == dict(sorted(expected.items()))


def test_from_orders_valid():
    g = from_orders(["e", "a", "b"], [1, 3, 3])
    assert g.size == 3 and g.warnings == ()


def test_from_orders_lagrange_warning():
    g = from_orders(["e", "a"], [1, 3])
    assert any(code == "lagrange_violation" for code, _ in g.warnings)


def test_from_orders_rejects_double_identity():
    with pytest.raises(ValueError):
        from_orders(["e", "e2"], [1, 1])


def test_from_orders_rejects_empty_and_mismatched():
    with pytest.raises(ValueError):
        from_orders([], [])
    with pytest.raises(ValueError):
        from_orders(["e"], [1, 2])


def test_order_profile_examples():
    assert order_profile(cyclic(4)) == {1: 1, 2: 1, 4: 2}
    assert order_profile(dihedral(3)) == {1: 1, 2: 3, 3: 2}
    assert order_profile(dicyclic(3)) == {1: 1, 2: 1, 3: 2, 4: 6, 6: 2}


# ---------------------------------------------------------------------------
# family-wide invariants
# ---------------------------------------------------------------------------


def _family_samples():
    for n in range(1, 20):
        yield cyclic(n), n
    for n in range(1, 12):
        yield dihedral(n), 2 * n
    for n in range(2, 8):
        yield dicyclic(n), 4 * n
    for p, m in ((2, 2), (2, 4), (3, 2), (5, 2)):
        yield elementary_abelian(p, m), p**m
    for p in (2, 3):
        yield heisenberg(p), p**3
    yield direct_product(cyclic(3), dihedral(2)), 12


@pytest.mark.parametrize("g, expected_size", list(_family_samples()))
def test_size_and_lagrange(g, expected_size):
    assert g.size == expected_size
    assert all(g.size % o == 0 for o in g.orders)
    assert g.orders[g.identity_index] == 1
    assert len(set(g.labels)) == g.size
    profile = order_profile(g)
    assert sum(profile.values()) == g.size
    assert profile[1] == 1

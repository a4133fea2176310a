import json
import math

import numpy as np
import pytest

from thetagraph.graph import (
    adjacent,
    build_theta,
    degree,
    export_dot,
    export_json,
    min_degree,
    prime_order_set,
)
from thetagraph.groups import cyclic, dicyclic, dihedral, elementary_abelian, heisenberg
from thetagraph.numtheory import is_one_or_prime, is_prime


def test_theta_z6_is_k6_minus_generator_edge():
    t = build_theta(cyclic(6))
    for i in range(6):
        for j in range(6):
            expected = i != j and not {i, j} == {1, 5}
            assert bool(t.adj[i, j]) is expected
    assert t.edge_count == 14


def test_theta_z7_is_complete():
    t = build_theta(cyclic(7))
    assert t.edge_count == 7 * 6 // 2


def test_theta_d4_reflections_adjacent_to_all_rotations():
    t = build_theta(dihedral(4))
    for refl in range(4, 8):
        for rot in range(4):
            assert t.adj[refl, rot]


def test_adjacent_examples():
    t = build_theta(cyclic(12))
    assert adjacent(t, 2, 3)  # orders 6 and 4, gcd 2
    assert not adjacent(t, 1, 5)  # orders 12 and 12, gcd 12
    assert not adjacent(t, 4, 4)
    with pytest.raises(IndexError):
        adjacent(t, 0, 12)


def test_prime_order_set_z12():
    t = build_theta(cyclic(12))
    assert set(prime_order_set(t).indices) == {0, 4, 6, 8}


@pytest.mark.parametrize("p, q", [(2, 3), (3, 5), (5, 7)])
def test_prime_order_set_size_pq(p, q):
    t = build_theta(cyclic(p * q))
    assert prime_order_set(t).size == p + q - 1


@pytest.mark.parametrize("p, m", [(2, 3), (3, 2), (5, 2)])
def test_prime_order_set_size_prime_power(p, m):
    t = build_theta(cyclic(p**m))
    assert prime_order_set(t).size == p


@pytest.mark.parametrize("q", [3, 5, 7])
def test_generator_degree_in_z_2q(q):
    t = build_theta(cyclic(2 * q))
    gen = [k for k in range(2 * q) if math.gcd(k, 2 * q) == 1]
    assert all(degree(t, v) == q + 1 for v in gen)


def test_z8_degree_structure():
    t = build_theta(cyclic(8))
    assert degree(t, 0) == 7
    assert sorted(t.degrees.tolist()).count(7) == 2


def test_z9_min_degree():
    t = build_theta(cyclic(9))
    assert min_degree(t) == 3
    gen = [k for k in range(9) if math.gcd(k, 9) == 1]
    for v in gen:
        assert set(t.neighbors(v).tolist()) == {0, 3, 6}


def test_export_dot_triangle():
    text = export_dot(build_theta(cyclic(3)))
    assert text.count(";") == 6  # 3 nodes + 3 edges
    assert '"0" -- "1";' in text


def test_export_dot_z4():
    text = export_dot(build_theta(cyclic(4)))
    assert text.count(" -- ") == 5


def test_export_json_roundtrip_bit_for_bit():
    t = build_theta(dicyclic(3))
    doc = json.loads(export_json(t))
    n = len(doc["labels"])
    rebuilt = np.zeros((n, n), dtype=bool)
    for i, j in doc["edges"]:
        assert i < j
        rebuilt[i, j] = rebuilt[j, i] = True
    assert np.array_equal(rebuilt, t.adj)
    assert doc["degrees"] == t.degrees.tolist()
    assert doc["orders"] == list(t.group.orders)


def test_export_json_edge_counts():
    assert len(json.loads(export_json(build_theta(cyclic(6))))["edges"]) == 14
    assert len(json.loads(export_json(build_theta(dihedral(6))))["edges"]) == 65


def test_small_group_warning():
    for n in (1, 2):
        t = build_theta(cyclic(n))
        assert any(code == "small_group" for code, _ in t.warnings)
    assert not any(code == "small_group" for code, _ in build_theta(cyclic(3)).warnings)


def _sample_graphs():
    yield build_theta(cyclic(30))
    yield build_theta(cyclic(64))
    yield build_theta(dihedral(15))
    yield build_theta(dicyclic(7))
    yield build_theta(elementary_abelian(3, 3))
    yield build_theta(heisenberg(3))
    yield build_theta(cyclic(199))


@pytest.mark.parametrize("t", list(_sample_graphs()), ids=lambda t: t.group.describe())
def test_structural_invariants(t):
    n = t.n_vertices
    assert np.array_equal(t.adj, t.adj.T)
    assert not t.adj.diagonal().any()
    e = t.group.identity_index
    assert t.degrees[e] == n - 1
    assert t.edge_count * 2 == int(t.degrees.sum())
    # brute-force re-derivation of the adjacency predicate
    orders = t.group.orders
    for i in range(n):
        for j in range(n):
            expected = i != j and is_one_or_prime(math.gcd(orders[i], orders[j]))
            assert bool(t.adj[i, j]) is expected


@pytest.mark.parametrize("n", [4, 6, 9, 12, 30, 45, 60])
def test_composite_cyclic_min_degree_is_s_size_attained_at_generators(n):
    assert not is_prime(n)
    t = build_theta(cyclic(n))
    s = prime_order_set(t).size
    assert min_degree(t) == s
    for v in range(n):
        if math.gcd(v, n) == 1:
            assert degree(t, v) == s

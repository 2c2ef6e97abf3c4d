import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from twisted_trees.core import center_edge, is_balanced_double_star
from twisted_trees.isomorphic import (
    double_star_A,
    find_k,
    iso_partition,
    tree_code,
    trees_isomorphic,
)

from .conftest import oracle


@pytest.mark.parametrize("n, k, edges", [
    (3, 2, {(3, 4), (1, 3), (3, 5), (2, 4), (4, 6)}),
    (2, 1, {(2, 3), (1, 2), (3, 4)}),
    (3, 3, {(3, 4), (3, 5), (3, 6), (2, 4), (1, 4)}),
    (1, 1, {(1, 2)}),
])
def test_double_star_A(n, k, edges):
    assert set(double_star_A(n, k)) == edges


@pytest.mark.parametrize("n", range(1, 9))
def test_double_star_A_is_balanced(n):
    for k in range(1, n + 1):
        assert is_balanced_double_star(n, double_star_A(n, k)) == (n, n + 1)


@pytest.mark.parametrize("n, k", [(3, 0), (3, 4), (0, 1)])
def test_double_star_A_range(n, k):
    with pytest.raises(ValueError):
        double_star_A(n, k)


def test_iso_partition_n3_k2():
    p = iso_partition(3, 2)
    assert set(p.tree(1)) == {(1, 6), (1, 5), (2, 6), (1, 4), (3, 6)}
    assert set(p.tree(2)) == {(2, 5), (1, 2), (5, 6), (2, 3), (4, 5)}
    assert p.tree(3) == double_star_A(3, 2)


def test_iso_partition_n2_are_the_two_partitions():
    assert {iso_partition(2, 1), iso_partition(2, 2)} == set(oracle(2))
    assert iso_partition(2, 1).tree(2) == double_star_A(2, 1)


def test_iso_partition_n4_in_oracle():
    ps = [iso_partition(4, k) for k in range(1, 5)]
    assert len(set(ps)) == 4
    assert set(ps) <= set(oracle(4))


@pytest.mark.parametrize("n", range(2, 11))
def test_iso_partition_structure(n):
    seen = set()
    for k in range(1, n + 1):
        p = iso_partition(n, k)
        seen.add(p)
        for i in range(1, n + 1):
            assert is_balanced_double_star(n, p.tree(i)) == center_edge(n, i)
        assert all(trees_isomorphic(p.tree(1), t) for t in p.trees)
    assert len(seen) == n


@pytest.mark.parametrize("n, k", [(1, 1), (3, 0), (3, 4)])
def test_iso_partition_range(n, k):
    with pytest.raises(ValueError):
        iso_partition(n, k)


@pytest.mark.parametrize("n", range(2, 9))
def test_find_k_round_trip(n):
    for k in range(1, n + 1):
        assert find_k(iso_partition(n, k)) == k


def test_find_k_none_on_non_isomorphic():
    iso = {iso_partition(3, k) for k in (1, 2, 3)}
    others = [p for p in oracle(3) if p not in iso]
    assert len(others) == 7
    for p in others:
        assert find_k(p) is None or p.tree(3) == double_star_A(3, find_k(p))
    non_star = [p for p in others if is_balanced_double_star(3, p.tree(3)) != (3, 4)]
    assert non_star
    assert all(find_k(p) is None for p in non_star)


@pytest.mark.parametrize("n", [3, 4])
def test_find_k_matches_A_membership(n):
    stars = {double_star_A(n, k): k for k in range(1, n + 1)}
    for p in oracle(n):
        assert find_k(p) == stars.get(p.tree(n))


def test_trees_isomorphic_examples():
    a1, a3 = double_star_A(3, 1), double_star_A(3, 3)
    path = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]
    assert trees_isomorphic(a1, a3)
    assert not trees_isomorphic(a1, path)
    assert trees_isomorphic(path, path)


def test_trees_isomorphic_rejects_non_tree():
    with pytest.raises(ValueError):
        trees_isomorphic([(1, 2), (2, 3), (1, 3)], [(1, 2), (2, 3)])
    with pytest.raises(ValueError):
        tree_code([])


@st.composite
def labeled_trees(draw):
    size = draw(st.integers(2, 14))
    if size == 2:
        edges = [(0, 1)]
    else:
        prufer = draw(st.lists(st.integers(0, size - 1), min_size=size - 2, max_size=size - 2))
        edges = list(nx.from_prufer_sequence(prufer).edges())
    return size, edges


def _relabel(edges, perm):
    return [(perm[a], perm[b]) for a, b in edges]


@given(labeled_trees(), labeled_trees())
def test_isomorphism_agrees_with_networkx(t1, t2):
    (_, e1), (_, e2) = t1, t2
    expected = nx.is_isomorphic(nx.Graph(e1), nx.Graph(e2))
    assert trees_isomorphic(e1, e2) == expected


@given(labeled_trees(), st.randoms(use_true_random=False))
def test_isomorphism_invariant_under_relabeling(t, rnd):
    size, edges = t
    perm = list(range(size))
    rnd.shuffle(perm)
    assert trees_isomorphic(edges, _relabel(edges, perm))

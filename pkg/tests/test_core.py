from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from twisted_trees.core import (
    InvalidPartition,
    Partition,
    canonicalize,
    center_edge,
    cross,
    crossing_matrix,
    is_balanced_double_star,
    is_plane,
    is_spanning_tree,
    validate_partition,
    vertex_label,
)

from .conftest import oracle


def nested(e, f):
    # independent formulation: one open interval strictly inside the other
    inner = lambda x, y: x[0] > y[0] and x[1] < y[1]
    return inner(e, f) or inner(f, e)


@st.composite
def edge_pairs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    verts = st.integers(1, 2 * n)
    a, b = sorted(draw(st.lists(verts, min_size=2, max_size=2, unique=True)))
    c, d = sorted(draw(st.lists(verts, min_size=2, max_size=2, unique=True)))
    return n, (a, b), (c, d)


@pytest.mark.parametrize("e, f, expected", [
    ((1, 4), (2, 3), True),
    ((1, 2), (3, 4), False),
    ((1, 3), (1, 4), False),
    ((1, 3), (2, 4), False),
])
def test_cross_examples(e, f, expected):
    assert cross(e, f) is expected


def test_center_edges_of_t6_pairwise_cross():
    for e, f in combinations([(1, 6), (2, 5), (3, 4)], 2):
        assert cross(e, f)


@given(edge_pairs())
def test_cross_symmetric_and_matches_nesting(args):
    _, e, f = args
    assert cross(e, f) == cross(f, e) == nested(e, f)


@given(edge_pairs())
def test_shared_endpoint_never_crosses(args):
    _, e, f = args
    if set(e) & set(f):
        assert not cross(e, f)


@pytest.mark.parametrize("n", range(1, 7))
def test_pendants_at_v1_and_w1_independent(n):
    for x in range(2, 2 * n + 1):
        for y in range(1, 2 * n):
            assert not cross((1, x), (y, 2 * n))


@pytest.mark.parametrize("n", range(1, 7))
def test_centers_pairwise_cross(n):
    centers = [center_edge(n, i) for i in range(1, n + 1)]
    assert all(cross(e, f) for e, f in combinations(centers, 2))


# crossing pair totals frozen from a brute-force count of nested pairs
@pytest.mark.parametrize("n, pairs", [(1, 0), (2, 1), (3, 15), (4, 70)])
def test_crossing_matrix_counts(n, pairs):
    cm = crossing_matrix(n)
    assert len(cm) == n * (2 * n - 1)
    assert len(cm.crossing_pairs()) == pairs


def test_crossing_matrix_n2_single_pair():
    assert crossing_matrix(2).crossing_pairs() == [((1, 4), (2, 3))]


@pytest.mark.parametrize("n", range(1, 6))
def test_crossing_matrix_agrees_with_predicate(n):
    cm = crossing_matrix(n)
    assert sorted(cm.index.values()) == list(range(len(cm)))
    for e in cm.edges:
        assert not cm.crosses(e, e)
        for f in cm.edges:
            assert cm.crosses(e, f) == nested(e, f) == cm.crosses(f, e)


def test_crossing_matrix_rejects_zero():
    with pytest.raises(ValueError):
        crossing_matrix(0)


def test_vertex_labels():
    assert [vertex_label(3, p) for p in range(1, 7)] == ["v1", "v2", "v3", "w3", "w2", "w1"]


@pytest.mark.parametrize("edges, expected", [
    ([(1, 6), (1, 5), (2, 6), (3, 6), (1, 4)], True),
    ([(1, 6), (2, 5)], False),
    ([], True),
])
def test_is_plane(edges, expected):
    assert is_plane(edges) is expected
    assert is_plane(edges, n=3) is expected


A2_N3 = [(3, 4), (1, 3), (3, 5), (4, 6), (2, 4)]


@pytest.mark.parametrize("n, edges, expected", [
    (2, [(1, 4), (1, 3), (2, 4)], True),
    (2, [(1, 2), (3, 4), (1, 2)], False),
    (3, A2_N3, True),
    (3, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6)], False),
])
def test_is_spanning_tree(n, edges, expected):
    assert is_spanning_tree(n, edges) is expected


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.tuples(st.integers(1, 2 * n), st.integers(1, 2 * n))
             .filter(lambda e: e[0] < e[1]), max_size=2 * n, unique=True))))
def test_is_spanning_tree_matches_networkx(args):
    n, edges = args
    g = nx.Graph()
    g.add_nodes_from(range(1, 2 * n + 1))
    g.add_edges_from(edges)
    assert is_spanning_tree(n, edges) == nx.is_tree(g)


@pytest.mark.parametrize("n, edges, center", [
    (3, A2_N3, (3, 4)),
    (3, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)], None),
    (2, [(1, 4), (1, 3), (2, 4)], (1, 4)),
    (2, [(1, 2), (1, 3), (1, 4)], None),
    (1, [(1, 2)], (1, 2)),
])
def test_is_balanced_double_star(n, edges, center):
    assert is_balanced_double_star(n, edges) == center


FIG3 = Partition.from_trees(3, [
    [(1, 6), (1, 5), (2, 6), (1, 4), (3, 6)],
    [(2, 5), (1, 2), (5, 6), (2, 3), (4, 5)],
    A2_N3,
])


def test_canonicalize_orders_by_center():
    shuffled = Partition.from_trees(3, [FIG3.trees[2], FIG3.trees[0], FIG3.trees[1]])
    q = canonicalize(shuffled)
    assert [t for t in q.trees] == [tuple(sorted(t)) for t in FIG3.trees]
    for i in range(1, 4):
        assert center_edge(3, i) in q.tree(i)


@given(st.data())
def test_canonicalize_is_order_free_and_idempotent(data):
    p = data.draw(st.sampled_from(oracle(3)))
    order = data.draw(st.permutations(range(3)))
    trees = []
    for i in order:
        es = data.draw(st.permutations(list(p.trees[i])))
        trees.append(tuple((b, a) if data.draw(st.booleans()) else (a, b) for a, b in es))
    q = canonicalize(Partition(3, tuple(trees)))
    assert q == p == canonicalize(q)


@pytest.mark.parametrize("trees, msg", [
    ([[(1, 4), (1, 2)], [(2, 3), (3, 4), (1, 3)]], "cover 5 of 6"),
    ([[(1, 4), (1, 2), (2, 4)], [(2, 3), (1, 2), (3, 4), (1, 3)]], "two trees"),
    ([[(1, 4), (2, 3), (1, 2)], [(3, 4), (1, 3), (2, 4)]], "center"),
    ([[(1, 4), (1, 2), (2, 4), (3, 4), (1, 3), (2, 3)]], "expected 2 trees"),
    ([[(1, 4), (1, 5)], [(2, 3)]], "outside"),
])
def test_canonicalize_rejects_malformed(trees, msg):
    with pytest.raises(InvalidPartition, match=msg):
        canonicalize(Partition.from_trees(2, trees))


def test_validate_reports_crossing_pair():
    # swap (1, 5) of S_1 with (2, 3) of S_2; (2, 3) nests inside (1, 4)
    t1 = [e for e in FIG3.tree(1) if e != (1, 5)] + [(2, 3)]
    t2 = [e for e in FIG3.tree(2) if e != (2, 3)] + [(1, 5)]
    bad = Partition.from_trees(3, [t1, t2, FIG3.tree(3)])
    with pytest.raises(InvalidPartition, match="crosses"):
        validate_partition(bad)

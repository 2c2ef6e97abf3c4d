"""Partitions of T_2n into pairwise isomorphic plane spanning trees.

Every such partition is determined by its last tree S_n, which must be one of
the double stars A_1, ..., A_n centered at v_n w_n.
"""
from __future__ import annotations

from typing import Iterable, Optional

from .core import (
    Edge,
    InvalidPartition,
    Partition,
    canonicalize,
    center_edge,
    is_tree_on,
    validate_partition,
)


def _check_k(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}, got {k}")


def double_star_A(n: int, k: int) -> tuple[Edge, ...]:
    """A_k: the balanced double star on v_n w_n whose hub neighborhoods split at n-k.

    v_n is joined to v_1..v_(n-k) and w_n..w_(n-k+1); w_n is joined to
    w_1..w_(n-k) and v_n..v_(n-k+1).
    """
    _check_k(n, k)
    vn, wn = n, n + 1
    es = set()
    for t in range(1, n - k + 1):
        es.add((t, vn))               # v_t
        es.add((wn, 2 * n + 1 - t))   # w_t
    for j in range(1, k + 1):
        es.add((vn, n + j))           # w_(n-j+1)
        es.add((n - j + 1, wn))       # v_(n-j+1)
    return tuple(sorted(es))


def _tree_i(n: int, k: int, i: int) -> tuple[Edge, ...]:
    top = 2 * n + 1
    es = {center_edge(n, i)}
    for j in range(i + 1, n):
        es.add((i, top - j))          # v_i w_j
        es.add((j, top - i))          # w_i v_j
    for t in range(1, i):
        es.add((t, i))                # v_t v_i
        es.add((top - i, top - t))    # w_i w_t
    if k < n and i <= n - k:
        # v_n v_i is in A_k, so v_n hangs off w_i
        es.add((n, top - i))
        es.add((i, n + 1))
    else:
        es.add((i, n))
        es.add((n + 1, top - i))
    return tuple(sorted(es))


def iso_partition(n: int, k: int, validate: bool = True) -> Partition:
    """The unique partition into isomorphic plane spanning trees with S_n = A_k."""
    _check_k(n, k)
    if n < 2:
        raise ValueError("isomorphic partitions are defined for n >= 2")
    trees = [_tree_i(n, k, i) for i in range(1, n)] + [double_star_A(n, k)]
    p = Partition(n, tuple(trees))
    if validate:
        p = validate_partition(p)
        if len({tree_code(t) for t in p.trees}) != 1:
            raise InvalidPartition(f"iso_partition({n}, {k}) has non-isomorphic trees")
    return p


# --------------------------------------------------------------------------
# tree isomorphism
# --------------------------------------------------------------------------

def _adjacency(edges: Iterable[Edge]) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    return adj


def _centers(adj: dict[int, list[int]]) -> list[int]:
    deg = {v: len(ns) for v, ns in adj.items()}
    leaves = [v for v, d in deg.items() if d <= 1]
    left = len(adj)
    while left > 2:
        left -= len(leaves)
        nxt = []
        for v in leaves:
            for u in adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        leaves = nxt
    return sorted(leaves)


def _rooted_code(adj: dict[int, list[int]], root: int) -> str:
    # iterative post-order so deep paths do not hit the recursion limit
    order, parent = [], {root: None}
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        for u in adj[v]:
            if u != parent[v]:
                parent[u] = v
                stack.append(u)
    code: dict[int, str] = {}
    for v in reversed(order):
        kids = sorted(code[u] for u in adj[v] if u != parent[v])
        code[v] = "(" + "".join(kids) + ")"
    return code[root]


def tree_code(edges: Iterable[Edge]) -> str:
    """Canonical string of an unlabeled tree (AHU encoding rooted at its center).

    Raises ValueError if ``edges`` is not a tree on its endpoints.
    """
    edges = list(edges)
    adj = _adjacency(edges)
    if not edges or not is_tree_on(adj, edges):
        raise ValueError("input is not a tree")
    return min(_rooted_code(adj, c) for c in _centers(adj))


def trees_isomorphic(t1: Iterable[Edge], t2: Iterable[Edge]) -> bool:
    return tree_code(t1) == tree_code(t2)


def find_k(p: Partition) -> Optional[int]:
    """k with S_n = A_k, or None if S_n is none of the A_k."""
    p = canonicalize(p)
    n = p.n
    sn = set(p.tree(n))
    k = 0
    while k < n and (n, n + k + 1) in sn:
        k += 1
    if k == 0:
        return None
    return k if tuple(sorted(sn)) == double_star_A(n, k) else None

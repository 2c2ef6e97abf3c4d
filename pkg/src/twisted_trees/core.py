"""Complete twisted graph T_2n: vertices, crossings, tree predicates, partitions.

Vertices are the positions 1..2n in twisted order v_1, ..., v_n, w_n, ..., w_1,
so position p <= n is v_p and position p > n is w_{2n+1-p}.  An edge is a pair
(a, b) with a < b.  Two edges cross iff their intervals strictly nest.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence, Tuple

Edge = Tuple[int, int]


class InvalidPartition(ValueError):
    """Raised when a partition fails structural or geometric validation."""


def edge(a: int, b: int) -> Edge:
    if a == b:
        raise ValueError(f"loop edge ({a}, {b})")
    return (a, b) if a < b else (b, a)


def center_edge(n: int, i: int) -> Edge:
    """The edge v_i w_i."""
    return (i, 2 * n + 1 - i)


def vertex_label(n: int, p: int) -> str:
    if not 1 <= p <= 2 * n:
        raise ValueError(f"vertex {p} outside 1..{2 * n}")
    return f"v{p}" if p <= n else f"w{2 * n + 1 - p}"


def cross(e1: Edge, e2: Edge) -> bool:
    a, b = e1
    c, d = e2
    return a < c < d < b or c < a < b < d


def all_edges(n: int) -> list[Edge]:
    return list(combinations(range(1, 2 * n + 1), 2))


class CrossMatrix:
    """Crossing relation of T_2n stored as one bitset (Python int) per edge.

    Edges are indexed lexicographically; ``index`` and ``edges`` are inverse
    bijections between edges and ``range(len(edges))``.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be >= 1")
        self.n = n
        self.edges = all_edges(n)
        self.index = {e: k for k, e in enumerate(self.edges)}
        masks = [0] * len(self.edges)
        for (k, e), (m, f) in combinations(enumerate(self.edges), 2):
            if cross(e, f):
                masks[k] |= 1 << m
                masks[m] |= 1 << k
        self.masks = tuple(masks)

    def __len__(self) -> int:
        return len(self.edges)

    def crosses(self, e: Edge, f: Edge) -> bool:
        return bool(self.masks[self.index[e]] >> self.index[f] & 1)

    def mask_of(self, edges: Iterable[Edge]) -> int:
        m = 0
        for e in edges:
            m |= 1 << self.index[e]
        return m

    def conflicts(self, edges: Iterable[Edge]) -> int:
        """Union of the crossing bitsets of ``edges``."""
        m = 0
        for e in edges:
            m |= self.masks[self.index[e]]
        return m

    def crossing_pairs(self) -> list[tuple[Edge, Edge]]:
        return [(e, f) for e, f in combinations(self.edges, 2) if self.crosses(e, f)]


@lru_cache(maxsize=None)
def crossing_matrix(n: int) -> CrossMatrix:
    return CrossMatrix(n)


def _max_vertex(edges: Iterable[Edge]) -> int:
    return max((b for _, b in edges), default=0)


def crossing_witness(edges: Iterable[Edge]) -> Optional[tuple[Edge, Edge]]:
    for e, f in combinations(sorted(set(edges)), 2):
        if cross(e, f):
            return e, f
    return None


def is_plane(edges: Iterable[Edge], n: Optional[int] = None) -> bool:
    """True iff no two edges cross.  Uses the cached matrix when it covers the edges."""
    edges = set(edges)
    if not edges:
        return True
    top = _max_vertex(edges)
    if n is None:
        n = (top + 1) // 2
    if top > 2 * n:
        return crossing_witness(edges) is None
    cm = crossing_matrix(n)
    placed = 0
    for e in edges:
        k = cm.index[e]
        if placed >> k & 1:
            return False
        placed |= cm.masks[k]
    return True


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def is_tree_on(vertices: Iterable[int], edges: Iterable[Edge]) -> bool:
    """True iff ``edges`` form a spanning tree of exactly ``vertices``."""
    vs = sorted(set(vertices))
    edges = set(edges)
    if len(edges) != len(vs) - 1:
        return False
    pos = {v: k for k, v in enumerate(vs)}
    parent = list(range(len(vs)))
    for a, b in edges:
        if a not in pos or b not in pos:
            return False
        ra, rb = _find(parent, pos[a]), _find(parent, pos[b])
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def is_spanning_tree(n: int, edges: Iterable[Edge]) -> bool:
    return is_tree_on(range(1, 2 * n + 1), edges)


def degrees(edges: Iterable[Edge]) -> dict[int, int]:
    deg: dict[int, int] = {}
    for a, b in edges:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    return deg


def double_star_center(vertices: Iterable[int], edges: Iterable[Edge]) -> Optional[Edge]:
    """Center edge if ``edges`` is a balanced double star spanning ``vertices``.

    On a tree with 2m vertices, an edge whose endpoints both have degree m
    already accounts for every edge, so the degree test is sufficient.
    """
    vs = set(vertices)
    edges = set(edges)
    if len(vs) % 2 or not is_tree_on(vs, edges):
        return None
    half = len(vs) // 2
    deg = degrees(edges)
    for a, b in sorted(edges):
        if deg[a] == half and deg[b] == half:
            return (a, b)
    return None


def is_balanced_double_star(n: int, edges: Iterable[Edge]) -> Optional[Edge]:
    return double_star_center(range(1, 2 * n + 1), edges)


@dataclass(frozen=True, order=True)
class Partition:
    """n edge sets intended to be plane spanning trees of T_2n.

    Construction does not validate; see :func:`canonicalize` and
    :func:`validate_partition`.  ``trees[i - 1]`` is S_i once canonical.
    """

    n: int
    trees: Tuple[Tuple[Edge, ...], ...]

    @classmethod
    def from_trees(cls, n: int, trees: Iterable[Iterable[Sequence[int]]]) -> "Partition":
        return cls(n, tuple(tuple(sorted(edge(a, b) for a, b in t)) for t in trees))

    def tree(self, i: int) -> Tuple[Edge, ...]:
        """S_i, 1-based."""
        return self.trees[i - 1]

    def tree_of(self) -> dict[Edge, int]:
        """Map each edge to the 1-based index of the tree holding it."""
        return {e: i for i, t in enumerate(self.trees, 1) for e in t}


def canonicalize(p: Partition) -> Partition:
    """Order trees by the center edge they contain and sort each tree's edges.

    Rejects objects that are not edge partitions of T_2n with one center edge
    per tree.  Planarity and the tree property are not checked here.
    """
    n = p.n
    if n < 1:
        raise InvalidPartition("n must be >= 1")
    if len(p.trees) != n:
        raise InvalidPartition(f"expected {n} trees, got {len(p.trees)}")
    seen: set[Edge] = set()
    slots: list[Optional[Tuple[Edge, ...]]] = [None] * n
    for t in p.trees:
        es = tuple(sorted(edge(a, b) for a, b in t))
        if len(set(es)) != len(es):
            raise InvalidPartition(f"repeated edge in tree {es}")
        for a, b in es:
            if not 1 <= a < b <= 2 * n:
                raise InvalidPartition(f"edge ({a}, {b}) outside T_{2 * n}")
        if seen.intersection(es):
            raise InvalidPartition(f"edge {sorted(seen.intersection(es))[0]} in two trees")
        seen.update(es)
        centers = [i for i in range(1, n + 1) if center_edge(n, i) in es]
        if len(centers) != 1:
            raise InvalidPartition(f"tree {es} holds {len(centers)} center edges")
        slots[centers[0] - 1] = es
    if len(seen) != n * (2 * n - 1):
        raise InvalidPartition(f"trees cover {len(seen)} of {n * (2 * n - 1)} edges")
    return Partition(n, tuple(slots))  # type: ignore[arg-type]


def validate_partition(p: Partition) -> Partition:
    """Canonicalize and check every tree is a plane spanning tree.

    Raises InvalidPartition whose message names the offending tree and,
    for planarity failures, the crossing edge pair.
    """
    q = canonicalize(p)
    for i, t in enumerate(q.trees, 1):
        w = crossing_witness(t)
        if w is not None:
            raise InvalidPartition(f"S_{i} is not plane: {w[0]} crosses {w[1]}")
        if not is_spanning_tree(q.n, t):
            raise InvalidPartition(f"S_{i} is not a spanning tree of T_{2 * q.n}")
    return q


def is_valid_partition(p: Partition) -> bool:
    try:
        validate_partition(p)
    except InvalidPartition:
        return False
    return True

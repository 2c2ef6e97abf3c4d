"""Enumeration and counting of partitions of T_2n into plane spanning trees.

Two engines that share nothing but the crossing predicate:

* ``oracle_enumerate`` assigns every non-center edge to one of the n trees by
  pruned backtracking.
* ``structured_enumerate`` grows partitions one level at a time: a partition of
  T_2n is lifted onto the inner vertices 2..2n+1 of T_2(n+1), a new S_1 is
  built around v_1 w_1, and the remaining edges at v_1 and at w_1 are matched
  to the inner trees, one pendant per tree, subject to planarity.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import chain
from typing import Iterable, Iterator, Optional, Sequence

from .core import (
    Edge,
    InvalidPartition,
    Partition,
    center_edge,
    crossing_matrix,
    degrees,
    validate_partition,
)

log = logging.getLogger(__name__)

DEFAULT_NODE_LIMIT = 10**9

T2 = Partition(1, (((1, 2),),))


class WorkLimitExceeded(RuntimeError):
    """The search used up its node budget before finishing."""


# --------------------------------------------------------------------------
# closed forms
# --------------------------------------------------------------------------

def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def count_closed_form(n: int) -> int:
    """5^(n-2) * 2^(1+(n-2)(n-3)) for n >= 2; 1 for n = 1."""
    _check_n(n)
    if n == 1:
        return 1
    return 5 ** (n - 2) * 2 ** (1 + (n - 2) * (n - 3))


def count_recursive(n: int) -> int:
    """p_2 = 2, p_(k+1) = 5 * 4^(k-2) * p_k."""
    _check_n(n)
    if n == 1:
        return 1
    p = 2
    for k in range(2, n):
        p *= 5 * 2 ** (2 * (k - 2))
    return p


# --------------------------------------------------------------------------
# oracle
# --------------------------------------------------------------------------

class _OracleSearch:
    """Backtracking over edge -> tree assignments.

    Pruning: an edge may not join a tree containing an edge it crosses, may not
    close a cycle, and a tree never exceeds 2n-1 edges.  Once the last edge at
    a vertex is placed, every tree must touch that vertex.  With the size cap
    and acyclicity, every complete assignment is a partition into plane
    spanning trees.
    """

    def __init__(self, n: int, node_limit: int = DEFAULT_NODE_LIMIT):
        _check_n(n)
        self.n = n
        self.node_limit = node_limit
        self.nodes = 0
        cm = crossing_matrix(n)
        self.cm = cm
        centers = {center_edge(n, i) for i in range(1, n + 1)}
        free = [e for e in cm.edges if e not in centers]
        # most constrained first
        free.sort(key=lambda e: (-bin(cm.masks[cm.index[e]]).count("1"), e))
        self.order = free
        self.order_masks = [cm.masks[cm.index[e]] for e in free]
        self.order_bits = [1 << cm.index[e] for e in free]
        last: dict[int, int] = {}
        for pos, (a, b) in enumerate(free):
            last[a] = pos
            last[b] = pos
        self.closes = [[] for _ in free]
        for v, pos in last.items():
            self.closes[pos].append(v)

    def _initial(self):
        n, cm = self.n, self.cm
        V = 2 * n + 1
        forbidden, count, comp, deg = [], [], [], []
        for i in range(1, n + 1):
            a, b = center_edge(n, i)
            forbidden.append(cm.masks[cm.index[(a, b)]])
            count.append(1)
            c = list(range(V))
            c[b] = a
            comp.append(c)
            d = [0] * V
            d[a] = d[b] = 1
            deg.append(d)
        return forbidden, count, comp, deg

    def _candidates(self, state, pos):
        forbidden, count, comp, _ = state
        a, b = self.order[pos]
        bit = self.order_bits[pos]
        cap = 2 * self.n - 1
        return [
            t for t in range(self.n)
            if not forbidden[t] & bit and count[t] < cap and comp[t][a] != comp[t][b]
        ]

    def _place(self, state, pos, t):
        forbidden, count, comp, deg = state
        a, b = self.order[pos]
        saved = (forbidden[t], comp[t])
        forbidden[t] |= self.order_masks[pos]
        count[t] += 1
        old, new = comp[t][b], comp[t][a]
        comp[t] = [new if x == old else x for x in comp[t]]
        deg[t][a] += 1
        deg[t][b] += 1
        return saved

    def _unplace(self, state, pos, t, saved):
        forbidden, count, comp, deg = state
        a, b = self.order[pos]
        forbidden[t], comp[t] = saved
        count[t] -= 1
        deg[t][a] -= 1
        deg[t][b] -= 1

    def _dead(self, state, pos) -> bool:
        deg = state[3]
        return any(d[v] == 0 for v in self.closes[pos] for d in deg)

    def prefixes(self, depth: int) -> list[tuple[int, ...]]:
        """All consistent assignments of the first ``depth`` edges."""
        out: list[tuple[int, ...]] = []
        state = self._initial()
        assign: list[int] = []

        def rec(pos):
            if pos == depth:
                out.append(tuple(assign))
                return
            for t in self._candidates(state, pos):
                saved = self._place(state, pos, t)
                if not self._dead(state, pos):
                    assign.append(t)
                    rec(pos + 1)
                    assign.pop()
                self._unplace(state, pos, t, saved)

        rec(0)
        return out

    def run(self, prefix: Sequence[int] = ()) -> list[tuple[int, ...]]:
        state = self._initial()
        for pos, t in enumerate(prefix):
            if t not in self._candidates(state, pos):
                return []
            self._place(state, pos, t)
            if self._dead(state, pos):
                return []
        assign = list(prefix)
        total = len(self.order)
        out: list[tuple[int, ...]] = []

        def rec(pos):
            if pos == total:
                out.append(tuple(assign))
                return
            for t in self._candidates(state, pos):
                self.nodes += 1
                if self.nodes > self.node_limit:
                    raise WorkLimitExceeded(
                        f"oracle search for n={self.n} exceeded {self.node_limit} nodes"
                    )
                saved = self._place(state, pos, t)
                if not self._dead(state, pos):
                    assign.append(t)
                    rec(pos + 1)
                    assign.pop()
                self._unplace(state, pos, t, saved)

        rec(len(prefix))
        return out

    def to_partition(self, assign: Sequence[int]) -> Partition:
        n = self.n
        trees: list[list[Edge]] = [[center_edge(n, i)] for i in range(1, n + 1)]
        for e, t in zip(self.order, assign):
            trees[t].append(e)
        return Partition(n, tuple(tuple(sorted(t)) for t in trees))


def _oracle_task(args):
    n, node_limit, prefix = args
    s = _OracleSearch(n, node_limit)
    return [s.to_partition(a) for a in s.run(prefix)], s.nodes


def oracle_enumerate(
    n: int,
    node_limit: int = DEFAULT_NODE_LIMIT,
    workers: int = 1,
    split_depth: int = 4,
) -> list[Partition]:
    """Every partition of T_2n into plane spanning trees, by brute force.

    Returns canonical partitions in sorted order.  With ``workers > 1`` the
    search is split on the assignments of the first ``split_depth`` edges and
    each subtree runs in its own process with its own ``node_limit``.
    """
    search = _OracleSearch(n, node_limit)
    if workers <= 1 or n < 3:
        found = [search.to_partition(a) for a in search.run()]
    else:
        depth = min(split_depth, len(search.order))
        tasks = [(n, node_limit, pre) for pre in search.prefixes(depth)]
        found = []
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for parts, _nodes in ex.map(_oracle_task, tasks):
                found.extend(parts)
    out = sorted(set(found))
    if len(out) != len(found):
        raise AssertionError("oracle produced duplicate partitions")
    return out


# --------------------------------------------------------------------------
# structured extension
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtensionChoice:
    """One way of lifting a base partition to the next level.

    ``case`` is "A" when S_1 takes v_1 w_(n+1) and w_1 v_(n+1), "B" when it
    takes v_1 v_(n+1) and w_1 w_(n+1).  ``v_pendants[j]`` is the far endpoint
    of the edge at v_1 given to tree S_(j+2); ``w_pendants[j]`` likewise for
    the edge at w_1.
    """

    case: str
    v_pendants: tuple[int, ...]
    w_pendants: tuple[int, ...]


def _lift(base: Partition) -> list[tuple[Edge, ...]]:
    return [tuple((a + 1, b + 1) for a, b in t) for t in base.trees]


def _first_tree(N: int, case: str) -> list[Edge]:
    """S_1 of T_2N: center v_1 w_1, the forced edges v_1 w_j, w_1 v_j (2 <= j < N),
    and the terminal pair selected by ``case``."""
    top = 2 * N
    s1 = [(1, top)]
    for j in range(2, N):
        s1.append((1, top + 1 - j))
        s1.append((j, top))
    if case == "A":
        s1 += [(1, N + 1), (N, top)]
    elif case == "B":
        s1 += [(1, N), (N + 1, top)]
    else:
        raise ValueError(f"unknown case {case!r}")
    return s1


def _pendants(N: int, s1: Iterable[Edge]) -> tuple[list[int], list[int]]:
    top = 2 * N
    used = set(s1)
    vs = [x for x in range(2, top) if (1, x) not in used]
    ws = [y for y in range(2, top) if (y, top) not in used]
    return vs, ws


def _compatibility(N: int, inner: Sequence[Sequence[Edge]], pendants: Sequence[Edge]):
    """compat[t] = bitmask over ``pendants`` that may join inner tree t."""
    cm = crossing_matrix(N)
    out = []
    for t in inner:
        bad = cm.conflicts(t)
        m = 0
        for k, p in enumerate(pendants):
            if not bad >> cm.index[p] & 1:
                m |= 1 << k
        out.append(m)
    return out


def _matchings(compat: Sequence[int], size: int) -> Iterator[tuple[int, ...]]:
    """Perfect matchings trees -> pendant indices, in lexicographic order."""
    chosen: list[int] = []

    def rec(t, used):
        if t == size:
            yield tuple(chosen)
            return
        avail = compat[t] & ~used
        while avail:
            low = avail & -avail
            k = low.bit_length() - 1
            chosen.append(k)
            yield from rec(t + 1, used | low)
            chosen.pop()
            avail ^= low

    return rec(0, 0)


def _count_matchings(compat: Sequence[int]) -> int:
    size = len(compat)

    @lru_cache(maxsize=None)
    def rec(t, used):
        if t == size:
            return 1
        total = 0
        avail = compat[t] & ~used
        while avail:
            low = avail & -avail
            total += rec(t + 1, used | low)
            avail ^= low
        return total

    return rec(0, 0)


def _setup(base: Partition, validate: bool):
    if validate:
        try:
            base = validate_partition(base)
        except InvalidPartition as exc:
            raise InvalidPartition(f"invalid base partition: {exc}") from None
    N = base.n + 1
    return base, N, _lift(base)


def extension_choices(base: Partition, validate: bool = True) -> Iterator[tuple[ExtensionChoice, Partition]]:
    """Yield every (choice, partition of T_2(n+1)) extending ``base``."""
    base, N, inner = _setup(base, validate)
    top = 2 * N
    for case in ("A", "B"):
        s1 = _first_tree(N, case)
        vs, ws = _pendants(N, s1)
        v_compat = _compatibility(N, inner, [(1, x) for x in vs])
        w_compat = _compatibility(N, inner, [(y, top) for y in ws])
        w_all = list(_matchings(w_compat, len(inner)))
        for vm in _matchings(v_compat, len(inner)):
            for wm in w_all:
                trees = [tuple(sorted(s1))]
                for t, a, b in zip(inner, vm, wm):
                    trees.append(tuple(sorted(t + ((1, vs[a]), (ws[b], top)))))
                choice = ExtensionChoice(case, tuple(vs[a] for a in vm), tuple(ws[b] for b in wm))
                yield choice, Partition(N, tuple(trees))


def extend(base: Partition, validate: bool = True) -> list[Partition]:
    """All partitions of T_2(n+1) whose restriction is ``base``."""
    return [p for _, p in extension_choices(base, validate)]


def count_extensions(base: Partition, validate: bool = True) -> dict[str, int]:
    """Number of extensions of ``base`` per S_1 case, without building them."""
    base, N, inner = _setup(base, validate)
    top = 2 * N
    out = {}
    for case in ("A", "B"):
        s1 = _first_tree(N, case)
        vs, ws = _pendants(N, s1)
        out[case] = (
            _count_matchings(_compatibility(N, inner, [(1, x) for x in vs]))
            * _count_matchings(_compatibility(N, inner, [(y, top) for y in ws]))
        )
    return out


def iter_structured(n: int, base: Partition = T2) -> Iterator[Partition]:
    """Stream every partition of T_2n below ``base`` depth-first."""
    _check_n(n)
    if base.n == n:
        yield base
        return
    if base.n > n:
        raise ValueError(f"base level {base.n} above target {n}")
    for child in extend(base, validate=False):
        yield from iter_structured(n, child)


def _extend_many(bases: Sequence[Partition]) -> list[Partition]:
    return list(chain.from_iterable(extend(b, validate=False) for b in bases))


def _chunks(seq, k):
    size = max(1, -(-len(seq) // k))
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def structured_enumerate(
    n: int,
    workers: int = 1,
    check_unique: bool = False,
    max_n: int = 5,
) -> list[Partition]:
    """All partitions of T_2n built by repeated extension from T_2.

    Returns canonical partitions in sorted order.  ``check_unique`` asserts
    that no two extensions, of the same or different bases, coincide.
    """
    _check_n(n)
    if n > max_n:
        raise WorkLimitExceeded(f"materializing n={n} exceeds max_n={max_n}; use structured_count")
    level = [T2]
    for k in range(1, n):
        if workers > 1 and len(level) >= 2 * workers:
            with ProcessPoolExecutor(max_workers=workers) as ex:
                nxt = list(chain.from_iterable(ex.map(_extend_many, _chunks(level, 4 * workers))))
        else:
            nxt = _extend_many(level)
        if check_unique and len(set(nxt)) != len(nxt):
            raise AssertionError(f"duplicate extensions at level {k + 1}")
        log.info("level %d: %d partitions", k + 1, len(nxt))
        level = nxt
    return sorted(level)


def _count_below(bases: Sequence[Partition]) -> int:
    return sum(sum(count_extensions(b, validate=False).values()) for b in bases)


def structured_count(n: int, workers: int = 1, progress=None) -> int:
    """Count partitions of T_2n by streaming the level below and counting extensions.

    Memory stays at one partition per recursion level.  ``progress`` is called
    with the running total after each base when running in-process.
    """
    _check_n(n)
    if n == 1:
        return 1
    if workers > 1 and n >= 4:
        # fan out over the bases two levels down, stream below that
        roots = list(iter_structured(n - 2)) if n - 2 >= 1 else [T2]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return sum(ex.map(_count_subtree, [(n, r) for r in roots]))
    total = 0
    for b in iter_structured(n - 1):
        total += sum(count_extensions(b, validate=False).values())
        if progress is not None:
            progress(total)
    return total


def _count_subtree(args) -> int:
    n, root = args
    return _count_below(list(iter_structured(n - 1, root)))


# --------------------------------------------------------------------------
# filters
# --------------------------------------------------------------------------

def filter_isomorphic(ps: Iterable[Partition]) -> list[Partition]:
    """Partitions whose trees are pairwise isomorphic as abstract trees."""
    from .isomorphic import tree_code

    out = []
    for p in ps:
        codes = {tree_code(t) for t in p.trees}
        if len(codes) == 1:
            out.append(p)
    return out


def filter_paths(ps: Iterable[Partition]) -> list[Partition]:
    """Partitions in which every tree is a Hamiltonian path."""
    return [p for p in ps if all(max(degrees(t).values()) <= 2 for t in p.trees)]


def sample_partitions(ps: Sequence[Partition], k: int, seed: int) -> list[Partition]:
    import random

    rng = random.Random(seed)
    return sorted(rng.sample(list(ps), min(k, len(ps))))

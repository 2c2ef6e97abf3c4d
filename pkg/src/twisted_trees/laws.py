"""Executable structural laws for partitions of T_2n into plane spanning trees.

Each checker returns a LawReport; a failing report always carries a witness.
Laws stated only for isomorphic partitions report NOT_APPLICABLE on others.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .core import (
    InvalidPartition,
    Partition,
    center_edge,
    double_star_center,
    validate_partition,
)
from .isomorphic import tree_code

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class LawReport:
    law: str
    status: str
    witness: Optional[str] = None

    def __post_init__(self):
        if self.status == FAILS and not self.witness:
            raise ValueError("a failing report needs a witness")

    @property
    def holds(self) -> bool:
        return self.status == HOLDS


def _ok(law):
    return LawReport(law, HOLDS)


def _fail(law, witness):
    return LawReport(law, FAILS, witness)


def _pairwise_isomorphic(p: Partition) -> bool:
    try:
        return len({tree_code(t) for t in p.trees}) == 1
    except ValueError:
        return False


def check_valid(p: Partition) -> LawReport:
    """The object is a partition into plane spanning trees."""
    try:
        validate_partition(p)
    except InvalidPartition as exc:
        return _fail("valid_partition", str(exc))
    return _ok("valid_partition")


def check_s1_double_star(p: Partition) -> LawReport:
    law = "s1_double_star"
    n = p.n
    s1 = next((t for t in p.trees if center_edge(n, 1) in t), None)
    if s1 is None:
        return _fail(law, f"no tree contains {center_edge(n, 1)}")
    c = double_star_center(range(1, 2 * n + 1), s1)
    if c != center_edge(n, 1):
        return _fail(law, f"S_1 = {list(s1)} is not a balanced double star on {center_edge(n, 1)}")
    return _ok(law)


def check_induced_double_star(p: Partition) -> LawReport:
    """For i < n, S_i restricted to v_i..v_n, w_n..w_i is a balanced double star
    on v_i w_i holding v_i w_j and w_i v_j (i < j < n) and one terminal pair."""
    law = "induced_double_star"
    n = p.n
    top = 2 * n + 1
    owner = p.tree_of()
    for i in range(1, n):
        c = center_edge(n, i)
        if c not in owner:
            return _fail(law, f"center edge {c} missing")
        tree = p.trees[owner[c] - 1]
        vi = set(range(i, top - i + 1))
        induced = [e for e in tree if e[0] in vi and e[1] in vi]
        if double_star_center(vi, induced) != c:
            return _fail(law, f"S_{i}[V_{i}] = {induced} is not a balanced double star on {c}")
        es = set(induced)
        for j in range(i + 1, n):
            for e in ((i, top - j), (j, top - i)):
                if e not in es:
                    return _fail(law, f"S_{i} lacks forced edge {e}")
        pair_a = {(i, n + 1), (n, top - i)}
        pair_b = {(i, n), (n + 1, top - i)}
        if (pair_a <= es) == (pair_b <= es):
            return _fail(law, f"S_{i} holds neither or both terminal pairs {sorted(pair_a)}, {sorted(pair_b)}")
    return _ok(law)


def check_distinct_trees(p: Partition) -> LawReport:
    """v_1v_2..v_1v_n, v_1w_n lie in distinct trees; so do w_1w_2..w_1w_n, w_1v_n."""
    law = "distinct_trees"
    n = p.n
    owner = p.tree_of()
    groups = {
        "v_1": [(1, j) for j in range(2, n + 2)],
        "w_1": [(j, 2 * n) for j in range(n, 2 * n)],
    }
    for name, group in groups.items():
        if n == 1:
            break
        seen: dict[int, tuple] = {}
        for e in group:
            t = owner.get(e)
            if t is None:
                return _fail(law, f"edge {e} not in any tree")
            if t in seen:
                return _fail(law, f"edges {seen[t]} and {e} at {name} share tree S_{t}")
            seen[t] = e
    return _ok(law)


def check_exterior_edges(p: Partition) -> LawReport:
    """For 1 < i < n, S_i holds v_t v_i and w_t w_i for every t < i."""
    law = "exterior_edges"
    if not _pairwise_isomorphic(p):
        return LawReport(law, NOT_APPLICABLE)
    n = p.n
    top = 2 * n + 1
    owner = p.tree_of()
    for i in range(2, n):
        si = owner.get(center_edge(n, i))
        for t in range(1, i):
            for e in ((t, i), (top - i, top - t)):
                if owner.get(e) != si:
                    return _fail(law, f"S_{i} lacks {e}")
    return _ok(law)


def check_all_double_stars(p: Partition) -> LawReport:
    law = "all_double_stars"
    if not _pairwise_isomorphic(p):
        return LawReport(law, NOT_APPLICABLE)
    n = p.n
    owner = p.tree_of()
    for i in range(1, n + 1):
        c = center_edge(n, i)
        if c not in owner:
            return _fail(law, f"center edge {c} missing")
        tree = p.trees[owner[c] - 1]
        if double_star_center(range(1, 2 * n + 1), tree) != c:
            return _fail(law, f"S_{i} is not a balanced double star on {c}")
    return _ok(law)


def restrict_partition(p: Partition) -> Partition:
    """Drop S_1 and the vertices v_1, w_1, shifting the remaining labels down by one."""
    p = validate_partition(p)
    n = p.n
    if n < 2:
        raise ValueError("restriction needs n >= 2")
    trees = []
    for t in p.trees[1:]:
        trees.append(tuple(sorted((a - 1, b - 1) for a, b in t if a != 1 and b != 2 * n)))
    return validate_partition(Partition(n - 1, tuple(trees)))


def check_restriction(p: Partition) -> LawReport:
    law = "restriction_valid"
    if p.n < 2:
        return LawReport(law, NOT_APPLICABLE)
    try:
        restrict_partition(p)
    except InvalidPartition as exc:
        return _fail(law, str(exc))
    return _ok(law)


LAWS: dict[str, Callable[[Partition], LawReport]] = {
    "valid_partition": check_valid,
    "s1_double_star": check_s1_double_star,
    "induced_double_star": check_induced_double_star,
    "distinct_trees": check_distinct_trees,
    "restriction_valid": check_restriction,
    "exterior_edges": check_exterior_edges,
    "all_double_stars": check_all_double_stars,
}


def run_suite(ps: Iterable[Partition], max_witnesses: int = 5) -> dict:
    """Run every law over ``ps``.

    Returns {law: {checked, held, not_applicable, failed, witnesses}}.
    """
    summary = {
        name: {"checked": 0, "held": 0, "not_applicable": 0, "failed": 0, "witnesses": []}
        for name in LAWS
    }
    for idx, p in enumerate(ps):
        for name, check in LAWS.items():
            r = check(p)
            s = summary[name]
            s["checked"] += 1
            if r.status == HOLDS:
                s["held"] += 1
            elif r.status == NOT_APPLICABLE:
                s["not_applicable"] += 1
            else:
                s["failed"] += 1
                if len(s["witnesses"]) < max_witnesses:
                    s["witnesses"].append(f"partition #{idx}: {r.witness}")
    return summary


def suite_passed(summary: dict) -> bool:
    return all(s["failed"] == 0 for s in summary.values())

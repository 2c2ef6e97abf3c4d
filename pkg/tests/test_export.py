import json
import xml.etree.ElementTree as ET

import pytest

from twisted_trees.core import InvalidPartition, Partition, canonicalize, cross
from twisted_trees.enumeration import T2
from twisted_trees.export import dumps, dumps_dot, from_document, loads, to_document, to_dot, to_svg
from twisted_trees.isomorphic import iso_partition

from .conftest import oracle

SVG = "{http://www.w3.org/2000/svg}"


def svg_panels(text):
    """[(tree membership {edge: tree}, crossing annotation set)] per panel."""
    root = ET.fromstring(text)
    panels = []
    for g in root.iter(f"{SVG}g"):
        if g.get("class") != "partition":
            continue
        member = {}
        for tg in g.iter(f"{SVG}g"):
            if tg.get("class") == "tree":
                for path in tg.iter(f"{SVG}path"):
                    a, b = map(int, path.get("data-edge").split("-"))
                    member[(a, b)] = int(tg.get("data-tree"))
        marks = set()
        for line in g.iter(f"{SVG}line"):
            e, f = (tuple(map(int, s.split("-"))) for s in line.get("data-pair").split())
            marks.add(frozenset((e, f)))
        panels.append((member, marks))
    return panels


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_json_round_trip(n):
    for p in oracle(n):
        assert loads(dumps(p)) == [canonicalize(p)]
    assert loads(dumps(list(oracle(n)))) == list(oracle(n))


def test_document_shape():
    doc = to_document(iso_partition(3, 2))
    assert doc["format-version"] == "1"
    assert doc["n"] == 3
    assert [t["center"] for t in doc["trees"]] == [[1, 6], [2, 5], [3, 4]]
    assert doc["trees"][2]["edges"] == [[1, 3], [2, 4], [3, 4], [3, 5], [4, 6]]


def test_parse_canonicalizes_order():
    doc = to_document(iso_partition(3, 2))
    doc["trees"].reverse()
    for t in doc["trees"]:
        t["edges"] = [[b, a] for a, b in reversed(t["edges"])]
    assert from_document(doc) == iso_partition(3, 2)


@pytest.mark.parametrize("mutate", [
    lambda d: d.update({"format-version": "0"}),
    lambda d: d.pop("n"),
    lambda d: d["trees"][0].update({"center": [2, 5]}),
    lambda d: d["trees"][0]["edges"].pop(),
])
def test_parse_rejects(mutate):
    doc = to_document(iso_partition(3, 2))
    mutate(doc)
    with pytest.raises(InvalidPartition):
        from_document(doc)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dot_blocks_and_edges(n):
    for p in oracle(n)[:5]:
        text = to_dot(p)
        assert text.count("subgraph tree_") == n
        assert text.count(" -- ") == n * (2 * n - 1)
        assert text.startswith("// format-version 1\n")


def test_dot_multiple_graphs():
    text = dumps_dot(oracle(2))
    assert text.count("graph partition_") == 2


def test_svg_fig3():
    p = iso_partition(3, 2)
    [(member, marks)] = svg_panels(to_svg(p))
    assert len(member) == 15
    assert set(member.values()) == {1, 2, 3}
    assert member == p.tree_of()
    expected = {frozenset((e, f)) for e in member for f in member if e < f and cross(e, f)}
    assert marks == expected
    assert len(marks) == 15


def test_svg_t2():
    [(member, marks)] = svg_panels(to_svg(T2))
    assert member == {(1, 2): 1}
    assert marks == set()


def test_svg_fig4_pair():
    ps = [iso_partition(2, 1), iso_partition(2, 2)]
    panels = svg_panels(to_svg(ps))
    assert [m for m, _ in panels] == [p.tree_of() for p in ps]
    assert all(marks == {frozenset(((1, 4), (2, 3)))} for _, marks in panels)


def test_svg_deterministic_and_has_legend():
    a = to_svg(iso_partition(4, 3))
    assert a == to_svg(iso_partition(4, 3))
    assert "Schematic" in a
    ET.fromstring(a)

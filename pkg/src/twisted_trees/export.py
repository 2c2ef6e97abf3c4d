"""JSON, DOT and SVG output for partitions."""
from __future__ import annotations

import json
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence
from xml.sax.saxutils import escape

from .core import InvalidPartition, Partition, canonicalize, center_edge, cross, vertex_label

FORMAT_VERSION = "1"

PALETTE = [
    "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
]


def tree_color(i: int) -> str:
    return PALETTE[(i - 1) % len(PALETTE)]


# --------------------------------------------------------------------------
# JSON
# --------------------------------------------------------------------------

def to_document(p: Partition) -> dict:
    p = canonicalize(p)
    return {
        "format-version": FORMAT_VERSION,
        "n": p.n,
        "trees": [
            {"center": list(center_edge(p.n, i)), "edges": [list(e) for e in t]}
            for i, t in enumerate(p.trees, 1)
        ],
    }


def from_document(doc: dict) -> Partition:
    """Parse a PartitionDocument into a canonical Partition.

    Only structure is checked here; planarity is left to the law suite so a
    corrupted file can be reported with a witness.
    """
    try:
        version = doc["format-version"]
        n = int(doc["n"])
        trees = doc["trees"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidPartition(f"malformed document: {exc!r}") from None
    if version != FORMAT_VERSION:
        raise InvalidPartition(f"unsupported format-version {version!r}")
    raw = []
    for t in trees:
        edges = [tuple(e) for e in t["edges"]]
        if any(len(e) != 2 for e in edges):
            raise InvalidPartition("edges must be pairs")
        center = tuple(t["center"])
        if tuple(sorted(center)) not in {tuple(sorted(e)) for e in edges}:
            raise InvalidPartition(f"center {list(center)} not among the tree's edges")
        raw.append(edges)
    p = canonicalize(Partition.from_trees(n, raw))
    declared = sorted(tuple(sorted(t["center"])) for t in trees)
    if declared != [center_edge(n, i) for i in range(1, n + 1)]:
        raise InvalidPartition(f"declared centers {declared} are not the n center edges")
    return p


def dumps(ps: Sequence[Partition] | Partition, indent: int | None = None) -> str:
    if isinstance(ps, Partition):
        return json.dumps(to_document(ps), indent=indent)
    return json.dumps([to_document(p) for p in ps], indent=indent)


def loads(text: str) -> list[Partition]:
    data = json.loads(text)
    if isinstance(data, dict):
        data = [data]
    return [from_document(d) for d in data]


def read_partitions(path: str | Path) -> list[Partition]:
    return loads(Path(path).read_text())


# --------------------------------------------------------------------------
# DOT
# --------------------------------------------------------------------------

def to_dot(p: Partition, name: str = "partition") -> str:
    p = canonicalize(p)
    n = p.n
    lines = [
        f"// format-version {FORMAT_VERSION}",
        f"graph {name} {{",
        f'  label="T_{2 * n} partition";',
        "  node [shape=circle];",
    ]
    for v in range(1, 2 * n + 1):
        lines.append(f'  {v} [label="{vertex_label(n, v)}"];')
    for i, t in enumerate(p.trees, 1):
        lines.append(f"  subgraph tree_{i} {{")
        lines.append(f'    edge [color="{tree_color(i)}"];')
        for a, b in t:
            lines.append(f"    {a} -- {b};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps_dot(ps: Iterable[Partition]) -> str:
    return "".join(to_dot(p, f"partition_{k}") for k, p in enumerate(ps, 1))


# --------------------------------------------------------------------------
# SVG
# --------------------------------------------------------------------------

GAP = 60.0
MARGIN = 40.0
LEGEND = (
    "Schematic: arcs do not reproduce the drawing of T_2n.",
    "Dashed connectors mark edge pairs that cross in T_2n (strictly nested intervals).",
)


def _f(x: float) -> str:
    return f"{x:.2f}"


def _panel(p: Partition, x0: float, baseline: float, title: str) -> tuple[list[str], float]:
    n = p.n
    width = 2 * MARGIN + (2 * n - 1) * GAP
    xs = {v: x0 + MARGIN + (v - 1) * GAP for v in range(1, 2 * n + 1)}
    out = [f'<g class="partition" data-n="{n}">']
    out.append(f'<text x="{_f(x0 + width / 2)}" y="20.00" text-anchor="middle" '
               f'font-size="14">{escape(title)}</text>')
    mids = {}
    for i, t in enumerate(p.trees, 1):
        color = tree_color(i)
        out.append(f'<g class="tree" data-tree="{i}" stroke="{color}" fill="none" stroke-width="2">')
        for a, b in t:
            xa, xb = xs[a], xs[b]
            h = 0.45 * (xb - xa)
            xm = (xa + xb) / 2
            mids[(a, b)] = (xm, baseline - h)
            out.append(
                f'<path class="edge" data-edge="{a}-{b}" '
                f'd="M {_f(xa)} {_f(baseline)} Q {_f(xm)} {_f(baseline - 2 * h)} {_f(xb)} {_f(baseline)}"/>'
            )
        out.append("</g>")
    edges = sorted(mids)
    out.append('<g class="crossings" stroke="#000000" stroke-width="1" stroke-dasharray="3,3">')
    for e, f in combinations(edges, 2):
        if cross(e, f):
            (x1, y1), (x2, y2) = mids[e], mids[f]
            out.append(
                f'<line class="crossing" data-pair="{e[0]}-{e[1]} {f[0]}-{f[1]}" '
                f'x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}"/>'
            )
    out.append("</g>")
    for v, x in xs.items():
        lab = vertex_label(n, v)
        out.append(f'<circle class="vertex" data-vertex="{v}" cx="{_f(x)}" cy="{_f(baseline)}" r="4" fill="#000000"/>')
        out.append(
            f'<text x="{_f(x)}" y="{_f(baseline + 20)}" text-anchor="middle" font-size="13">'
            f'{lab[0]}<tspan baseline-shift="sub" font-size="10">{lab[1:]}</tspan></text>'
        )
    out.append("</g>")
    return out, width


def to_svg(ps: Sequence[Partition] | Partition, titles: Sequence[str] | None = None) -> str:
    """Render partitions side by side on a line in twisted order v_1..v_n, w_n..w_1."""
    if isinstance(ps, Partition):
        ps = [ps]
    ps = [canonicalize(p) for p in ps]
    if not ps:
        raise ValueError("nothing to render")
    tallest = max(0.9 * (2 * p.n - 1) * GAP for p in ps)
    baseline = 40 + tallest
    height = baseline + 75
    body, x0 = [], 0.0
    for k, p in enumerate(ps):
        title = titles[k] if titles else f"T_{2 * p.n} partition {k + 1}"
        panel, w = _panel(p, x0, baseline, title)
        body.extend(panel)
        x0 += w
    width = max(x0, 480.0)
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_f(width)}" '
        f'height="{_f(height)}" viewBox="0 0 {_f(width)} {_f(height)}">',
        f'<desc>{escape(" ".join(LEGEND))}</desc>',
    ]
    tail = [
        f'<text class="legend" x="10.00" y="{_f(height - 26 + 14 * k)}" font-size="10">{escape(line)}</text>'
        for k, line in enumerate(LEGEND)
    ] + ["</svg>"]
    return "\n".join(head + body + tail) + "\n"

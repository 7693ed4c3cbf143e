"""File formats for graphs, censuses, designs and analysis reports.

All integers are written as plain decimals.
"""

from __future__ import annotations

import csv
import io
import json

import numpy as np

from .census import ISO_CLASSES, Census4
from .designs import Design
from .graphs import Graph


def graph_to_dict(g: Graph) -> dict:
    return {"q": g.q, "kind": g.kind.value, "edges": [list(e) for e in g.edges()]}


def graph_to_json(g: Graph) -> str:
    return json.dumps(graph_to_dict(g))


def graph_to_dimacs(g: Graph) -> str:
    """DIMACS edge format: ``p edge n m`` then ``e u v`` lines, 1-based vertices."""
    edges = g.edges()
    lines = [f"c {g.kind.value} graph on GF({g.field.p}^{g.field.r}), vertex i+1 = index i",
             f"p edge {g.q} {len(edges)}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"


def adjacency_from_dict(data: dict) -> np.ndarray:
    q = int(data["q"])
    a = np.zeros((q, q), dtype=bool)
    for u, v in data["edges"]:
        a[u, v] = a[v, u] = True
    return a


def census_records(c: Census4, kind: str) -> list[dict]:
    return [{"q": c.q, "kind": kind, "class": cls.label, "count": c[cls]} for cls in ISO_CLASSES]


def census_to_json(c: Census4, kind: str) -> str:
    return json.dumps({"q": c.q, "kind": kind,
                       "counts": {cls.label: c[cls] for cls in ISO_CLASSES}})


def to_csv(records: list[dict], fieldnames=None) -> str:
    buf = io.StringIO()
    fieldnames = fieldnames or (list(records[0]) if records else [])
    w = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    w.writeheader()
    w.writerows(records)
    return buf.getvalue()


def census_to_csv(c: Census4, kind: str) -> str:
    return to_csv(census_records(c, kind), ["q", "kind", "class", "count"])


def design_to_dict(d: Design) -> dict:
    return {"q": d.q, "k": d.k, "lambda": d.lam, "blocks": d.blocks.tolist()}


def design_to_json(d: Design) -> str:
    return json.dumps(design_to_dict(d))


def design_to_text(d: Design) -> str:
    """One block per line, points separated by single spaces."""
    return "".join(" ".join(map(str, row)) + "\n" for row in d.blocks.tolist())


def design_from_text(text: str, q: int) -> Design:
    rows = [list(map(int, ln.split())) for ln in text.splitlines() if ln.strip()]
    k = len(rows[0]) if rows else 0
    return Design(q, k, np.array(rows, dtype=np.int64).reshape(-1, k))

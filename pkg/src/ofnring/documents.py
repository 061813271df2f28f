"""JSON document formats and plain-text side rendering.

An OFN document is {"base": tag, "tuple": [up_slope, up_offset, down_slope,
down_offset]} with document tags identity / sqrt / gaussian / exponential.
A graph document is {"nodes": n, "edges": [{"from": u, "to": v,
"weight": <ofn document>}]}.
"""
from __future__ import annotations

import json
import math
from typing import Any

from .bases import GAUSSIAN_INVERSE, IDENTITY, LOG, SQRT
from .errors import DocumentError
from .pathalgebra import FuzzyDigraph
from .ring import TypedOfn, typed

DOC_TO_BASE = {"identity": IDENTITY, "sqrt": SQRT,
               "gaussian": GAUSSIAN_INVERSE, "exponential": LOG}
BASE_TO_DOC = {v: k for k, v in DOC_TO_BASE.items()}

_H_SYMBOL = {IDENTITY: "x", SQRT: "sqrt(x)",
             GAUSSIAN_INVERSE: "sqrt(-2 log x)", LOG: "log(x)"}


def ofn_to_doc(x: TypedOfn) -> dict[str, Any]:
    return {"base": BASE_TO_DOC[x.base], "tuple": list(x.coeffs.as_tuple())}


def ofn_from_doc(doc: Any) -> TypedOfn:
    if not isinstance(doc, dict):
        raise DocumentError(f"expected an object, got {type(doc).__name__}")
    extra = set(doc) - {"base", "tuple"}
    if extra:
        raise DocumentError(f"unexpected keys {sorted(extra)}")
    tag = doc.get("base")
    if tag not in DOC_TO_BASE:
        raise DocumentError(f"unknown base tag {tag!r}")
    tup = doc.get("tuple")
    if (not isinstance(tup, list) or len(tup) != 4
            or any(isinstance(v, bool) or not isinstance(v, (int, float))
                   or not math.isfinite(v) for v in tup)):
        raise DocumentError("tuple must be a list of 4 finite numbers")
    return typed(DOC_TO_BASE[tag], *map(float, tup))


def load_ofn(path: str) -> TypedOfn:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise DocumentError(f"invalid JSON in {path}: {e}") from e
    return ofn_from_doc(doc)


def graph_from_doc(doc: Any) -> FuzzyDigraph:
    if not isinstance(doc, dict) or not isinstance(doc.get("nodes"), int) \
            or isinstance(doc.get("nodes"), bool):
        raise DocumentError('graph document needs an integer "nodes" field')
    edges_doc = doc.get("edges")
    if not isinstance(edges_doc, list):
        raise DocumentError('graph document needs an "edges" list')
    edges = []
    for e in edges_doc:
        if not isinstance(e, dict) or not {"from", "to", "weight"} <= set(e):
            raise DocumentError('each edge needs "from", "to" and "weight"')
        u, v = e["from"], e["to"]
        if isinstance(u, bool) or isinstance(v, bool) \
                or not isinstance(u, int) or not isinstance(v, int):
            raise DocumentError("edge endpoints must be integers")
        edges.append((u, v, ofn_from_doc(e["weight"])))
    return FuzzyDigraph(doc["nodes"], tuple(edges))


def load_graph(path: str) -> FuzzyDigraph:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise DocumentError(f"invalid JSON in {path}: {e}") from e
    return graph_from_doc(doc)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def format_number(v: float) -> str:
    if v == int(v) and abs(v) < 1e15:
        return str(int(v))
    return format(v, ".12g")


def _side_text(base: str, slope: float, offset: float) -> str:
    if slope == 0.0:
        return format_number(offset)
    sym = _H_SYMBOL[base]
    if slope == 1.0:
        head = sym
    elif slope == -1.0:
        head = f"-{sym}"
    elif base == IDENTITY:
        head = f"{format_number(slope)}{sym}"
    else:
        head = f"{format_number(slope)}*{sym}"
    if offset == 0.0:
        return head
    if offset > 0:
        return f"{head}+{format_number(offset)}"
    return f"{head}-{format_number(-offset)}"


def render_sides(x: TypedOfn) -> str:
    t = x.coeffs
    return (f"({_side_text(x.base, t.up_slope, t.up_offset)}, "
            f"{_side_text(x.base, t.down_slope, t.down_offset)})")

"""JSON documents, DOT graphs and SVG pictures of complex windows.

All writers are deterministic byte for byte.  The SVG carries ``data-*``
attributes on every drawn vertex and edge so a picture can be parsed back
into exactly the vertex and edge sets it was drawn from.
"""

from __future__ import annotations

import json
import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from btz.complex import ComplexWindow, SimplexChain, enumerate_window, is_below, neighbors
from btz.core import SchemaError, UnsupportedRank, Vertex

SCHEMA = "btz-complex/1"
TOOL_VERSION = "0.1.0"


def _d_out(d):
    return "inf" if d is None else d


def _d_in(d, where: str):
    if d == "inf":
        return None
    if isinstance(d, int) and not isinstance(d, bool) and d >= 1:
        return d
    raise SchemaError(f"{where}: horizon must be a positive integer or 'inf', got {d!r}")


# ---------------------------------------------------------------------------
# JSON


def complex_document(cw: ComplexWindow, verification: Optional[dict] = None) -> dict:
    index = {v: i for i, v in enumerate(cw.vertices)}
    doc = {
        "schema": SCHEMA,
        "header": {
            "r": cw.r,
            "d": _d_out(cw.d),
            "k": cw.k,
            "kind": cw.kind,
            "N": cw.N,
            "margin": cw.margin,
            "tool_version": TOOL_VERSION,
        },
        "vertices": [list(v.coords) for v in cw.vertices],
        "maximal_simplices": [[index[v] for v in s.vertices] for s in cw.maximal_simplices],
        "verification": verification or {},
    }
    return doc


def export_json(cw: ComplexWindow, verification: Optional[dict] = None) -> bytes:
    text = json.dumps(complex_document(cw, verification), sort_keys=True, indent=2)
    return (text + "\n").encode("utf-8")


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise SchemaError(msg)


def _int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def read_document(data: Union[bytes, str]) -> dict:
    """Parse and validate a document; raises ``SchemaError`` naming the bad entry."""
    try:
        doc = json.loads(data)
    except (ValueError, UnicodeDecodeError) as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    _require(isinstance(doc, dict), "document must be a JSON object")
    schema = doc.get("schema")
    _require(schema == SCHEMA, f"schema: expected {SCHEMA!r}, got {schema!r}")
    header = doc.get("header")
    _require(isinstance(header, dict), "header: missing or not an object")
    for key in ("r", "k", "N", "margin"):
        _require(_int(header.get(key)), f"header.{key}: expected an integer, got {header.get(key)!r}")
    r = header["r"]
    _require(r >= 2, f"header.r: rank must be at least 2, got {r}")
    _d_in(header.get("d"), "header.d")
    _require(header.get("kind") in ("W", "A"), f"header.kind: expected 'W' or 'A', got {header.get('kind')!r}")
    verts = doc.get("vertices")
    _require(isinstance(verts, list), "vertices: expected a list")
    for i, v in enumerate(verts):
        _require(
            isinstance(v, list) and len(v) == r and all(_int(x) for x in v),
            f"vertices[{i}]: expected {r} integers, got {v!r}",
        )
        _require(v[-1] == 0, f"vertices[{i}]: last coordinate must be 0, got {v!r}")
    simplices = doc.get("maximal_simplices")
    _require(isinstance(simplices, list), "maximal_simplices: expected a list")
    for i, s in enumerate(simplices):
        _require(isinstance(s, list) and s, f"maximal_simplices[{i}]: expected a non-empty list")
        for j, idx in enumerate(s):
            _require(
                _int(idx) and 0 <= idx < len(verts),
                f"maximal_simplices[{i}][{j}]: index {idx!r} out of range 0..{len(verts) - 1}",
            )
    ver = doc.get("verification", {})
    _require(isinstance(ver, dict), "verification: expected an object")
    return doc


def import_json(data: Union[bytes, str]) -> ComplexWindow:
    doc = read_document(data)
    h = doc["header"]
    vertices = tuple(Vertex(tuple(v)) for v in doc["vertices"])
    simplices = []
    for i, s in enumerate(doc["maximal_simplices"]):
        try:
            simplices.append(SimplexChain(tuple(vertices[j] for j in s)))
        except Exception as exc:
            raise SchemaError(f"maximal_simplices[{i}]: not a simplex ({exc})") from exc
    return ComplexWindow(
        h["r"], _d_in(h["d"], "header.d"), h["k"], h["kind"], h["N"], h["margin"], vertices, tuple(simplices)
    )


# ---------------------------------------------------------------------------
# DOT


def node_name(v: Vertex) -> str:
    return "v_" + "_".join(str(x) for x in v.coords)


def export_dot(cw: ComplexWindow) -> bytes:
    """Directed 1-skeleton; each edge points from the smaller vertex to the larger."""
    title = f"W(d={_d_out(cw.d)},k={cw.k}) kind={cw.kind} r={cw.r} N={cw.N}"
    lines = [f'digraph "{title}" {{']
    if cw.dimension > 1:
        lines.append(f"  // 1-skeleton only; the complex has dimension {cw.dimension}")
    for v in cw.vertices:
        lines.append(f'  "{node_name(v)}";')
    for a, b in cw.edges():
        lines.append(f'  "{node_name(a)}" -> "{node_name(b)}";')
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def parse_dot(data: Union[bytes, str]) -> tuple[set, set]:
    """Node and edge sets of a document written by ``export_dot``."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    nodes, edges = set(), set()
    for line in text.splitlines():
        line = line.strip()
        if not line.startswith('"v_'):
            continue
        parts = [p.strip().strip(";").strip('"') for p in line.split("->")]
        if len(parts) == 1:
            nodes.add(parts[0])
        else:
            edges.add((parts[0], parts[1]))
    return nodes, edges


# ---------------------------------------------------------------------------
# SVG

STYLES = ("solid", "dashed", "dotted")
_DASH = {"solid": None, "dashed": "10,6", "dotted": "2,5"}


@dataclass
class ChamberLayout:
    """Planar picture of the rank-3 chamber: ``n_1 -> (1, 0)``, ``n_2 -> (1/2, sqrt(3)/2)``."""

    unit: float = 60.0
    pad: float = 40.0
    colors: Sequence[str] = ("#1f4e9c", "#b2182b", "#1b7837", "#7b3294")
    grid_color: str = "#c8c8c8"
    styles: Sequence[str] = STYLES

    def position(self, v: Vertex) -> tuple[float, float]:
        x1, x2 = v.coords[0], v.coords[1]
        return (x1 - x2 / 2.0, x2 * math.sqrt(3) / 2.0)


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _label(v: Vertex) -> str:
    return ",".join(str(x) for x in v.coords)


def render_svg(windows: Union[ComplexWindow, Iterable[ComplexWindow]], layout: Optional[ChamberLayout] = None) -> bytes:
    """Overlay one or more rank-3 Weyl windows on the chamber triangulation."""
    layout = layout or ChamberLayout()
    cws = [windows] if isinstance(windows, ComplexWindow) else list(windows)
    if not cws:
        raise SchemaError("nothing to render")
    for cw in cws:
        if cw.r != 3:
            raise UnsupportedRank(f"rendering needs r = 3, got r = {cw.r}")
        if cw.kind != "W":
            raise UnsupportedRank("rendering draws Weyl-chamber windows only")
    N = max(cw.N for cw in cws)
    u, pad = layout.unit, layout.pad
    height = N * math.sqrt(3) / 2.0 * u

    def xy(v: Vertex) -> tuple[str, str]:
        px, py = layout.position(v)
        return _fmt(pad + px * u), _fmt(pad + height - py * u)

    width = N * u + 2 * pad + 220
    total_h = height + 2 * pad
    root = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "version": "1.1",
            "width": _fmt(width),
            "height": _fmt(total_h),
            "viewBox": f"0 0 {_fmt(width)} {_fmt(total_h)}",
        },
    )
    grid = ET.SubElement(root, "g", {"class": "chamber", "stroke": layout.grid_color, "stroke-width": "1"})
    chamber = enumerate_window(3, N, "W")
    cset = set(chamber)
    for a in chamber:
        for b in neighbors(a):
            if b in cset and is_below(a, b):
                x1, y1 = xy(a)
                x2, y2 = xy(b)
                ET.SubElement(grid, "line", {"x1": x1, "y1": y1, "x2": x2, "y2": y2})
    for i, cw in enumerate(cws):
        style = layout.styles[i % len(layout.styles)]
        color = layout.colors[i % len(layout.colors)]
        attrs = {
            "class": "complex",
            "data-d": str(_d_out(cw.d)),
            "data-k": str(cw.k),
            "data-N": str(cw.N),
            "data-style": style,
            "stroke": color,
            "stroke-width": "4",
            "fill": color,
        }
        if _DASH[style]:
            attrs["stroke-dasharray"] = _DASH[style]
        g = ET.SubElement(root, "g", attrs)
        for a, b in cw.edges():
            x1, y1 = xy(a)
            x2, y2 = xy(b)
            ET.SubElement(
                g,
                "line",
                {"x1": x1, "y1": y1, "x2": x2, "y2": y2, "data-from": _label(a), "data-to": _label(b)},
            )
        for v in cw.vertices:
            cx, cy = xy(v)
            ET.SubElement(g, "circle", {"cx": cx, "cy": cy, "r": "4", "data-vertex": _label(v)})
        ly = _fmt(pad + 24 * i)
        lx = _fmt(pad + N * u + 30)
        lx2 = _fmt(pad + N * u + 70)
        leg = {"x1": lx, "y1": ly, "x2": lx2, "y2": ly, "stroke": color, "stroke-width": "4", "class": "legend"}
        if _DASH[style]:
            leg["stroke-dasharray"] = _DASH[style]
        ET.SubElement(root, "line", leg)
        text = ET.SubElement(
            root, "text", {"x": _fmt(pad + N * u + 78), "y": _fmt(pad + 24 * i + 5), "font-size": "16"}
        )
        text.text = f"= W({_d_out(cw.d)},{cw.k})"
    ET.indent(root)
    body = ET.tostring(root, encoding="unicode")
    return ('<?xml version="1.0" encoding="UTF-8"?>\n' + body + "\n").encode("utf-8")


@dataclass
class RenderedLayer:
    d: object
    k: int
    style: str
    vertices: set = field(default_factory=set)
    edges: set = field(default_factory=set)


def parse_svg(data: Union[bytes, str]) -> list[RenderedLayer]:
    """Recover the vertex and edge sets of each drawn complex."""
    root = ET.fromstring(data)
    ns = "{http://www.w3.org/2000/svg}"
    layers = []
    for g in root.iter(f"{ns}g"):
        if g.get("class") != "complex":
            continue
        d = g.get("data-d")
        layer = RenderedLayer(None if d == "inf" else int(d), int(g.get("data-k")), g.get("data-style"))
        for el in g:
            if el.tag == f"{ns}circle":
                layer.vertices.add(_parse_label(el.get("data-vertex")))
            elif el.tag == f"{ns}line":
                layer.edges.add((_parse_label(el.get("data-from")), _parse_label(el.get("data-to"))))
        layers.append(layer)
    return layers


def _parse_label(text: str) -> Vertex:
    return Vertex(tuple(int(x) for x in text.split(",")))

"""Pattern serialization: lossless JSON and display SVG."""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .errors import InvalidPattern, ParseError, SchemaVersionMismatch
from .geometry import Arc, CubicBezier, Edge, Line, QuadBezier
from .pattern import Panel, Pattern, Placement, Stitch, panel_polyline
from .validation import validate_pattern

SCHEMA_VERSION = 1


def pattern_to_json(pattern: Pattern, indent: int | None = None) -> str:
    """Serialize to the versioned interchange format.

    Floats pass through ``repr`` (shortest round-trip form, up to 17
    significant digits), so load(dump(p)) reproduces coordinates exactly.
    """
    doc = {
        "schema_version": SCHEMA_VERSION,
        "panels": [_panel_to_obj(p) for p in pattern.panels],
        "stitches": [
            {"a": list(s.side_a), "b": list(s.side_b), "reversed": s.reversed}
            for s in pattern.stitches
        ],
    }
    return json.dumps(doc, indent=indent)


def pattern_from_json(text: str) -> Pattern:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("document must be an object")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaVersionMismatch(version, SCHEMA_VERSION)

    panels_obj = _expect(doc, "panels", list, "$")
    stitches_obj = doc.get("stitches", [])
    if not isinstance(stitches_obj, list):
        raise ParseError("must be an array", "stitches")

    panels = tuple(_panel_from_obj(p, f"panels[{i}]")
                   for i, p in enumerate(panels_obj))
    stitches = tuple(_stitch_from_obj(s, f"stitches[{i}]")
                     for i, s in enumerate(stitches_obj))
    return Pattern(panels=panels, stitches=stitches)


def _panel_to_obj(panel: Panel) -> dict:
    return {
        "id": panel.id,
        "placement": {
            "t": list(panel.placement.translation),
            "q": list(panel.placement.quaternion),
        },
        "edges": [_edge_to_obj(e) for e in panel.edges],
    }


def _edge_to_obj(edge: Edge) -> dict:
    kind = edge.kind
    k: Any
    if isinstance(kind, Line):
        k = "line"
    elif isinstance(kind, QuadBezier):
        k = {"quad": {"c": list(kind.control)}}
    elif isinstance(kind, Arc):
        k = {"arc": {"r": kind.radius, "large": kind.large, "dir": kind.direction}}
    elif isinstance(kind, CubicBezier):
        k = {"cubic": {"c1": list(kind.control1), "c2": list(kind.control2)}}
    else:
        raise TypeError(f"unknown edge kind {kind!r}")
    return {"start": list(edge.start), "kind": k}


def _expect(obj: dict, key: str, typ: type, at: str) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"missing field {key!r}", at)
    val = obj[key]
    if not isinstance(val, typ) or (typ is not bool and isinstance(val, bool)):
        raise ParseError(f"field {key!r} must be {typ.__name__}", f"{at}.{key}")
    return val


def _num(value: Any, at: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError("expected a number", at)
    return float(value)


def _point(value: Any, at: str) -> tuple[float, float]:
    if not isinstance(value, list) or len(value) != 2:
        raise ParseError("expected [x, y]", at)
    return (_num(value[0], f"{at}[0]"), _num(value[1], f"{at}[1]"))


def _vec(value: Any, n: int, at: str) -> tuple:
    if not isinstance(value, list) or len(value) != n:
        raise ParseError(f"expected an array of {n} numbers", at)
    return tuple(_num(v, f"{at}[{i}]") for i, v in enumerate(value))


def _panel_from_obj(obj: Any, at: str) -> Panel:
    if not isinstance(obj, dict):
        raise ParseError("panel must be an object", at)
    pid = _expect(obj, "id", str, at)
    placement = Placement()
    if "placement" in obj:
        pl = obj["placement"]
        if not isinstance(pl, dict):
            raise ParseError("placement must be an object", f"{at}.placement")
        t = _vec(pl.get("t", [0, 0, 0]), 3, f"{at}.placement.t")
        q = _vec(pl.get("q", [1, 0, 0, 0]), 4, f"{at}.placement.q")
        placement = Placement(translation=t, quaternion=q)
    edges_obj = _expect(obj, "edges", list, at)
    edges = tuple(_edge_from_obj(e, f"{at}.edges[{i}]")
                  for i, e in enumerate(edges_obj))
    return Panel(id=pid, edges=edges, placement=placement)


def _edge_from_obj(obj: Any, at: str) -> Edge:
    if not isinstance(obj, dict):
        raise ParseError("edge must be an object", at)
    start = _point(obj.get("start"), f"{at}.start")
    kind_obj = obj.get("kind")
    if kind_obj == "line":
        return Edge(start, Line())
    if isinstance(kind_obj, dict) and len(kind_obj) == 1:
        tag, body = next(iter(kind_obj.items()))
        kat = f"{at}.kind.{tag}"
        if not isinstance(body, dict):
            raise ParseError("kind body must be an object", kat)
        if tag == "quad":
            return Edge(start, QuadBezier(_point(body.get("c"), f"{kat}.c")))
        if tag == "cubic":
            return Edge(start, CubicBezier(_point(body.get("c1"), f"{kat}.c1"),
                                           _point(body.get("c2"), f"{kat}.c2")))
        if tag == "arc":
            r = _num(body.get("r"), f"{kat}.r")
            large = body.get("large")
            direction = body.get("dir")
            if not isinstance(large, bool):
                raise ParseError("field 'large' must be bool", f"{kat}.large")
            if not isinstance(direction, bool):
                raise ParseError("field 'dir' must be bool", f"{kat}.dir")
            return Edge(start, Arc(r, large, direction))
    raise ParseError("unknown edge kind", f"{at}.kind")


def _stitch_from_obj(obj: Any, at: str) -> Stitch:
    if not isinstance(obj, dict):
        raise ParseError("stitch must be an object", at)

    def side(key: str) -> tuple[str, int]:
        val = obj.get(key)
        if (not isinstance(val, list) or len(val) != 2
                or not isinstance(val[0], str)
                or isinstance(val[1], bool) or not isinstance(val[1], int)):
            raise ParseError("expected [panel_id, edge_index]", f"{at}.{key}")
        return (val[0], val[1])

    rev = obj.get("reversed", False)
    if not isinstance(rev, bool):
        raise ParseError("field 'reversed' must be bool", f"{at}.reversed")
    return Stitch(side_a=side("a"), side_b=side("b"), reversed=rev)


# --- SVG export -----------------------------------------------------------

_PAD = 4.0  # cm of whitespace between panels
_COLS = 3


def _fmt(v: float) -> str:
    return f"{v:.6g}"


def _edge_command(edge: Edge, end: tuple[float, float]) -> str:
    kind = edge.kind
    ex, ey = _fmt(end[0]), _fmt(end[1])
    if isinstance(kind, Line):
        return f"L {ex} {ey}"
    if isinstance(kind, QuadBezier):
        cx, cy = kind.control
        return f"Q {_fmt(cx)} {_fmt(cy)} {ex} {ey}"
    if isinstance(kind, CubicBezier):
        (x1, y1), (x2, y2) = kind.control1, kind.control2
        return f"C {_fmt(x1)} {_fmt(y1)} {_fmt(x2)} {_fmt(y2)} {ex} {ey}"
    if isinstance(kind, Arc):
        r = _fmt(kind.radius)
        # Path data stays in the y-up panel frame; the group transform
        # flips it for display, carrying the arc to the correct side.
        return f"A {r} {r} 0 {int(kind.large)} {int(kind.direction)} {ex} {ey}"
    raise TypeError(f"unknown edge kind {kind!r}")


def _panel_path(panel: Panel) -> str:
    sx, sy = panel.edges[0].start
    cmds = [f"M {_fmt(sx)} {_fmt(sy)}"]
    cmds.extend(_edge_command(e, end) for e, end in panel.edge_pairs())
    cmds.append("Z")
    return " ".join(cmds)


def pattern_to_svg(pattern: Pattern) -> str:
    """Render the flat pattern to SVG: one group per panel on a grid.

    Every panel outline is a single path; each stitched edge is drawn
    again on top, with both sides of a stitch sharing one color.
    """
    report = validate_pattern(pattern)
    if not report.valid:
        raise InvalidPattern(report.summary())

    n_st = len(pattern.stitches)
    colors = [f"hsl({round(360 * i / max(n_st, 1))},70%,45%)" for i in range(n_st)]
    edge_color: dict[tuple[str, int], str] = {}
    for i, st in enumerate(pattern.stitches):
        edge_color[tuple(st.side_a)] = colors[i]
        edge_color[tuple(st.side_b)] = colors[i]

    boxes = []
    for p in pattern.panels:
        pts = panel_polyline(p, 32)
        boxes.append((pts[:, 0].min(), pts[:, 0].max(),
                      pts[:, 1].min(), pts[:, 1].max()))

    groups = []
    cur_x, cur_y, row_h = _PAD, _PAD, 0.0
    total_w = 0.0
    for col, (panel, (x0, x1, y0, y1)) in enumerate(zip(pattern.panels, boxes)):
        if col % _COLS == 0 and col > 0:
            cur_x, cur_y = _PAD, cur_y + row_h + _PAD
            row_h = 0.0
        tx, ty = cur_x - x0, cur_y + y1
        body = [f'<path class="outline" fill="#f2ede4" stroke="#222" '
                f'stroke-width="0.4" d="{_panel_path(panel)}"/>']
        for i, (e, end) in enumerate(panel.edge_pairs()):
            color = edge_color.get((panel.id, i))
            if color is None:
                continue
            (sx, sy) = e.start
            d = f"M {_fmt(sx)} {_fmt(sy)} {_edge_command(e, end)}"
            body.append(f'<path class="stitch" fill="none" stroke="{color}" '
                        f'stroke-width="0.8" d="{d}"/>')
        groups.append(
            f'<g id="panel-{panel.id}" '
            f'transform="translate({_fmt(tx)},{_fmt(ty)}) scale(1,-1)">'
            + "".join(body) + "</g>")
        cur_x += (x1 - x0) + _PAD
        row_h = max(row_h, y1 - y0)
        total_w = max(total_w, cur_x)
    total_h = cur_y + row_h + _PAD

    return (f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'viewBox="0 0 {_fmt(total_w)} {_fmt(total_h)}" '
            f'width="{_fmt(total_w * 4)}" height="{_fmt(total_h * 4)}">'
            + "".join(groups) + "</svg>")

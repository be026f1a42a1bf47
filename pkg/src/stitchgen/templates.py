"""Parametric garment templates.

Each template is a fixed panel topology whose vertex coordinates are
analytic functions of a small raw parameter vector.  Decoding never
fails: raw values outside the declared bounds are clamped first (with a
Warning), and every in-range vector produces a simple, positively
oriented set of panels whose stitched edges have exactly equal
arc length by construction.

Conventions shared by all templates:

- Panel frames are x-right / y-up, units are centimetres.
- Front panels sit at positive world z with identity rotation; back
  panels sit at negative z rotated half a turn about y, so an
  orthographic front view sees only front-facing geometry.
- The world y axis is vertical.  A garment is placed on a standing
  figure whose neck base is near y = 136 and whose waist is near y = 98.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

from .errors import UnknownTemplate
from .geometry import CubicBezier, Edge, Line, QuadBezier, mirror_edge_x, reverse_edge
from .pattern import Panel, Pattern, Placement, Stitch
from .params import (
    Continuous,
    Discrete,
    ParamDef,
    ParamSpec,
    clamp_raw,
    label_raw,
)

Point = Tuple[float, float]

# World anchors (cm).  Chosen so garments hang on the default figure.
_NECK_BASE_Y = 136.0
_WAIST_Y = 98.0
_FRONT_Z = 11.0
_BACK_Z = -11.0
_SLEEVE_Z = 4.0
_HOOD_Z = 3.0

# Fixed construction constants for tops.
_BACK_NECK_DEPTH = 2.5
_UPPER_SHOULDER_SLOPE_DEG = 10.0
_SLEEVE_TILT_DEG = 22.0
_SLEEVE_GAP = 1.5

# Rotation of back panels: half turn about world y.
_BACK_ROT = (0.0, 0.0, 1.0, 0.0)
_IDENT_ROT = (1.0, 0.0, 0.0, 0.0)


def _rot_z(deg: float) -> Tuple[float, float, float, float]:
    h = math.radians(deg) / 2.0
    return (math.cos(h), 0.0, 0.0, math.sin(h))


# ---------------------------------------------------------------------------
# Parameter specs


def _c(name: str, lo: float, hi: float, desc: str, unit: str = "cm") -> ParamDef:
    return ParamDef(name, Continuous(lo, hi, unit), desc)


def _d(name: str, choices: Sequence[str], desc: str) -> ParamDef:
    return ParamDef(name, Discrete(tuple(choices)), desc)


UPPER_SPEC = ParamSpec(
    "upper_garment",
    (
        _d("neckline", ("v", "round", "square"), "front neckline shape"),
        _c("neck_width", 8.0, 18.0, "neck opening width"),
        _c("neck_depth", 4.0, 14.0, "front neckline depth below the neck line"),
        _c("shoulder_width", 34.0, 46.0, "tip-to-tip shoulder width"),
        _c("bust_width", 40.0, 56.0, "body width at the underarm"),
        _c("hem_width", 34.0, 56.0, "body width at the hem"),
        _c("torso_length", 40.0, 70.0, "neck line to hem"),
        _c("armhole_depth", 14.0, 22.0, "shoulder tip to underarm, vertical"),
        _d("sleeves", ("off", "on"), "whether sleeves are attached"),
        _c("sleeve_length", 15.0, 60.0, "underarm seam top to cuff"),
        _c("cuff_width", 8.0, 20.0, "sleeve opening width"),
        _d("hood", ("off", "on"), "whether a hood is attached"),
        _c("hood_height", 25.0, 40.0, "neckline to hood crown"),
        _c("hood_depth", 10.0, 25.0, "hood crown front-to-back"),
    ),
)

DRESS_SPEC = ParamSpec(
    "dress",
    (
        _d("neckline", ("v", "round", "square"), "front neckline shape"),
        _c("neck_width", 8.0, 18.0, "neck opening width"),
        _c("neck_depth", 4.0, 14.0, "front neckline depth below the neck line"),
        _c("shoulder_width", 34.0, 46.0, "tip-to-tip shoulder width"),
        _c("shoulder_slope", 0.0, 22.0, "shoulder drop from horizontal", "deg"),
        _c("bust_width", 40.0, 56.0, "bodice width at the underarm"),
        _c("waist_width", 34.0, 52.0, "bodice width at the waist seam"),
        _c("bodice_length", 32.0, 45.0, "neck line to waist seam"),
        _c("armhole_depth", 14.0, 21.0, "shoulder tip to underarm, vertical"),
        _d("sleeves", ("off", "on"), "whether sleeves are attached"),
        _c("sleeve_length", 15.0, 60.0, "underarm seam top to cuff"),
        _c("sleeve_bicep", 10.0, 22.0, "sleeve width where it meets the body"),
        _c("sleeve_cuff", 8.0, 20.0, "sleeve opening width"),
        _c("skirt_length", 35.0, 95.0, "waist seam to hem"),
        _c("skirt_flare", 0.0, 25.0, "side seam angle from vertical", "deg"),
        _c("hem_curve", 0.0, 10.0, "extra drop of the hem centre"),
    ),
)

PANTS_SPEC = ParamSpec(
    "pants",
    (
        _c("waist_width", 34.0, 56.0, "total width across the waistband"),
        _c("hip_width", 24.0, 38.0, "single-leg width at hip level"),
        _c("hip_height", 0.30, 0.65, "hip level as a fraction of the rise", ""),
        _c("knee_width", 14.0, 32.0, "single-leg width at knee level"),
        _c("knee_height", 0.35, 0.65, "knee level as a fraction of the inseam", ""),
        _c("cuff_width", 12.0, 30.0, "single-leg width at the hem"),
        _c("inseam_length", 25.0, 70.0, "crotch to hem along the inner seam"),
        _c("rise_height", 22.0, 34.0, "crotch to waistband"),
        _c("leg_gap", 1.0, 5.0, "half distance between the inner leg seams"),
        _c("waist_dip", 0.0, 2.0, "waistband centre drop"),
        _c("cuff_curve", 0.0, 3.0, "hem centre drop"),
        _c("crotch_curve", 0.0, 3.0, "crotch seam scoop"),
    ),
)


# ---------------------------------------------------------------------------
# Panel builders.  Each returns (edges, roles) where roles maps a seam
# role name to the edge index that plays it.


def _loop_ends(edges: Sequence[Edge]) -> List[Point]:
    n = len(edges)
    return [edges[(i + 1) % n].start for i in range(n)]


def _mirror_loop(edges: Sequence[Edge]) -> Tuple[Edge, ...]:
    """Mirror a closed loop about the y axis, preserving orientation.

    Edge k of the result is the mirror image of edge n-1-k of the input.
    """
    ends = _loop_ends(edges)
    return tuple(
        mirror_edge_x(reverse_edge(edges[i], ends[i]))
        for i in reversed(range(len(edges)))
    )


def _bodice(
    neck_width: float,
    neck_depth: float,
    shoulder_width: float,
    bust_width: float,
    hem_width: float,
    height: float,
    armhole_depth: float,
    slope_deg: float,
    neckline: str,
) -> Tuple[Tuple[Edge, ...], Dict[str, int]]:
    """Torso panel: hem, right side, right armhole, right shoulder,
    neckline run, then the mirrored left side.  neckline may also be
    "back", a fixed shallow two-segment vee."""
    dy = math.tan(math.radians(slope_deg)) * (shoulder_width - neck_width) / 2.0
    y_tip = height - dy
    y_under = y_tip - armhole_depth
    nw2, sw2, bw2, hw2 = (neck_width / 2.0, shoulder_width / 2.0,
                          bust_width / 2.0, hem_width / 2.0)

    edges: List[Edge] = [
        Edge((-hw2, 0.0), Line()),          # hem
        Edge((hw2, 0.0), Line()),           # side right
        Edge((bw2, y_under), Line()),       # armhole right
        Edge((sw2, y_tip), Line()),         # shoulder right
    ]
    roles = {"hem": 0, "side_r": 1, "armhole_r": 2, "shoulder_r": 3}

    if neckline == "back":
        edges.append(Edge((nw2, height), Line()))
        edges.append(Edge((0.0, height - _BACK_NECK_DEPTH), Line()))
        roles["neck_r"] = 4
        roles["neck_l"] = 5
    elif neckline == "v":
        edges.append(Edge((nw2, height), Line()))
        edges.append(Edge((0.0, height - neck_depth), Line()))
    elif neckline == "round":
        edges.append(Edge((nw2, height), QuadBezier((0.0, height - 2.0 * neck_depth))))
    elif neckline == "square":
        edges.append(Edge((nw2, height), Line()))
        edges.append(Edge((nw2, height - neck_depth), Line()))
        edges.append(Edge((-nw2, height - neck_depth), Line()))
    else:
        raise ValueError(f"unknown neckline {neckline!r}")

    k = len(edges)
    edges.append(Edge((-nw2, height), Line()))   # shoulder left
    edges.append(Edge((-sw2, y_tip), Line()))    # armhole left
    edges.append(Edge((-bw2, y_under), Line()))  # side left
    roles["shoulder_l"] = k
    roles["armhole_l"] = k + 1
    roles["side_l"] = k + 2
    return tuple(edges), roles


def _sleeve(length: float, cuff_width: float, bicep: float,
            armhole_len: float) -> Tuple[Tuple[Edge, ...], Dict[str, int]]:
    """Sleeve panel, cuff at the bottom, peaked cap at the top.

    The cap rise is chosen so each cap edge has exactly the armhole's
    length; the underarm edges are left unstitched.
    """
    rise = math.sqrt(armhole_len * armhole_len - (bicep / 2.0) ** 2)
    wc2, wb2 = cuff_width / 2.0, bicep / 2.0
    edges = (
        Edge((-wc2, 0.0), Line()),            # cuff
        Edge((wc2, 0.0), Line()),             # underarm right
        Edge((wb2, length), Line()),          # cap right
        Edge((0.0, length + rise), Line()),   # cap left
        Edge((-wb2, length), Line()),         # underarm left
    )
    roles = {"cuff": 0, "under_r": 1, "cap_r": 2, "cap_l": 3, "under_l": 4}
    return edges, roles


def _skirt(waist_width: float, length: float, flare_deg: float,
           hem_curve: float) -> Tuple[Tuple[Edge, ...], Dict[str, int]]:
    """Trapezoid skirt panel with its waist edge along y = 0."""
    ww2 = waist_width / 2.0
    wh2 = ww2 + math.tan(math.radians(flare_deg)) * length
    edges = (
        Edge((ww2, 0.0), Line()),                                  # waist
        Edge((-ww2, 0.0), Line()),                                 # side left
        Edge((-wh2, -length), QuadBezier((0.0, -length - 2.0 * hem_curve))),
        Edge((wh2, -length), Line()),                              # side right
    )
    roles = {"waist": 0, "side_l": 1, "hem": 2, "side_r": 3}
    return edges, roles


def _hood(height: float, depth: float,
          back_neck_half: float) -> Tuple[Tuple[Edge, ...], Dict[str, int]]:
    """Left hood half.  Bottom edge matches half the back neckline."""
    edges = (
        Edge((-back_neck_half, 0.0), Line()),   # bottom, outer to centre
        Edge((0.0, 0.0), Line()),               # centre seam, up
        Edge((0.0, height), Line()),            # crown
        Edge((-depth, height), Line()),         # back slant
    )
    roles = {"bottom": 0, "centre": 1, "crown": 2, "slant": 3}
    return edges, roles


def _pant_leg(gap: float, waist_panel: float, hip: float, hip_frac: float,
              knee: float, knee_frac: float, cuff: float, inseam: float,
              rise: float, waist_dip: float, cuff_curve: float,
              crotch_curve: float) -> Tuple[Tuple[Edge, ...], Dict[str, int]]:
    """Left front leg panel.  The inner seam runs up x = -gap; the
    other three legs are mirrors or back placements of this one."""
    top = inseam + rise
    edges = (
        Edge((-gap - cuff, 0.0),
             QuadBezier((-gap - cuff / 2.0, -2.0 * cuff_curve))),   # cuff
        Edge((-gap, 0.0), Line()),                                   # inseam
        Edge((-gap, inseam),
             QuadBezier((-gap - crotch_curve, inseam + 0.3 * rise))),  # crotch
        Edge((-gap, top),
             QuadBezier((-gap - waist_panel / 2.0, top - 2.0 * waist_dip))),  # waist
        Edge((-gap - waist_panel, top),
             CubicBezier((-gap - hip, inseam + hip_frac * rise),
                         (-gap - knee, knee_frac * inseam))),        # outseam
    )
    roles = {"cuff": 0, "inseam": 1, "crotch": 2, "waist": 3, "outseam": 4}
    return edges, roles


# ---------------------------------------------------------------------------
# Template decoders


def _vals(spec: ParamSpec, raw: Sequence) -> Dict[str, object]:
    return {p.name: raw[i] for i, p in enumerate(spec.params)}


def _armhole_span(bust_width: float, shoulder_width: float,
                  armhole_depth: float) -> float:
    return math.hypot((bust_width - shoulder_width) / 2.0, armhole_depth)


def _sleeve_placements(shoulder_width: float, dy: float, cap_top: float
                       ) -> Tuple[Placement, Placement]:
    """Placements putting each sleeve's cap peak just outside the
    shoulder tip, tilted away from the body."""
    tilt = math.radians(_SLEEVE_TILT_DEG)
    tip_y = _NECK_BASE_Y - dy
    tip_x = shoulder_width / 2.0 + _SLEEVE_GAP
    sin_t, cos_t = math.sin(tilt), math.cos(tilt)
    right = Placement(
        (tip_x + cap_top * sin_t, tip_y - cap_top * cos_t, _SLEEVE_Z),
        _rot_z(_SLEEVE_TILT_DEG),
    )
    left = Placement(
        (-tip_x - cap_top * sin_t, tip_y - cap_top * cos_t, _SLEEVE_Z),
        _rot_z(-_SLEEVE_TILT_DEG),
    )
    return left, right


def _decode_upper(raw: Sequence) -> Pattern:
    v = _vals(UPPER_SPEC, raw)
    neckline = ("v", "round", "square")[int(v["neckline"])]
    height = float(v["torso_length"])
    body_t = (0.0, _NECK_BASE_Y - height, 0.0)

    f_edges, f_roles = _bodice(
        v["neck_width"], v["neck_depth"], v["shoulder_width"], v["bust_width"],
        v["hem_width"], height, v["armhole_depth"],
        _UPPER_SHOULDER_SLOPE_DEG, neckline)
    b_edges, b_roles = _bodice(
        v["neck_width"], v["neck_depth"], v["shoulder_width"], v["bust_width"],
        v["hem_width"], height, v["armhole_depth"],
        _UPPER_SHOULDER_SLOPE_DEG, "back")

    panels = [
        Panel("front", f_edges,
              Placement((body_t[0], body_t[1], _FRONT_Z), _IDENT_ROT)),
        Panel("back", b_edges,
              Placement((body_t[0], body_t[1], _BACK_Z), _BACK_ROT)),
    ]
    stitches = [
        Stitch(("front", f_roles["side_r"]), ("back", b_roles["side_l"]), True),
        Stitch(("front", f_roles["side_l"]), ("back", b_roles["side_r"]), True),
        Stitch(("front", f_roles["shoulder_r"]), ("back", b_roles["shoulder_l"]), True),
        Stitch(("front", f_roles["shoulder_l"]), ("back", b_roles["shoulder_r"]), True),
    ]

    if int(v["sleeves"]) == 1:
        arm_len = _armhole_span(v["bust_width"], v["shoulder_width"],
                                v["armhole_depth"])
        bicep = 0.9 * arm_len
        s_edges, s_roles = _sleeve(v["sleeve_length"], v["cuff_width"],
                                   bicep, arm_len)
        dy = math.tan(math.radians(_UPPER_SHOULDER_SLOPE_DEG)) \
            * (v["shoulder_width"] - v["neck_width"]) / 2.0
        cap_top = v["sleeve_length"] + math.sqrt(arm_len ** 2 - (bicep / 2.0) ** 2)
        left_pl, right_pl = _sleeve_placements(v["shoulder_width"], dy, cap_top)
        panels.append(Panel("sleeve_l", s_edges, left_pl))
        panels.append(Panel("sleeve_r", s_edges, right_pl))
        stitches += [
            Stitch(("sleeve_r", s_roles["cap_r"]), ("front", f_roles["armhole_r"])),
            Stitch(("sleeve_r", s_roles["cap_l"]), ("back", b_roles["armhole_l"])),
            Stitch(("sleeve_l", s_roles["cap_l"]), ("front", f_roles["armhole_l"])),
            Stitch(("sleeve_l", s_roles["cap_r"]), ("back", b_roles["armhole_r"])),
        ]

    if int(v["hood"]) == 1:
        half = math.hypot(v["neck_width"] / 2.0, _BACK_NECK_DEPTH)
        h_edges, h_roles = _hood(v["hood_height"], v["hood_depth"], half)
        hr_edges = _mirror_loop(h_edges)
        nh = len(h_edges)
        hood_pl = Placement((0.0, _NECK_BASE_Y + 0.5, _HOOD_Z), _IDENT_ROT)
        panels.append(Panel("hood_l", h_edges, hood_pl))
        panels.append(Panel("hood_r", hr_edges, hood_pl))
        mirrored = {k: nh - 1 - i for k, i in h_roles.items()}
        stitches += [
            Stitch(("hood_l", h_roles["centre"]), ("hood_r", mirrored["centre"]), True),
            Stitch(("hood_l", h_roles["bottom"]), ("back", b_roles["neck_r"])),
            Stitch(("hood_r", mirrored["bottom"]), ("back", b_roles["neck_l"])),
        ]

    return Pattern(tuple(panels), tuple(stitches))


def _decode_dress(raw: Sequence) -> Pattern:
    v = _vals(DRESS_SPEC, raw)
    neckline = ("v", "round", "square")[int(v["neckline"])]
    height = float(v["bodice_length"])
    waist_y = _NECK_BASE_Y - height

    f_edges, f_roles = _bodice(
        v["neck_width"], v["neck_depth"], v["shoulder_width"], v["bust_width"],
        v["waist_width"], height, v["armhole_depth"],
        v["shoulder_slope"], neckline)
    b_edges, b_roles = _bodice(
        v["neck_width"], v["neck_depth"], v["shoulder_width"], v["bust_width"],
        v["waist_width"], height, v["armhole_depth"],
        v["shoulder_slope"], "back")
    s_edges, s_roles = _skirt(v["waist_width"], v["skirt_length"],
                              v["skirt_flare"], v["hem_curve"])

    panels = [
        Panel("front", f_edges, Placement((0.0, waist_y, _FRONT_Z), _IDENT_ROT)),
        Panel("back", b_edges, Placement((0.0, waist_y, _BACK_Z), _BACK_ROT)),
        Panel("skirt_front", s_edges,
              Placement((0.0, waist_y, _FRONT_Z), _IDENT_ROT)),
        Panel("skirt_back", s_edges,
              Placement((0.0, waist_y, _BACK_Z), _BACK_ROT)),
    ]
    stitches = [
        Stitch(("front", f_roles["side_r"]), ("back", b_roles["side_l"]), True),
        Stitch(("front", f_roles["side_l"]), ("back", b_roles["side_r"]), True),
        Stitch(("front", f_roles["shoulder_r"]), ("back", b_roles["shoulder_l"]), True),
        Stitch(("front", f_roles["shoulder_l"]), ("back", b_roles["shoulder_r"]), True),
        Stitch(("front", f_roles["hem"]), ("skirt_front", s_roles["waist"]), True),
        Stitch(("back", b_roles["hem"]), ("skirt_back", s_roles["waist"]), True),
        Stitch(("skirt_front", s_roles["side_l"]), ("skirt_back", s_roles["side_r"]), True),
        Stitch(("skirt_front", s_roles["side_r"]), ("skirt_back", s_roles["side_l"]), True),
    ]

    if int(v["sleeves"]) == 1:
        arm_len = _armhole_span(v["bust_width"], v["shoulder_width"],
                                v["armhole_depth"])
        sl_edges, sl_roles = _sleeve(v["sleeve_length"], v["sleeve_cuff"],
                                     v["sleeve_bicep"], arm_len)
        dy = math.tan(math.radians(v["shoulder_slope"])) \
            * (v["shoulder_width"] - v["neck_width"]) / 2.0
        cap_top = v["sleeve_length"] \
            + math.sqrt(arm_len ** 2 - (v["sleeve_bicep"] / 2.0) ** 2)
        left_pl, right_pl = _sleeve_placements(v["shoulder_width"], dy, cap_top)
        panels.append(Panel("sleeve_l", sl_edges, left_pl))
        panels.append(Panel("sleeve_r", sl_edges, right_pl))
        stitches += [
            Stitch(("sleeve_r", sl_roles["cap_r"]), ("front", f_roles["armhole_r"])),
            Stitch(("sleeve_r", sl_roles["cap_l"]), ("back", b_roles["armhole_l"])),
            Stitch(("sleeve_l", sl_roles["cap_l"]), ("front", f_roles["armhole_l"])),
            Stitch(("sleeve_l", sl_roles["cap_r"]), ("back", b_roles["armhole_r"])),
        ]

    return Pattern(tuple(panels), tuple(stitches))


def _decode_pants(raw: Sequence) -> Pattern:
    v = _vals(PANTS_SPEC, raw)
    gap = float(v["leg_gap"])
    waist_panel = (float(v["waist_width"]) - 2.0 * gap) / 2.0
    fl_edges, roles = _pant_leg(
        gap, waist_panel, v["hip_width"], v["hip_height"], v["knee_width"],
        v["knee_height"], v["cuff_width"], v["inseam_length"], v["rise_height"],
        v["waist_dip"], v["cuff_curve"], v["crotch_curve"])
    fr_edges = _mirror_loop(fl_edges)
    n = len(fl_edges)
    mir = {k: n - 1 - i for k, i in roles.items()}

    top = float(v["inseam_length"]) + float(v["rise_height"])
    front_pl = Placement((0.0, _WAIST_Y - top, _FRONT_Z), _IDENT_ROT)
    back_pl = Placement((0.0, _WAIST_Y - top, _BACK_Z), _BACK_ROT)

    # Back-left worn is the mirrored loop seen through the half-turn.
    panels = (
        Panel("front_l", fl_edges, front_pl),
        Panel("front_r", fr_edges, front_pl),
        Panel("back_l", fr_edges, back_pl),
        Panel("back_r", fl_edges, back_pl),
    )
    stitches = (
        Stitch(("front_l", roles["outseam"]), ("back_l", mir["outseam"]), True),
        Stitch(("front_r", mir["outseam"]), ("back_r", roles["outseam"]), True),
        Stitch(("front_l", roles["inseam"]), ("back_l", mir["inseam"]), True),
        Stitch(("front_r", mir["inseam"]), ("back_r", roles["inseam"]), True),
        Stitch(("front_l", roles["crotch"]), ("front_r", mir["crotch"]), True),
        Stitch(("back_l", mir["crotch"]), ("back_r", roles["crotch"]), True),
    )
    return Pattern(panels, stitches)


# ---------------------------------------------------------------------------
# Registry and public API


@dataclass(frozen=True)
class Template:
    name: str
    template_id: int
    spec: ParamSpec
    decoder: Callable[[Sequence], Pattern]


TEMPLATES: Dict[str, Template] = {
    t.name: t
    for t in (
        Template("upper_garment", 0, UPPER_SPEC, _decode_upper),
        Template("dress", 1, DRESS_SPEC, _decode_dress),
        Template("pants", 2, PANTS_SPEC, _decode_pants),
    )
}


def template_names() -> Tuple[str, ...]:
    return tuple(TEMPLATES)


def get_template(name: str) -> Template:
    try:
        return TEMPLATES[name]
    except KeyError:
        raise UnknownTemplate(name, tuple(TEMPLATES)) from None


def template_by_id(template_id: int) -> Template:
    for t in TEMPLATES.values():
        if t.template_id == template_id:
            return t
    raise UnknownTemplate(str(template_id), tuple(TEMPLATES))


def decode(template: str, raw: Sequence) -> Pattern:
    """Decode a raw parameter vector into a sewing pattern.

    Out-of-bounds values are clamped to the template's ranges and a
    Warning is emitted naming the offending parameters.
    """
    t = get_template(template)
    clamped, changed = clamp_raw(t.spec, raw)
    if changed:
        names = ", ".join(t.spec.params[i].name for i in changed)
        warnings.warn(
            f"{template}: clamped out-of-range parameter(s) {names}",
            UserWarning,
            stacklevel=2,
        )
    return t.decoder(clamped)


def describe_edit(template: str, old_raw: Sequence, new_raw: Sequence) -> List[str]:
    """Human-readable per-parameter differences, one line per change."""
    t = get_template(template)
    if len(old_raw) != len(t.spec) or len(new_raw) != len(t.spec):
        raise ValueError(
            f"expected {len(t.spec)} parameters for {template!r}")
    lines = []
    for i, p in enumerate(t.spec.params):
        before, after = label_raw(t.spec, old_raw, i), label_raw(t.spec, new_raw, i)
        if before != after:
            lines.append(f"{p.name}: {before} → {after}")
    return lines

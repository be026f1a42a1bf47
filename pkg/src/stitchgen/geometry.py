"""Planar edge primitives for sewing-pattern panels.

A panel boundary is a closed loop of typed edges. Each edge stores its start
point and curve data only; the end point is the next edge's start, so the
loop is closed by construction. Four curve kinds are supported:

* ``Line``          straight segment
* ``QuadBezier``    one control point
* ``Arc``           circular arc through the two endpoints, selected by
                    radius plus two flags (restriction of the SVG
                    elliptical-arc flags to circles)
* ``CubicBezier``   two control points

Arc flag semantics, in panel coordinates (x right, y up):

* ``large``      sweep angle exceeds 180 degrees
* ``direction``  True sweeps counter-clockwise (positive angle), False
                 clockwise

All coordinates are centimeters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import InfeasibleArc

Point = tuple[float, float]

# Feasibility slack: radius may undershoot half the chord by this relative
# amount before the arc is rejected, absorbing round-trip float noise.
_ARC_SLACK = 1e-9


@dataclass(frozen=True)
class Line:
    pass


@dataclass(frozen=True)
class QuadBezier:
    control: Point


@dataclass(frozen=True)
class Arc:
    radius: float
    large: bool
    direction: bool


@dataclass(frozen=True)
class CubicBezier:
    control1: Point
    control2: Point


EdgeKind = Union[Line, QuadBezier, Arc, CubicBezier]


@dataclass(frozen=True)
class Edge:
    start: Point
    kind: EdgeKind


def arc_center(start: Point, end: Point, kind: Arc) -> tuple[Point, float, float]:
    """Resolve an arc to (center, start_angle, signed_sweep).

    The sweep is positive for counter-clockwise arcs. Raises
    :class:`InfeasibleArc` when the radius cannot reach both endpoints.
    """
    ax, ay = start
    bx, by = end
    dx, dy = bx - ax, by - ay
    chord = math.hypot(dx, dy)
    r = float(kind.radius)
    if r <= 0.0 or chord == 0.0:
        raise InfeasibleArc(f"radius {r} with chord {chord}")
    half = chord / 2.0
    if r < half * (1.0 - _ARC_SLACK):
        raise InfeasibleArc(f"radius {r} < half chord {half}")
    # Center sits on the chord bisector; side depends on the two flags.
    h = math.sqrt(max(r * r - half * half, 0.0))
    mx, my = (ax + bx) / 2.0, (ay + by) / 2.0
    nx, ny = -dy / chord, dx / chord  # left normal of the chord
    if kind.direction == (not kind.large):
        cx, cy = mx + h * nx, my + h * ny
    else:
        cx, cy = mx - h * nx, my - h * ny
    a0 = math.atan2(ay - cy, ax - cx)
    a1 = math.atan2(by - cy, bx - cx)
    ccw = (a1 - a0) % (2.0 * math.pi)
    sweep = ccw if kind.direction else ccw - 2.0 * math.pi
    if sweep == 0.0:
        sweep = 2.0 * math.pi if kind.direction else -2.0 * math.pi
    return (cx, cy), a0, sweep


def eval_edge(edge: Edge, end: Point, t: float) -> Point:
    """Point on the edge at parameter ``t`` in [0, 1].

    ``t=0`` is the stored start, ``t=1`` the supplied end point.
    """
    x, y = _eval_many(edge, end, np.array([t], dtype=float)).reshape(2)
    return (float(x), float(y))


def _eval_many(edge: Edge, end: Point, ts: np.ndarray) -> np.ndarray:
    """Vectorized evaluation; returns an array of shape (len(ts), 2)."""
    ts = np.asarray(ts, dtype=float)
    p0 = np.array(edge.start, dtype=float)
    p1 = np.array(end, dtype=float)
    kind = edge.kind
    t = ts[:, None]
    if isinstance(kind, Line):
        return p0 + t * (p1 - p0)
    if isinstance(kind, QuadBezier):
        c = np.array(kind.control, dtype=float)
        u = 1.0 - t
        return u * u * p0 + 2.0 * u * t * c + t * t * p1
    if isinstance(kind, CubicBezier):
        c1 = np.array(kind.control1, dtype=float)
        c2 = np.array(kind.control2, dtype=float)
        u = 1.0 - t
        return (u ** 3 * p0 + 3.0 * u * u * t * c1
                + 3.0 * u * t * t * c2 + t ** 3 * p1)
    if isinstance(kind, Arc):
        (cx, cy), a0, sweep = arc_center(edge.start, end, kind)
        ang = a0 + sweep * ts
        return np.stack([cx + kind.radius * np.cos(ang),
                         cy + kind.radius * np.sin(ang)], axis=1)
    raise TypeError(f"unknown edge kind {kind!r}")


def edge_length(edge: Edge, end: Point, rel_tol: float = 1e-4) -> float:
    """Arc length of the edge, relative error at most ``rel_tol``.

    Adaptive bisection of evaluated samples: an interval is split until the
    two-segment estimate agrees with the one-segment chord, then the
    Richardson extrapolant of the pair is taken. Straight edges converge at
    the first probe, so lines come back exact.
    """
    # Rough scale from a fixed refinement so the absolute budget is sane
    # even for curves whose chord is tiny (near-closed arcs).
    probe = _eval_many(edge, end, np.linspace(0.0, 1.0, 17))
    rough = float(np.sum(np.linalg.norm(np.diff(probe, axis=0), axis=1)))
    if rough == 0.0:
        return 0.0
    budget = max(rough * rel_tol * 0.05, 1e-14)

    def recurse(t0: float, t1: float, p0: np.ndarray, p1: np.ndarray,
                tol: float, depth: int) -> float:
        tm = 0.5 * (t0 + t1)
        pm = _eval_many(edge, end, np.array([tm]))[0]
        one = float(np.linalg.norm(p1 - p0))
        two = float(np.linalg.norm(pm - p0) + np.linalg.norm(p1 - pm))
        if depth >= 30 or two - one <= tol:
            # Chord refinement halves h, quartering the error: extrapolate.
            return two + (two - one) / 3.0
        return (recurse(t0, tm, p0, pm, tol / 2.0, depth + 1)
                + recurse(tm, t1, pm, p1, tol / 2.0, depth + 1))

    total = 0.0
    for i in range(16):
        t0, t1 = i / 16.0, (i + 1) / 16.0
        total += recurse(t0, t1, probe[i], probe[i + 1], budget / 16.0, 0)
    return total


def reverse_edge(edge: Edge, end: Point) -> Edge:
    """The same curve traversed end-to-start (new start is the old end)."""
    kind = edge.kind
    if isinstance(kind, QuadBezier):
        new_kind: EdgeKind = kind
    elif isinstance(kind, CubicBezier):
        new_kind = CubicBezier(kind.control2, kind.control1)
    elif isinstance(kind, Arc):
        # Traversing backwards flips the sweep sign, not its magnitude.
        new_kind = Arc(kind.radius, kind.large, not kind.direction)
    else:
        new_kind = kind
    return Edge(start=end, kind=new_kind)


def mirror_edge_x(edge: Edge) -> Edge:
    """The curve reflected about the y axis, same traversal direction."""
    kind = edge.kind
    if isinstance(kind, QuadBezier):
        new_kind: EdgeKind = QuadBezier((-kind.control[0], kind.control[1]))
    elif isinstance(kind, CubicBezier):
        new_kind = CubicBezier((-kind.control1[0], kind.control1[1]),
                               (-kind.control2[0], kind.control2[1]))
    elif isinstance(kind, Arc):
        # Reflection reverses orientation.
        new_kind = Arc(kind.radius, kind.large, not kind.direction)
    else:
        new_kind = kind
    return Edge(start=(-edge.start[0], edge.start[1]), kind=new_kind)

"""Pattern containers: panels, stitches, 3D placements.

A ``Pattern`` is a set of panels plus stitches. Panels carry their boundary
loop in a local 2D frame together with a rigid placement (translation +
unit quaternion) that positions the flat piece in 3D for rendering and
draping. Stitches pair up whole edges one-to-one; ``reversed`` flips the
traversal correspondence of the pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .geometry import Edge, _eval_many

Vec3 = tuple[float, float, float]
Quat = tuple[float, float, float, float]  # (w, x, y, z)


@dataclass(frozen=True)
class Placement:
    translation: Vec3 = (0.0, 0.0, 0.0)
    quaternion: Quat = (1.0, 0.0, 0.0, 0.0)

    def rotation_matrix(self) -> np.ndarray:
        w, x, y, z = self.quaternion
        n = math.sqrt(w * w + x * x + y * y + z * z)
        if n == 0.0:
            raise ValueError("zero quaternion")
        w, x, y, z = w / n, x / n, y / n, z / n
        return np.array([
            [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
            [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
            [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
        ])

    def apply(self, uv: np.ndarray) -> np.ndarray:
        """Lift local 2D points (n, 2) into world 3D points (n, 3)."""
        pts = np.zeros((len(uv), 3))
        pts[:, :2] = uv
        return pts @ self.rotation_matrix().T + np.array(self.translation)

    def normal(self) -> np.ndarray:
        """World direction of the panel's local +z axis."""
        return self.rotation_matrix()[:, 2]


@dataclass(frozen=True)
class Panel:
    id: str
    edges: tuple[Edge, ...]
    placement: Placement = field(default_factory=Placement)

    def edge_end(self, i: int) -> tuple[float, float]:
        """End point of edge ``i`` (the next edge's start, cyclically)."""
        return self.edges[(i + 1) % len(self.edges)].start

    def edge_pairs(self) -> Iterator[tuple[Edge, tuple[float, float]]]:
        for i, e in enumerate(self.edges):
            yield e, self.edge_end(i)


@dataclass(frozen=True)
class Stitch:
    side_a: tuple[str, int]  # (panel id, edge index)
    side_b: tuple[str, int]
    reversed: bool = False


@dataclass(frozen=True)
class Pattern:
    panels: tuple[Panel, ...]
    stitches: tuple[Stitch, ...] = ()

    def panel(self, panel_id: str) -> Panel:
        for p in self.panels:
            if p.id == panel_id:
                return p
        raise KeyError(panel_id)


def panel_polyline(panel: Panel, samples_per_edge: int = 16) -> np.ndarray:
    """Closed boundary polyline, shape (n_edges * (samples - 1), 2).

    Each edge contributes ``samples_per_edge - 1`` points: its start plus
    the interior samples. The edge's end point is omitted because it is the
    next edge's start; the loop closes back to the first point implicitly.
    """
    if samples_per_edge < 2:
        raise ValueError("samples_per_edge must be at least 2")
    ts = np.arange(samples_per_edge - 1) / (samples_per_edge - 1)
    chunks = [_eval_many(e, end, ts) for e, end in panel.edge_pairs()]
    return np.concatenate(chunks, axis=0)

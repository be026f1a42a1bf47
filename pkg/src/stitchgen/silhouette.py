"""Orthographic front-view silhouette rendering.

A pattern is viewed along -z with y up. Panels whose placement rotation
sends the local +z normal to positive world z are front-facing and get
rasterised; everything else is culled, so a garment's back panels (which
are placed rotated half a turn about y) never occlude the neckline.

Rasterisation is an even-odd scanline fill of each panel's projected
boundary on a supersampled grid; the supersamples are box-averaged down
to the requested resolution, giving antialiased coverage in [0, 1].
Optional speckle noise flips a pixel's value v to 1 - v with a fixed
probability per pixel.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import BinaryIO, Tuple, Union

import numpy as np
from PIL import Image

from .pattern import Pattern, panel_polyline

RENDER_SAMPLES_PER_EDGE = 64
MAX_NOISE = 0.05


@dataclass(frozen=True)
class Viewport:
    """Square world window: centre in cm and full side length in cm."""

    center: Tuple[float, float]
    size: float


# Frames every garment this package can decode, with margin.
DEFAULT_VIEWPORT = Viewport((0.0, 83.0), 194.0)


def _fill_even_odd(poly: np.ndarray, xs: np.ndarray, ys: np.ndarray,
                   out: np.ndarray) -> None:
    """OR an even-odd fill of the closed polygon into ``out``.

    xs are sample-centre x coordinates (ascending), ys are row centre
    y coordinates, out is (len(ys), len(xs)) bool.
    """
    x1, y1 = poly[:, 0], poly[:, 1]
    x2, y2 = np.roll(x1, -1), np.roll(y1, -1)
    keep = y1 != y2
    x1, y1, x2, y2 = x1[keep], y1[keep], x2[keep], y2[keep]
    if len(x1) == 0:
        return
    for i, y in enumerate(ys):
        # Half-open in y so a crossing at a shared vertex counts once.
        hit = (y1 <= y) != (y2 <= y)
        if not np.any(hit):
            continue
        t = (y - y1[hit]) / (y2[hit] - y1[hit])
        xc = np.sort(x1[hit] + t * (x2[hit] - x1[hit]))
        # Parity of crossings strictly right of the sample centre.
        parity = (len(xc) - np.searchsorted(xc, xs, side="right")) % 2
        np.logical_or(out[i], parity.astype(bool), out=out[i])


def render_silhouette(pattern: Pattern, resolution: int = 64, *,
                      viewport: Viewport = DEFAULT_VIEWPORT,
                      supersample: int = 8, noise: float = 0.0,
                      seed: Union[int, None] = None) -> np.ndarray:
    """Render the front view to a (resolution, resolution) coverage image.

    Row 0 is the top of the view. noise in [0, 0.05] is the per-pixel
    flip probability, applied after downsampling.
    """
    if not 0.0 <= noise <= MAX_NOISE:
        raise ValueError(f"noise must be within [0, {MAX_NOISE}], got {noise}")
    if resolution < 1 or supersample < 1:
        raise ValueError("resolution and supersample must be positive")

    n = resolution * supersample
    half = viewport.size / 2.0
    cx, cy = viewport.center
    step = viewport.size / n
    xs = cx - half + (np.arange(n) + 0.5) * step
    ys = cy + half - (np.arange(n) + 0.5) * step

    covered = np.zeros((n, n), dtype=bool)
    for panel in pattern.panels:
        if panel.placement.normal()[2] <= 0.0:
            continue
        uv = panel_polyline(panel, RENDER_SAMPLES_PER_EDGE)
        world = panel.placement.apply(uv)
        _fill_even_odd(world[:, :2], xs, ys, covered)

    img = covered.astype(np.float64)
    img = img.reshape(resolution, supersample, resolution, supersample)
    img = img.mean(axis=(1, 3))

    if noise > 0.0:
        rng = np.random.default_rng(seed)
        flip = rng.random(img.shape) < noise
        img = np.where(flip, 1.0 - img, img)
    return img


def patchify(img: np.ndarray, patch: int = 8) -> np.ndarray:
    """Split an (H, W) image into row-major (n_tokens, patch*patch) rows."""
    h, w = img.shape
    if h % patch or w % patch:
        raise ValueError(f"image {img.shape} not divisible into {patch}x{patch} patches")
    gh, gw = h // patch, w // patch
    tiles = img.reshape(gh, patch, gw, patch).transpose(0, 2, 1, 3)
    return tiles.reshape(gh * gw, patch * patch)


def unpatchify(tokens: np.ndarray, patch: int = 8) -> np.ndarray:
    """Inverse of :func:`patchify` for square images."""
    n_tokens, dim = tokens.shape
    if dim != patch * patch:
        raise ValueError(f"token dim {dim} does not match patch {patch}")
    g = int(round(np.sqrt(n_tokens)))
    if g * g != n_tokens:
        raise ValueError(f"token count {n_tokens} is not a square grid")
    tiles = tokens.reshape(g, g, patch, patch).transpose(0, 2, 1, 3)
    return tiles.reshape(g * patch, g * patch)


def silhouette_to_png(img: np.ndarray, dest: Union[str, BinaryIO]) -> None:
    """Write a coverage image as 8-bit grayscale PNG."""
    arr = np.clip(np.round(img * 255.0), 0, 255).astype(np.uint8)
    Image.fromarray(arr, mode="L").save(dest, format="PNG")


def silhouette_from_png(src: Union[str, bytes, BinaryIO]) -> np.ndarray:
    """Read an 8-bit grayscale PNG back to float coverage in [0, 1]."""
    if isinstance(src, bytes):
        src = io.BytesIO(src)
    with Image.open(src) as im:
        arr = np.asarray(im.convert("L"), dtype=np.float64)
    return arr / 255.0

"""Rasterize embedded division sets to binary PGM (P5) images, or emit SVG.

Points are embedded isometrically, then the bounding box is scaled
uniformly (aspect ratio kept) and centred in the viewport left after the
margin.  Pixel indices are taken with ``floor`` and clipped to the image,
so the output is a pure function of the input and byte-for-byte stable.
Sets with more than three players are drawn as the orthographic projection
onto the first two embedded axes; two-player sets are drawn on the
horizontal midline.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .embedding import embed_array
from .enumeration import DivisionSet
from .errors import DomainError

MODES = ("binary", "multiplicity")


@dataclass(frozen=True)
class RenderSpec:
    width: int = 512
    height: int = 512
    margin: float = 0.05
    mode: str = "binary"

    def __post_init__(self):
        if self.width < 16 or self.height < 16:
            raise DomainError(f"image must be at least 16x16, got {self.width}x{self.height}")
        if not 0 <= self.margin <= 0.45:
            raise DomainError(f"margin must lie in [0, 0.45], got {self.margin}")
        if self.mode not in MODES:
            raise DomainError(f"mode must be one of {MODES}, got {self.mode!r}")

    @classmethod
    def from_size(cls, size: str, **kwargs) -> "RenderSpec":
        """Parse ``"WxH"``."""
        w, sep, h = size.lower().partition("x")
        if not sep:
            raise DomainError(f"size must be WxH, got {size!r}")
        try:
            return cls(int(w), int(h), **kwargs)
        except ValueError:
            raise DomainError(f"size must be WxH, got {size!r}") from None


def plane_coordinates(divisions: DivisionSet) -> np.ndarray:
    """``(n, 2)`` drawing coordinates of the embedded points."""
    if len(divisions) == 0:
        raise DomainError("nothing to render: the set has no points")
    if divisions.players < 2:
        raise DomainError("a one-player division set has no geometry to render")
    coords = embed_array(divisions.points)
    if coords.shape[1] == 1:
        return np.column_stack([coords[:, 0], np.zeros(coords.shape[0])])
    return coords[:, :2]


def pixel_indices(xy: np.ndarray, spec: RenderSpec) -> tuple[np.ndarray, np.ndarray]:
    """Row and column of each point; row 0 is the top of the image."""
    lo = xy.min(axis=0)
    extent = xy.max(axis=0) - lo
    inner_w = spec.width * (1 - 2 * spec.margin)
    inner_h = spec.height * (1 - 2 * spec.margin)
    scales = [inner_w / extent[0] if extent[0] > 0 else np.inf,
              inner_h / extent[1] if extent[1] > 0 else np.inf]
    scale = min(scales)
    if not np.isfinite(scale):
        scale = 0.0
    x0 = (spec.width - extent[0] * scale) / 2
    y0 = (spec.height - extent[1] * scale) / 2
    cols = np.floor(x0 + (xy[:, 0] - lo[0]) * scale).astype(np.int64)
    rows = np.floor(y0 + (lo[1] + extent[1] - xy[:, 1]) * scale).astype(np.int64)
    return np.clip(rows, 0, spec.height - 1), np.clip(cols, 0, spec.width - 1)


def rasterize(divisions: DivisionSet, spec: RenderSpec) -> np.ndarray:
    """Grayscale image as a ``(height, width)`` uint8 array.

    Binary mode lights occupied pixels at 255.  Multiplicity mode maps
    multiplicity ``k`` to ``max(1, 255 * k // max_k)``; a pixel shared by
    several points shows the largest value.
    """
    rows, cols = pixel_indices(plane_coordinates(divisions), spec)
    img = np.zeros((spec.height, spec.width), dtype=np.uint8)
    if spec.mode == "binary":
        img[rows, cols] = 255
    else:
        mult = divisions.multiplicities
        levels = np.maximum(1, (255 * mult) // mult.max()).astype(np.uint8)
        np.maximum.at(img, (rows, cols), levels)
    return img


def encode_pgm(image: np.ndarray) -> bytes:
    if image.dtype != np.uint8 or image.ndim != 2:
        raise DomainError("PGM encoding needs a 2-D uint8 array")
    h, w = image.shape
    return f"P5\n{w} {h}\n255\n".encode("ascii") + image.tobytes()


def decode_pgm(data: bytes) -> np.ndarray:
    """Inverse of :func:`encode_pgm` for the exact header it writes."""
    parts = data.split(b"\n", 3)
    if len(parts) != 4 or parts[0] != b"P5" or parts[2] != b"255":
        raise DomainError("not a P5 PGM with maxval 255")
    w, h = (int(v) for v in parts[1].split())
    pixels = np.frombuffer(parts[3], dtype=np.uint8)
    if pixels.size != w * h:
        raise DomainError("PGM payload size does not match its header")
    return pixels.reshape(h, w)


def render_pgm(divisions: DivisionSet, spec: RenderSpec) -> bytes:
    return encode_pgm(rasterize(divisions, spec))


def render_svg(divisions: DivisionSet, spec: RenderSpec, radius: float = 1.0) -> str:
    """SVG 1.1 scatter with one circle per point, positioned like the PGM pixels."""
    xy = plane_coordinates(divisions)
    rows, cols = pixel_indices(xy, spec)
    mult = divisions.multiplicities
    top = int(mult.max())
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">',
        f'<rect width="{spec.width}" height="{spec.height}" fill="black"/>',
    ]
    for r, c, k in zip(rows.tolist(), cols.tolist(), mult.tolist()):
        level = 255 if spec.mode == "binary" else max(1, 255 * k // top)
        out.append(
            f'<circle cx="{c + 0.5:.1f}" cy="{r + 0.5:.1f}" r="{radius:g}" '
            f'fill="rgb({level},{level},{level})"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_image(divisions: DivisionSet, spec: RenderSpec, path: str | os.PathLike) -> None:
    """Write PGM, or SVG when ``path`` ends in ``.svg``."""
    path = Path(path)
    if path.suffix.lower() == ".svg":
        path.write_bytes(render_svg(divisions, spec).encode("utf-8"))
    else:
        path.write_bytes(render_pgm(divisions, spec))

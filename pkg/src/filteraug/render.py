"""Deterministic PNG rendering of spectrograms and filter curves.

PNGs are written directly (stdlib zlib, filter-0 scanlines) so the same input
always produces byte-identical files, which matplotlib and friends do not
guarantee.
"""

from __future__ import annotations

import struct
import zlib
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .augment import FilterCurve
from .spectro import LogMelSpectrogram

_PNG_SIGNATURE = b"\x89PNG\r\n\x1a\n"

# sampled anchors expanded to a fixed 256-entry lookup table
_VIRIDIS_ANCHORS = np.array(
    [
        (68, 1, 84),
        (72, 40, 120),
        (62, 74, 137),
        (49, 104, 142),
        (38, 130, 142),
        (31, 158, 137),
        (53, 183, 121),
        (109, 205, 89),
        (180, 222, 44),
        (253, 231, 37),
    ],
    dtype=np.float64,
)


def _expand_table(anchors: np.ndarray) -> np.ndarray:
    x = np.linspace(0.0, 1.0, len(anchors))
    xi = np.linspace(0.0, 1.0, 256)
    channels = [np.interp(xi, x, anchors[:, c]) for c in range(3)]
    return np.rint(np.stack(channels, axis=1)).astype(np.uint8)


VIRIDIS_TABLE = _expand_table(_VIRIDIS_ANCHORS)

COLORMAPS = ("grayscale", "viridis")


@dataclass(frozen=True)
class RenderSpec:
    """How to map dB values to pixels."""

    colormap: str = "grayscale"
    db_display_range: tuple[float, float] = (-80.0, 0.0)

    def __post_init__(self) -> None:
        if self.colormap not in COLORMAPS:
            raise ValueError(f"colormap must be one of {COLORMAPS}, got {self.colormap!r}")
        lo, hi = self.db_display_range
        if not lo < hi:
            raise ValueError(f"db_display_range must satisfy lo < hi, got {self.db_display_range}")


def _png_chunk(tag: bytes, body: bytes) -> bytes:
    return (
        struct.pack(">I", len(body))
        + tag
        + body
        + struct.pack(">I", zlib.crc32(tag + body) & 0xFFFFFFFF)
    )


def write_png(pixels: np.ndarray, path: str | Path) -> None:
    """Write an 8-bit PNG from (H, W) grayscale or (H, W, 3) RGB pixels."""
    pixels = np.ascontiguousarray(pixels, dtype=np.uint8)
    if pixels.ndim == 2:
        color_type = 0
    elif pixels.ndim == 3 and pixels.shape[2] == 3:
        color_type = 2
    else:
        raise ValueError(f"expected (H, W) or (H, W, 3) uint8 pixels, got shape {pixels.shape}")
    height, width = pixels.shape[:2]
    raw = b"".join(b"\x00" + pixels[row].tobytes() for row in range(height))
    ihdr = struct.pack(">IIBBBBB", width, height, 8, color_type, 0, 0, 0)
    out = (
        _PNG_SIGNATURE
        + _png_chunk(b"IHDR", ihdr)
        + _png_chunk(b"IDAT", zlib.compress(raw, 9))
        + _png_chunk(b"IEND", b"")
    )
    Path(path).write_bytes(out)


def render_spectrogram(
    spec: LogMelSpectrogram, render: RenderSpec = RenderSpec(), path: str | Path = "spectrogram.png"
) -> None:
    """Render a spectrogram as an n_frames x n_mels image.

    Pixel (x=t, y=n_mels-1-f) gets intensity clamp((value - lo) / (hi - lo)),
    putting low frequencies at the bottom.
    """
    lo, hi = render.db_display_range
    norm = np.clip((spec.values - lo) / (hi - lo), 0.0, 1.0)
    levels = np.rint(norm * 255.0).astype(np.uint8)
    image = levels.T[::-1]
    if render.colormap == "viridis":
        image = VIRIDIS_TABLE[image]
    write_png(image, path)


def render_curve(
    curve: FilterCurve | np.ndarray,
    path: str | Path,
    height: int = 200,
    value_range: tuple[float, float] | None = None,
) -> None:
    """Render a curve as a line plot of weight (y) against mel bin (x).

    One pixel column per bin; consecutive samples are joined by vertical
    strokes, so a step discontinuity shows as a single tall column.
    """
    weights = curve.weights_db if isinstance(curve, FilterCurve) else np.asarray(curve, dtype=np.float64)
    if weights.ndim != 1 or len(weights) < 1:
        raise ValueError("curve must be a non-empty vector")
    if height < 2:
        raise ValueError(f"height must be >= 2, got {height}")
    if value_range is None:
        value_range = (float(weights.min()) - 1.0, float(weights.max()) + 1.0)
    lo, hi = value_range
    if not lo < hi:
        raise ValueError(f"value_range must satisfy lo < hi, got {value_range}")

    y = np.rint((hi - weights) / (hi - lo) * (height - 1)).astype(np.int64)
    y = np.clip(y, 0, height - 1)
    image = np.full((height, len(weights)), 255, dtype=np.uint8)
    image[y[0], 0] = 0
    for x in range(1, len(weights)):
        y_lo, y_hi = sorted((y[x - 1], y[x]))
        image[y_lo : y_hi + 1, x] = 0
    write_png(image, path)

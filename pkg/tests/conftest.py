"""Shared test helpers: WAV byte builders, a PNG reader, spectrogram factories."""

from __future__ import annotations

import struct
import zlib
from pathlib import Path

import numpy as np
import pytest

from filteraug.spectro import LogMelSpectrogram


def build_wav_bytes(
    payload: bytes,
    *,
    fmt_tag: int = 1,
    channels: int = 1,
    sample_rate: int = 16000,
    bits: int = 16,
    extra_chunks: list[tuple[bytes, bytes]] | None = None,
) -> bytes:
    """Assemble a RIFF/WAVE file around a raw sample payload."""
    block_align = channels * bits // 8
    fmt = b"fmt " + struct.pack(
        "<IHHIIHH", 16, fmt_tag, channels, sample_rate, sample_rate * block_align, block_align, bits
    )
    body = fmt
    for chunk_id, chunk_body in extra_chunks or []:
        body += chunk_id + struct.pack("<I", len(chunk_body)) + chunk_body
        if len(chunk_body) % 2:
            body += b"\x00"
    body += b"data" + struct.pack("<I", len(payload)) + payload
    return b"RIFF" + struct.pack("<I", 4 + len(body)) + b"WAVE" + body


def write_pcm16_wav(path: Path, samples: np.ndarray, sample_rate: int = 16000) -> Path:
    ints = np.clip(np.asarray(samples) * 32767.0, -32768, 32767).astype("<i2")
    path.write_bytes(build_wav_bytes(ints.tobytes(), sample_rate=sample_rate))
    return path


def read_png(path: Path) -> np.ndarray:
    """Decode a PNG written by this package (8-bit, filter 0 rows only)."""
    data = Path(path).read_bytes()
    assert data[:8] == b"\x89PNG\r\n\x1a\n"
    pos = 8
    idat = b""
    width = height = color_type = None
    while pos < len(data):
        (length,) = struct.unpack_from(">I", data, pos)
        tag = data[pos + 4 : pos + 8]
        body = data[pos + 8 : pos + 8 + length]
        if tag == b"IHDR":
            width, height, depth, color_type, *_ = struct.unpack(">IIBBBBB", body)
            assert depth == 8
        elif tag == b"IDAT":
            idat += body
        pos += 12 + length
    raw = zlib.decompress(idat)
    n_channels = 3 if color_type == 2 else 1
    stride = width * n_channels
    rows = []
    for y in range(height):
        offset = y * (stride + 1)
        assert raw[offset] == 0, "reader only handles filter-0 scanlines"
        rows.append(np.frombuffer(raw[offset + 1 : offset + 1 + stride], dtype=np.uint8))
    image = np.stack(rows)
    return image if n_channels == 1 else image.reshape(height, width, 3)


def random_spectrogram(
    rng: np.random.Generator,
    n_frames: int = 8,
    n_mels: int = 16,
    low: float = -80.0,
    high: float = 0.0,
    dtype=np.float64,
) -> LogMelSpectrogram:
    values = rng.uniform(low, high, size=(n_frames, n_mels)).astype(dtype)
    return LogMelSpectrogram(values, sample_rate=16000, hop_length=256)


@pytest.fixture
def spec8x16() -> LogMelSpectrogram:
    return random_spectrogram(np.random.Generator(np.random.PCG64(1234)))

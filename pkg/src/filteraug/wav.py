"""Minimal RIFF/WAVE reader.

Supports little-endian PCM at 16, 24 and 32 bits plus 32-bit IEEE float,
including the WAVE_FORMAT_EXTENSIBLE wrappers of both. Integer samples are
scaled to [-1, 1] by dividing by 2^(bits-1); multi-channel audio is downmixed
to mono by the per-sample channel mean.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .spectro import Waveform

_FORMAT_PCM = 0x0001
_FORMAT_IEEE_FLOAT = 0x0003
_FORMAT_EXTENSIBLE = 0xFFFE


class WavFormatError(ValueError):
    """Raised when a file is not a WAV we can decode."""


def _chunks(data: bytes):
    pos = 12
    while pos + 8 <= len(data):
        chunk_id, size = struct.unpack_from("<4sI", data, pos)
        body = data[pos + 8 : pos + 8 + size]
        if len(body) < size:
            raise WavFormatError(f"chunk {chunk_id!r} truncated")
        yield chunk_id, body
        pos += 8 + size + (size & 1)  # chunks are word-aligned


def _decode(data: bytes, audio_format: int, bits: int) -> np.ndarray:
    if audio_format == _FORMAT_IEEE_FLOAT:
        if bits != 32:
            raise WavFormatError(f"unsupported float bit depth {bits}")
        return np.frombuffer(data, dtype="<f4").astype(np.float64)
    if audio_format != _FORMAT_PCM:
        raise WavFormatError(f"unsupported WAV format tag 0x{audio_format:04X}")
    if bits == 16:
        return np.frombuffer(data, dtype="<i2").astype(np.float64) / 2**15
    if bits == 24:
        raw = np.frombuffer(data, dtype=np.uint8)
        if len(raw) % 3:
            raise WavFormatError("24-bit data size is not a multiple of 3")
        triples = raw.reshape(-1, 3).astype(np.int32)
        vals = triples[:, 0] | (triples[:, 1] << 8) | (triples[:, 2] << 16)
        vals = np.where(vals & 0x800000, vals - 0x1000000, vals)
        return vals.astype(np.float64) / 2**23
    if bits == 32:
        return np.frombuffer(data, dtype="<i4").astype(np.float64) / 2**31
    raise WavFormatError(f"unsupported PCM bit depth {bits}")


def read_wav(path: str | Path) -> Waveform:
    """Read a WAV file into a mono waveform.

    Raises:
        WavFormatError: if the file is not RIFF/WAVE or uses an unsupported
            encoding.
    """
    data = Path(path).read_bytes()
    if len(data) < 12 or data[:4] != b"RIFF" or data[8:12] != b"WAVE":
        raise WavFormatError(f"{path}: not a RIFF/WAVE file")

    fmt = None
    payload = None
    for chunk_id, body in _chunks(data):
        if chunk_id == b"fmt ":
            fmt = body
        elif chunk_id == b"data":
            payload = body
    if fmt is None or len(fmt) < 16:
        raise WavFormatError(f"{path}: missing or short fmt chunk")
    if payload is None:
        raise WavFormatError(f"{path}: missing data chunk")

    audio_format, channels, sample_rate, _, _, bits = struct.unpack_from("<HHIIHH", fmt, 0)
    if audio_format == _FORMAT_EXTENSIBLE:
        if len(fmt) < 26:
            raise WavFormatError(f"{path}: extensible fmt chunk too short")
        audio_format = struct.unpack_from("<H", fmt, 24)[0]  # first 2 bytes of SubFormat GUID
    if channels < 1:
        raise WavFormatError(f"{path}: invalid channel count {channels}")

    samples = _decode(payload, audio_format, bits)
    if channels > 1:
        usable = (len(samples) // channels) * channels
        samples = samples[:usable].reshape(-1, channels).mean(axis=1)
    return Waveform(samples, sample_rate)

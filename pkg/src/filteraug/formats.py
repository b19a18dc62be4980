"""On-disk formats: the LMSP binary spectrogram container and curve CSV.

LMSP layout, all little-endian:

    bytes 0-3    magic "LMSP"
    bytes 4-5    version, u16, currently 1
    bytes 6-9    n_frames, u32
    bytes 10-13  n_mels, u32
    bytes 14-17  sample_rate, u32
    bytes 18-21  hop_length, u32
    bytes 22-    payload: n_frames * n_mels float32 values, time-major

The payload is float32, so write -> read is bit-exact for float32 data and
rounds once for wider inputs.

Curve CSV: header ``bin,weight_db``, one row per mel bin, weights at 9
significant digits.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .augment import FilterCurve
from .spectro import LogMelSpectrogram

MAGIC = b"LMSP"
VERSION = 1
_HEADER = struct.Struct("<4sHIIII")
HEADER_SIZE = _HEADER.size  # 22 bytes

CURVE_CSV_HEADER = "bin,weight_db"


class SpectrogramFileError(ValueError):
    """Base error for malformed LMSP files."""


class BadMagicError(SpectrogramFileError):
    pass


class VersionMismatchError(SpectrogramFileError):
    pass


class TruncatedPayloadError(SpectrogramFileError):
    pass


def spectrogram_to_bytes(spec: LogMelSpectrogram) -> bytes:
    header = _HEADER.pack(
        MAGIC, VERSION, spec.n_frames, spec.n_mels, spec.sample_rate, spec.hop_length
    )
    payload = np.ascontiguousarray(spec.values, dtype="<f4").tobytes()
    return header + payload


def spectrogram_from_bytes(data: bytes) -> LogMelSpectrogram:
    if len(data) < HEADER_SIZE:
        raise TruncatedPayloadError(f"file is {len(data)} bytes, header needs {HEADER_SIZE}")
    magic, version, n_frames, n_mels, sample_rate, hop_length = _HEADER.unpack_from(data, 0)
    if magic != MAGIC:
        raise BadMagicError(f"bad magic {magic!r}, expected {MAGIC!r}")
    if version != VERSION:
        raise VersionMismatchError(f"unsupported version {version}, expected {VERSION}")
    expected = n_frames * n_mels * 4
    payload = data[HEADER_SIZE:]
    if len(payload) != expected:
        raise TruncatedPayloadError(
            f"payload is {len(payload)} bytes, header promises {expected}"
        )
    values = np.frombuffer(payload, dtype="<f4").reshape(n_frames, n_mels).copy()
    return LogMelSpectrogram(values, sample_rate=sample_rate, hop_length=hop_length)


def write_spectrogram(spec: LogMelSpectrogram, path: str | Path) -> None:
    """Write a spectrogram as an LMSP file (payload stored as float32)."""
    Path(path).write_bytes(spectrogram_to_bytes(spec))


def read_spectrogram(path: str | Path) -> LogMelSpectrogram:
    """Read an LMSP file.

    Raises:
        BadMagicError, VersionMismatchError, TruncatedPayloadError: on the
            corresponding malformations.
    """
    return spectrogram_from_bytes(Path(path).read_bytes())


def write_curve_csv(curve: FilterCurve | np.ndarray, path: str | Path) -> None:
    """Write per-bin curve weights as CSV with 9 significant digits."""
    weights = curve.weights_db if isinstance(curve, FilterCurve) else np.asarray(curve)
    lines = [CURVE_CSV_HEADER]
    lines.extend(f"{i},{w:.9g}" for i, w in enumerate(weights))
    Path(path).write_text("\n".join(lines) + "\n")


def read_curve_csv(path: str | Path) -> np.ndarray:
    """Read a curve CSV back into a weight vector."""
    lines = [line for line in Path(path).read_text().splitlines() if line]
    if not lines or lines[0] != CURVE_CSV_HEADER:
        raise ValueError(f"{path}: expected header {CURVE_CSV_HEADER!r}")
    weights = []
    for i, line in enumerate(lines[1:]):
        bin_str, _, weight_str = line.partition(",")
        if int(bin_str) != i:
            raise ValueError(f"{path}: bins must be consecutive from 0, got {bin_str} at row {i}")
        weights.append(float(weight_str))
    return np.asarray(weights, dtype=np.float64)

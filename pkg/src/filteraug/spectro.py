"""Waveform to log-mel spectrogram pipeline.

Fixed conventions: frames start at sample 0 with no centering or padding, so
the frame count is exactly ``1 + floor((n_samples - win_length) / hop_length)``;
power is converted to dB as ``10 * log10`` with a configurable floor; the mel
scale uses the HTK formula ``2595 * log10(1 + f / 700)``. Everything here is a
pure function of its inputs (no randomness, safe to call from multiple
threads).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_DB_FLOOR = -100.0


@dataclass(frozen=True)
class Waveform:
    """A mono sample buffer with its sample rate in Hz.

    Samples are dimensionless amplitudes, nominally in [-1, 1].
    """

    samples: np.ndarray
    sample_rate: int

    def __post_init__(self) -> None:
        samples = np.asarray(self.samples, dtype=np.float64)
        if samples.ndim != 1:
            raise ValueError(f"samples must be 1-D, got shape {samples.shape}")
        if self.sample_rate <= 0:
            raise ValueError(f"sample_rate must be positive, got {self.sample_rate}")
        object.__setattr__(self, "samples", samples)

    @property
    def duration(self) -> float:
        return len(self.samples) / self.sample_rate


@dataclass(frozen=True)
class MelFilterbank:
    """Triangular mel filters as an (n_mels, n_fft//2 + 1) weight matrix.

    ``center_frequencies`` holds each filter's peak position in Hz.
    """

    weights: np.ndarray
    center_frequencies: np.ndarray
    f_min: float
    f_max: float

    @property
    def n_mels(self) -> int:
        return self.weights.shape[0]

    @property
    def n_freq_bins(self) -> int:
        return self.weights.shape[1]


@dataclass(frozen=True)
class LogMelSpectrogram:
    """A (n_frames, n_mels) matrix of mel-band power in dB."""

    values: np.ndarray
    sample_rate: int
    hop_length: int

    def __post_init__(self) -> None:
        values = np.asarray(self.values)
        if values.ndim != 2:
            raise ValueError(f"values must be 2-D (frames x mel bins), got shape {values.shape}")
        object.__setattr__(self, "values", values)

    @property
    def n_frames(self) -> int:
        return self.values.shape[0]

    @property
    def n_mels(self) -> int:
        return self.values.shape[1]

    def with_values(self, values: np.ndarray) -> "LogMelSpectrogram":
        """Copy of this spectrogram with the value matrix replaced."""
        return LogMelSpectrogram(values, self.sample_rate, self.hop_length)


@dataclass(frozen=True)
class SpectrogramConfig:
    """STFT and mel parameters for the waveform pipeline."""

    n_fft: int = 2048
    win_length: int = 2048
    hop_length: int = 256
    n_mels: int = 128
    f_min: float = 0.0
    f_max: float = 8000.0
    db_floor: float = DEFAULT_DB_FLOOR


def normalize_peak(w: Waveform) -> Waveform:
    """Scale samples so the absolute maximum equals one.

    An all-zero signal is returned unchanged.
    """
    peak = float(np.max(np.abs(w.samples))) if len(w.samples) else 0.0
    if peak == 0.0:
        return w
    return Waveform(w.samples / peak, w.sample_rate)


def _window(kind: str, length: int) -> np.ndarray:
    if kind == "hann":
        # periodic form, the usual STFT analysis window
        return 0.5 - 0.5 * np.cos(2.0 * np.pi * np.arange(length) / length)
    if kind == "rectangular":
        return np.ones(length)
    raise ValueError(f"unknown window {kind!r}")


def stft_power(
    w: Waveform,
    n_fft: int = 2048,
    hop_length: int = 256,
    win_length: int = 2048,
    window: str = "hann",
) -> np.ndarray:
    """Power spectrogram of a waveform.

    Frames of ``win_length`` samples are taken every ``hop_length`` samples
    starting at sample 0, windowed, zero-padded to ``n_fft`` and transformed;
    entry [t, k] is the squared DFT magnitude of frame t at bin k.

    Args:
        w: Input waveform.
        n_fft: DFT size; output has ``n_fft // 2 + 1`` frequency bins.
        hop_length: Samples between frame starts.
        win_length: Samples per frame.
        window: "hann" (default) or "rectangular".

    Returns:
        Array of shape (n_frames, n_fft // 2 + 1).
    """
    if not (n_fft >= win_length >= hop_length >= 1):
        raise ValueError(
            f"need n_fft >= win_length >= hop_length >= 1, got {n_fft}, {win_length}, {hop_length}"
        )
    x = w.samples
    if len(x) < win_length:
        raise ValueError("input too short: signal shorter than one analysis window")
    n_frames = 1 + (len(x) - win_length) // hop_length
    offsets = hop_length * np.arange(n_frames)
    frames = x[offsets[:, None] + np.arange(win_length)] * _window(window, win_length)
    spectrum = np.fft.rfft(frames, n=n_fft, axis=1)
    return np.abs(spectrum) ** 2


def hz_to_mel(f: float | np.ndarray) -> float | np.ndarray:
    return 2595.0 * np.log10(1.0 + np.asarray(f, dtype=np.float64) / 700.0)


def mel_to_hz(m: float | np.ndarray) -> float | np.ndarray:
    return 700.0 * (10.0 ** (np.asarray(m, dtype=np.float64) / 2595.0) - 1.0)


def mel_filterbank(
    sample_rate: int,
    n_fft: int = 2048,
    n_mels: int = 128,
    f_min: float = 0.0,
    f_max: float | None = None,
) -> MelFilterbank:
    """Build triangular mel filters with centers equally spaced on the mel scale.

    Args:
        sample_rate: Sample rate of the audio the filterbank will apply to.
        n_fft: DFT size of the power spectrogram the filterbank multiplies.
        n_mels: Number of mel bands.
        f_min: Lower edge of the lowest filter, Hz.
        f_max: Upper edge of the highest filter, Hz; defaults to sample_rate / 2.

    Raises:
        ValueError: on an invalid frequency range, or when n_mels is too large
            for the DFT resolution and a filter row would be all-zero.
    """
    if f_max is None:
        f_max = sample_rate / 2.0
    if not (0.0 <= f_min < f_max <= sample_rate / 2.0):
        raise ValueError(f"need 0 <= f_min < f_max <= sample_rate/2, got [{f_min}, {f_max}]")
    if n_mels < 1:
        raise ValueError(f"n_mels must be >= 1, got {n_mels}")

    mel_edges = np.linspace(hz_to_mel(f_min), hz_to_mel(f_max), n_mels + 2)
    hz_edges = mel_to_hz(mel_edges)
    lower, center, upper = hz_edges[:-2], hz_edges[1:-1], hz_edges[2:]

    fft_freqs = np.arange(n_fft // 2 + 1) * (sample_rate / n_fft)
    rising = (fft_freqs[None, :] - lower[:, None]) / (center - lower)[:, None]
    falling = (upper[:, None] - fft_freqs[None, :]) / (upper - center)[:, None]
    weights = np.maximum(0.0, np.minimum(rising, falling))

    if np.any(weights.max(axis=1) <= 0.0):
        raise ValueError(
            f"n_mels={n_mels} too large for n_fft={n_fft} at {sample_rate} Hz: "
            "a filter row has no nonzero entry"
        )
    return MelFilterbank(weights=weights, center_frequencies=center, f_min=f_min, f_max=f_max)


def log_mel(
    power: np.ndarray,
    fb: MelFilterbank,
    db_floor: float = DEFAULT_DB_FLOOR,
    *,
    sample_rate: int,
    hop_length: int,
) -> LogMelSpectrogram:
    """Pool a power spectrogram through a mel filterbank and convert to dB.

    Entry [t, f] is ``max(10 * log10(sum_k fb[f, k] * power[t, k]), db_floor)``;
    the floor keeps silent frames finite.

    Args:
        power: Non-negative (n_frames, n_fft // 2 + 1) power spectrogram.
        fb: Filterbank whose bin count matches the power matrix.
        db_floor: Lower bound applied to the dB values.
        sample_rate: Carried onto the result for provenance.
        hop_length: Carried onto the result for provenance.
    """
    power = np.asarray(power, dtype=np.float64)
    if power.ndim != 2 or power.shape[1] != fb.n_freq_bins:
        raise ValueError(
            f"power shape {power.shape} does not match filterbank with {fb.n_freq_bins} bins"
        )
    if np.any(power < 0.0):
        raise ValueError("power matrix must be non-negative")
    mel_power = power @ fb.weights.T
    with np.errstate(divide="ignore"):
        values = 10.0 * np.log10(mel_power)
    values = np.maximum(values, db_floor)
    return LogMelSpectrogram(values, sample_rate=sample_rate, hop_length=hop_length)


def waveform_to_log_mel(w: Waveform, config: SpectrogramConfig = SpectrogramConfig()) -> LogMelSpectrogram:
    """Full pipeline: STFT power, mel pooling, dB conversion."""
    power = stft_power(w, n_fft=config.n_fft, hop_length=config.hop_length, win_length=config.win_length)
    fb = mel_filterbank(
        w.sample_rate,
        n_fft=config.n_fft,
        n_mels=config.n_mels,
        f_min=config.f_min,
        f_max=config.f_max,
    )
    return log_mel(
        power, fb, config.db_floor, sample_rate=w.sample_rate, hop_length=config.hop_length
    )

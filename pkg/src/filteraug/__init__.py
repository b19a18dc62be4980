"""Spectrogram-domain audio augmentation toolkit.

Random per-band filter curves (step, linear, mixed) plus frequency/time
masking baselines, a waveform-to-log-mel pipeline, deterministic seeded
sampling, file formats and a batch CLI.
"""

from .augment import (
    AugmentConfig,
    FilterCurve,
    FilterType,
    MaskConfig,
    apply_curve,
    build_linear_curve,
    build_step_curve,
    filter_augment,
    frequency_mask,
    sample_band_count,
    sample_boundaries,
    sample_weights,
    time_mask,
)
from .formats import (
    BadMagicError,
    SpectrogramFileError,
    TruncatedPayloadError,
    VersionMismatchError,
    read_curve_csv,
    read_spectrogram,
    write_curve_csv,
    write_spectrogram,
)
from .presets import AUGMENT_PRESETS, MASK_PRESETS, PRESET_NAMES
from .render import RenderSpec, render_curve, render_spectrogram
from .rng import DEFAULT_SEED, split_seed, stream
from .spectro import (
    LogMelSpectrogram,
    MelFilterbank,
    SpectrogramConfig,
    Waveform,
    log_mel,
    mel_filterbank,
    normalize_peak,
    stft_power,
    waveform_to_log_mel,
)
from .wav import WavFormatError, read_wav

__all__ = [
    "AugmentConfig",
    "FilterCurve",
    "FilterType",
    "MaskConfig",
    "apply_curve",
    "build_linear_curve",
    "build_step_curve",
    "filter_augment",
    "frequency_mask",
    "sample_band_count",
    "sample_boundaries",
    "sample_weights",
    "time_mask",
    "BadMagicError",
    "SpectrogramFileError",
    "TruncatedPayloadError",
    "VersionMismatchError",
    "read_curve_csv",
    "read_spectrogram",
    "write_curve_csv",
    "write_spectrogram",
    "AUGMENT_PRESETS",
    "MASK_PRESETS",
    "PRESET_NAMES",
    "RenderSpec",
    "render_curve",
    "render_spectrogram",
    "DEFAULT_SEED",
    "split_seed",
    "stream",
    "LogMelSpectrogram",
    "MelFilterbank",
    "SpectrogramConfig",
    "Waveform",
    "log_mel",
    "mel_filterbank",
    "normalize_peak",
    "stft_power",
    "waveform_to_log_mel",
    "WavFormatError",
    "read_wav",
]

__version__ = "0.1.0"
